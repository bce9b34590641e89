"""
Word and name helpers for ptnfa.

Words are tuples of letter symbols. On the command line a word is written
as contiguous characters when every letter is a single character, and as a
comma-separated list otherwise.
"""
from typing import Iterable, Sequence, Tuple

Word = Tuple[str, ...]


def state_sort_key(name: str) -> Tuple[int, int, str]:
    """
    Sort key for state names: integers numerically first, then text.

    Args:
        name: State name.

    Returns:
        Key placing "-2" < "-1" < "0" < "10" < "q" < "s".
    """
    try:
        return (0, int(name), "")
    except ValueError:
        return (1, 0, name)


def sorted_states(names: Iterable[str]) -> list:
    """Sort state names with state_sort_key."""
    return sorted(names, key=state_sort_key)


def as_word(letters: Iterable[str]) -> Word:
    """Normalize any iterable of letter symbols to a Word."""
    return tuple(letters)


def parse_word(text: str, alphabet: Sequence[str] = ()) -> Word:
    """
    Parse a word given on the command line.

    Args:
        text: Either contiguous single-character letters ("aba"),
            a comma-separated list ("a0,a1,a0"), or "" / "ε" for the empty word.
        alphabet: Letters of the target automaton; when any of them is longer
            than one character the comma form is required.

    Returns:
        The parsed word.
    """
    text = text.strip()
    if text in ("", "ε", "eps"):
        return ()

    multi_char = any(len(letter) > 1 for letter in alphabet)
    if "," in text or multi_char:
        return tuple(part.strip() for part in text.split(",") if part.strip())
    return tuple(text)


def format_word(word: Sequence[str]) -> str:
    """
    Render a word the way parse_word reads it.

    Args:
        word: Letters.

    Returns:
        "ε" for the empty word, contiguous text for one-character letters,
        comma-separated text otherwise.
    """
    if not word:
        return "ε"
    if all(len(letter) == 1 for letter in word):
        return "".join(word)
    return ",".join(word)


def reverse_word(word: Sequence[str]) -> Word:
    """Return the reversal of a word."""
    return tuple(reversed(tuple(word)))
