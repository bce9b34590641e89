"""
Hashing utilities for ptnfa.

Reports identify their input documents by the SHA256 of the canonical
serialization, so two files describing the same automaton share a digest
regardless of list order or whitespace.
"""
import hashlib
from typing import Union


def compute_document_id(content: Union[str, bytes]) -> str:
    """
    Compute the SHA256 digest of a document.

    Args:
        content: Canonical document text or raw bytes.

    Returns:
        SHA256 hash as a lowercase hexadecimal string (64 characters).

    Raises:
        ValueError: If content is empty.
    """
    if not content:
        raise ValueError("Cannot compute document id: content is empty")

    if isinstance(content, str):
        content = content.encode("utf-8")

    return hashlib.sha256(content).hexdigest()


def compute_file_hash(file_path: str) -> str:
    """SHA256 of the raw bytes of a file, for inputs that are not automata (DIMACS)."""
    sha256 = hashlib.sha256()

    with open(file_path, "rb") as f:
        for chunk in iter(lambda: f.read(65536), b""):
            sha256.update(chunk)

    return sha256.hexdigest()
