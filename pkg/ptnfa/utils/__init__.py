"""Utility functions for ptnfa."""
from ptnfa.utils.hashing import compute_document_id, compute_file_hash
from ptnfa.utils.logging import get_logger, log_progress, set_log_level
from ptnfa.utils.words import (
    Word,
    as_word,
    format_word,
    parse_word,
    reverse_word,
    sorted_states,
    state_sort_key,
)

__all__ = [
    # Hashing
    "compute_document_id",
    "compute_file_hash",
    # Logging
    "get_logger",
    "log_progress",
    "set_log_level",
    # Words
    "Word",
    "as_word",
    "format_word",
    "parse_word",
    "reverse_word",
    "sorted_states",
    "state_sort_key",
]
