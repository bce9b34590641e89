"""Shared fixtures."""
from pathlib import Path
from typing import Callable

import pytest

from ptnfa.services.automaton import Automaton
from ptnfa.services.parser import save_automaton

FIXTURES_DIR = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES_DIR


@pytest.fixture
def write_automaton(tmp_path) -> Callable[..., str]:
    """Save an automaton under tmp_path and return the file path."""
    def write(a: Automaton, name: str = "automaton.json") -> str:
        path = tmp_path / name
        save_automaton(a, str(path))
        return str(path)
    return write
