"""Exact computations with Thompson's group F: normal forms, tree pairs,
marked forests, Cayley subgraph statistics, Belk-Brown automata, flows and
group-ring equations."""

__version__ = "0.1.0"

from .element import IDENTITY, NormalForm, multiply, nf_from_word, parse_nf  # noqa: F401
from .words import format_word, parse_word  # noqa: F401
