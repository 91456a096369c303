"""Finite pseudo-BCI/BCK-algebras: checks, filters, congruences, decomposition and search."""

from ._core import *  # noqa: F401,F403
from ._core import Algebra, Error

__all__ = [name for name in dir() if not name.startswith("_")]
