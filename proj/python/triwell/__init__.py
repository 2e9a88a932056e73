"""Entanglement generation for indistinguishable fermions in tunnel-coupled wells."""

from ._triwell import *  # noqa: F401,F403
from ._triwell import __doc__  # noqa: F401

__version__ = "0.1.0"
