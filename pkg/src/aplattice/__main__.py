"""Module entry point for python -m aplattice."""

from .cli import entry

entry()
