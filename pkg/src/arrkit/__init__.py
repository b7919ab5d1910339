"""Exact invariants of hyperplane arrangements and multiarrangements.

Submodules: exactmath, arrangement, lattice, logmodule, solomonterao,
coxeter, catalan, curves, corpus, cli.
"""

__version__ = "0.1.0"
