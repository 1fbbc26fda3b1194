"""Euclid-reduced 2x2 matrices, sublattice sails and their counting theory."""

try:
    from ._euclidsail import *  # noqa: F401,F403
except ImportError:  # extension on sys.path rather than inside the package
    from _euclidsail import *  # noqa: F401,F403
