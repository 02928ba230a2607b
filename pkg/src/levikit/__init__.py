"""
levikit - invariant Levi decompositions of graded Lie algebras

This package computes, for a finite-dimensional Lie algebra over the rationals together with
a grading or a commuting family of semisimple derivations, a Levi decomposition whose Levi
subalgebra is invariant under the grading, and emits certificates that can be checked
independently.
"""

__version__ = "0.1.0"
