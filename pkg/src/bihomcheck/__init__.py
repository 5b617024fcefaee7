"""Exact verification toolkit for BiHom algebras over quasitriangular Hopf algebras.

Represents finite-dimensional Hopf algebras, their module algebras, and
BiHom-associative/Lie structures by structure constants over the fraction
field of Q[parameters], checks every defining identity exactly, constructs
braided commutator and twist brackets, and computes ideal/series structure
theory.
"""

__version__ = "0.1.0"
