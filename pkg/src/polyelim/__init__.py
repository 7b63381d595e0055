"""Exact resultants and discriminants of homogeneous polynomial systems.

Five independent pipelines (Sylvester determinants, Koszul-complex
determinants, Plucker/Pfaffian closed forms, Jacobian-augmented hybrid
determinants, division-free trace expansions) compute one canonically
normalized resultant and cross-validate each other exactly, alongside the
hypergeometric series objects attached to non-Gaussian integrals.
"""

__version__ = "0.1.0"
