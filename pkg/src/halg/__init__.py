"""halg: exact computer algebra for bialgebroids over noncommutative bases.

Finite-dimensional algebras and A^e-rings by structure constants, balanced
tensor products and Takeuchi subspaces, left/right bialgebroid axiom checks,
Hopf-Galois inversion and translation-map identities, the two duals with
their right-bialgebroid structures, the linking morphisms between the duals,
comodule equivalences, and a gallery of worked instances, all over exact
rational or prime-field arithmetic.
"""

__version__ = "0.1.0"
