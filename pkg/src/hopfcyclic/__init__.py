"""hopfcyclic: exact computation of Hopf-cyclic (co)homology.

Finite-dimensional Hopf algebras are given by structure constants over QQ or
a cyclotomic field; stable anti-Yetter-Drinfeld coefficient modules are
checked, not assumed; four (co)cyclic complexes are constructed with every
well-definedness condition verified and witnessed; cyclic (co)homology is
computed exactly, cross-checked against a bicomplex oracle; and the
characteristic-map pairings are evaluated on classes.
"""

__version__ = "0.1.0"
