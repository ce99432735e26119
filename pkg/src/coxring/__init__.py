"""Exact computation of homogeneous coordinate rings.

Subpackages cover exact rational arithmetic (exactmath), finitely generated
abelian groups and gradings (grading), glued rational curves and their
divisors (ratcurve), graded section algebras and presentations (coxalg),
toric fans (toric), and the command line interface (cli).
"""

__version__ = "0.1.0"
