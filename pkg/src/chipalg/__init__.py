"""chipalg: chip-firing commutative algebra.

Toppling and parking-function ideals of multigraphs, their cellular free
resolutions and Betti numbers, Div(G)-graded Hilbert series, and a
Riemann-Roch theory for artinian monomial ideals and graph divisors.
"""

__version__ = "0.1.0"
