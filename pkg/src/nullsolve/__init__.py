"""
nullsolve: constructive Combinatorial Nullstellensatz solvers.

Covering polynomials modulo prime powers, multilinear lifts, Olson-type
subset problems, divisible and F-avoiding subgraphs, and an End-of-the-Line
path follower for the Nullstellensatz over F_2.
"""

__version__ = "0.1.0"
