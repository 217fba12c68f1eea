"""Multilinear lifts of covering polynomials and Nullstellensatz solvers."""
