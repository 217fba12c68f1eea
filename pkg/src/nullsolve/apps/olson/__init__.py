"""Olson-type subset problems: solvers, reductions, extremal instances and the exact oracle."""
