"""Divisible and F-avoiding subgraphs of multigraphs."""
