"""Desk-scale acceptance checks runnable from the command line."""
