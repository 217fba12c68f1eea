"""Typed, environment-overridable configuration for nullsolve."""
