"""Exhaustive enumeration over d-dimensional permutations."""
