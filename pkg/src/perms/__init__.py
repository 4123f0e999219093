"""d-dimensional permutation package."""
