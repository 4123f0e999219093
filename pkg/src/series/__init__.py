"""Truncated bivariate power series and closed forms."""
