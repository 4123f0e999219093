"""Rank, avoidability and constructive witnesses."""
