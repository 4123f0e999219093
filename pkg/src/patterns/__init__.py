"""Singleton, marked and general mesh patterns."""
