"""Unit tests for the fracsym package."""
