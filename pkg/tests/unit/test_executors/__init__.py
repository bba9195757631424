"""Tests for the grid-line executors."""
