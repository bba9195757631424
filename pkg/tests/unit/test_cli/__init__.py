"""Tests for fracsym.cli."""
