"""Tests for fracsym.ekober."""
