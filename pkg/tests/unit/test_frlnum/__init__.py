"""Tests for fracsym.frlnum."""
