"""Tests for fracsym.prolong."""
