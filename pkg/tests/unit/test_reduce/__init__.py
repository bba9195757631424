"""Tests for fracsym.reduce."""
