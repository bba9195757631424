"""Tests for fracsym.fraccore."""
