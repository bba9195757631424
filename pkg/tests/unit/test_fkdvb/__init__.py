"""Tests for fracsym.fkdvb."""
