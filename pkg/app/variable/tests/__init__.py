"""Tests for the variable module."""
