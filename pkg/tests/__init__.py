"""Tests for the toricnest package."""
