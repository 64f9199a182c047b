"""Tests for radohorn."""
