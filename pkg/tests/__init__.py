"""Test suite for MultiplierLab."""
