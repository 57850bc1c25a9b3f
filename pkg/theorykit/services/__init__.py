"""Deduction and graph services."""
