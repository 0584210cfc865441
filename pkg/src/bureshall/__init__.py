"""Bures-Hall ensemble: exact moment recurrences and numerical identity checks."""
