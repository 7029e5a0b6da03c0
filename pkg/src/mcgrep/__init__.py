"""Exact evaluation and certification of a faithful (g^2 - 1)-dimensional
linear representation of the hyperelliptic mapping class group of a
nonorientable surface of genus g >= 4."""

__version__ = "0.1.0"
