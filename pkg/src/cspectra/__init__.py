"""Combinatorial spectra of exact-rational weighted complete graphs."""
