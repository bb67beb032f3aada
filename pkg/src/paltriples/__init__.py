"""Pythagorean triples whose components are decimal palindromes."""

__version__ = "0.1.0"
