"""Computable invariants of diagrams and presentations."""
