"""Enumeration, theorem verification and the counterexample registry."""
