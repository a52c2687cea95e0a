"""Brute-force oracles and property suites for locmat."""
