"""Exact computation with weakly holomorphic modular forms on Gamma_0(p):
truncated rational q-series, trace-formula cusp spaces, canonical bases,
duality pairings, and two-variable generating-function identities."""

__version__ = "0.1.0"
