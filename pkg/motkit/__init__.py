"""
motkit: optimal transport and martingale optimal transport between
finitely supported measures on R^d, plus an experiment harness that
certifies the instability of martingale transport in dimension d >= 2.
"""

__version__ = "0.1.0"
