from motkit.lp.simplex import feasible, solve

__all__ = ["feasible", "solve"]
