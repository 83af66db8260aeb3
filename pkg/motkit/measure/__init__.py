from motkit.measure.core import (
    apply_kernel,
    consolidate,
    make_measure,
    mean,
    mixture,
    pushforward_affine,
    snap_to_support,
    tv_distance,
)

__all__ = [
    "apply_kernel",
    "consolidate",
    "make_measure",
    "mean",
    "mixture",
    "pushforward_affine",
    "snap_to_support",
    "tv_distance",
]
