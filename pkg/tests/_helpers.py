"""Shared sampling helpers for the test suite."""

import numpy as np

from diamondflow.geometry import DiamondSpec, NullRadialCoords, null_from_centered


def interior_pairs(rng, n, size=1.0, cap=0.9):
    """Centered null pairs (u+, u-) with u+ >= u-, capped away from the boundary."""
    u = rng.uniform(-cap * size, cap * size, (n, 2))
    lo = u.min(axis=1)
    hi = u.max(axis=1)
    return np.stack([hi, lo], axis=1)


def interior_points(rng, n, d: DiamondSpec, cap=0.9):
    """Random strictly interior diamond points as global NullRadialCoords."""
    pairs = interior_pairs(rng, n, d.size_L, cap)
    return [
        null_from_centered(up, um, (1.0, 0.0, 0.0), d)
        for up, um in pairs
    ]


def max_coord_diff(p, q):
    return max(abs(p.x0 - q.x0), abs(p.x1 - q.x1), abs(p.x2 - q.x2), abs(p.x3 - q.x3))
