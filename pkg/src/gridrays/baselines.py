"""Reference schemes the main construction is measured against.

Two baselines bracket the design space.  Per-target rounding digitizes each
target line independently and is pointwise optimal (error at most 1/2), but
its rays do not form a tree: rays through a shared point need not share
their prefix, and :func:`find_s3_violation_rounding` hunts for the first
counterexample.  The L-path system is a genuine tree satisfying every
structural check -- every ray hugs the y-axis and then walks right -- but
pays for it with error that grows linearly in the bound.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from .geometry import ORIGIN, GridPoint
from .system import DOWN, LEFT, DigitalRay, RaySystem, iter_domain

__all__ = [
    "rounding_ray",
    "RoundingScheme",
    "RoundingS3Witness",
    "find_s3_violation_rounding",
    "lpath_system",
]


def rounding_ray(target: GridPoint) -> DigitalRay:
    """Digitize the segment to ``target`` by rounding per diagonal.

    On each diagonal ``d`` up to the target's, pick the lattice point whose
    x is ``d * target.x / (target.x + target.y)`` rounded to the nearest
    integer, with exact halves rounded down.  Consecutive picks always
    differ by a unit step, so the result is a staircase path, but distinct
    targets digitize independently.
    """
    tx, ty = target
    if tx < 0 or ty < 0:
        raise ValueError(f"target {GridPoint(tx, ty)} outside the first quadrant")
    td = tx + ty
    path = [ORIGIN]
    for d in range(1, td + 1):
        # round-half-down(d*tx / td) = ceil((2*d*tx - td) / (2*td))
        x = (2 * d * tx + td - 1) // (2 * td)
        path.append(GridPoint(x, d - x))
    return path


class RoundingScheme:
    """Ray-provider facade over :func:`rounding_ray` for the verifier."""

    def __init__(self, bound: int):
        if bound < 0:
            raise ValueError("bound must be nonnegative")
        self.bound = bound

    def ray(self, p: GridPoint) -> DigitalRay:
        q = GridPoint(*p)
        if q.x < 0 or q.y < 0 or q.x + q.y > self.bound:
            raise ValueError(f"point {q} outside the bound-{self.bound} domain")
        return rounding_ray(q)


class RoundingS3Witness(NamedTuple):
    """First (target, on-ray point) whose rays disagree, and where."""

    target: GridPoint
    subpoint: GridPoint
    divergence: GridPoint


def find_s3_violation_rounding(bound: int) -> Optional[RoundingS3Witness]:
    """First prefix-consistency failure of the rounding scheme, if any.

    Scans targets by (diagonal, x), then points along each ray from the
    origin, and compares the ray of each on-ray point against the
    corresponding prefix; the witness reports the first differing position.
    Returns None when every pair agrees (true for bounds up to 2).
    """
    for p in iter_domain(bound):
        path = rounding_ray(p)
        for i in range(1, len(path) - 1):
            s = path[i]
            sub = rounding_ray(s)
            for a, b in zip(sub, path):
                if a != b:
                    return RoundingS3Witness(p, s, a)
    return None


def lpath_system(bound: int) -> RaySystem:
    """The tree where every interior point points left.

    Rays climb the y-axis and then walk right along their target's row.  The
    system has no inner leaves at all, and its worst error is attained
    against the slope-one target: roughly a quarter of the bound.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    rows: list[bytes] = [b""]
    for d in range(1, bound + 1):
        row = bytearray(d + 1)  # zero-filled: everything LEFT ...
        row[0] = DOWN  # ... except the forced y-axis choice
        rows.append(bytes(row))
    return RaySystem.from_rows(bound, rows, validate=False)
