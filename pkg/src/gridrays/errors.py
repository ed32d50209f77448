"""Exact error measurement for ray systems.

The distance model: a ray aims at its target's origin line, and the error
of a ray point ``v`` against target ``t`` is measured along ``v``'s own
diagonal -- the L-infinity distance from ``v`` to the intersection of the
line through ``t`` with that diagonal, which reduces to
``|v.x - D(v) * t.x / D(t)|``.  All values are exact rationals.

``max_error`` runs in time linear in the number of domain points rather
than summing ray lengths: the error of ``v`` against any target in its
subtree is a convex function of the target's x-fraction ``t.x / D(t)``, so
only the subtree's extreme fractions matter, and those propagate bottom-up
one diagonal at a time.  Ties are resolved deterministically -- smallest
(diagonal, x) witness first, then smallest (diagonal, x) target -- so
reports are reproducible regardless of evaluation order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .geometry import ORIGIN, GridPoint
from .system import DOWN, LEFT, RaySystem

__all__ = [
    "ErrorReport",
    "DiagonalError",
    "point_error_linf",
    "point_error_l2",
    "ray_error",
    "per_diagonal_errors",
    "max_error",
]


@dataclass(frozen=True)
class ErrorReport:
    """Worst error of a whole system, with a reproducible witness."""

    max_error: Fraction
    witness_point: GridPoint
    witness_target: GridPoint
    diagonal: int


class DiagonalError(NamedTuple):
    """Worst error attained by any ray point on one diagonal."""

    diagonal: int
    error: Fraction
    witness: GridPoint
    target: GridPoint


def point_error_linf(v: GridPoint, target: GridPoint) -> Fraction:
    """L-infinity distance from ``v`` to the target line along ``v``'s diagonal."""
    tx, ty = target
    if tx == 0 and ty == 0:
        raise ValueError("target must not be the origin")
    td = tx + ty
    vx, vy = v
    return Fraction(abs(vx * td - (vx + vy) * tx), td)


def point_error_l2(v: GridPoint, target: GridPoint) -> Fraction:
    """Squared Euclidean distance from ``v`` to the segment origin--target.

    The foot of the perpendicular onto the target line is clamped to the
    segment, so points beyond either endpoint measure to the endpoint.
    """
    tx, ty = target
    if tx == 0 and ty == 0:
        raise ValueError("target must not be the origin")
    vx, vy = v
    tt = tx * tx + ty * ty
    s = Fraction(vx * tx + vy * ty, tt)
    if s < 0:
        s = Fraction(0)
    elif s > 1:
        s = Fraction(1)
    dx = vx - s * tx
    dy = vy - s * ty
    return dx * dx + dy * dy


def ray_error(sys_: RaySystem, target: GridPoint) -> Fraction:
    """Worst point error along the ray to ``target``."""
    t = GridPoint(*target)
    if t == ORIGIN:
        return Fraction(0)
    td = t.x + t.y
    worst = 0
    for v in sys_.ray(t):
        num = abs(v.x * td - (v.x + v.y) * t.x)
        if num > worst:
            worst = num
    return Fraction(worst, td)


def per_diagonal_errors(sys_: RaySystem) -> list[DiagonalError]:
    """Worst error per diagonal, exact, with deterministic witnesses.

    One bottom-up pass: for each point the minimum and maximum x-fraction
    over its subtree are merged from its children on the next diagonal
    (fractions are kept as unreduced (t.x, D(t)) pairs, so the pair *is*
    the witness target).  All comparisons cross-multiply integers.
    """
    bound = sys_.bound
    rows = sys_.rows
    out: list[DiagonalError] = []
    # Extremes for the diagonal above the current one, as parallel lists of
    # numerators (t.x) and denominators (D(t)).
    up_amin: list[int] = []
    up_bmin: list[int] = []
    up_amax: list[int] = []
    up_bmax: list[int] = []
    for d in range(bound, 0, -1):
        n = d + 1
        amin = list(range(n))
        bmin = [d] * n
        amax = list(range(n))
        bmax = [d] * n
        if d < bound:
            row = rows[d + 1]
            for x in range(n):
                # child above: (x, d+1-x) chose DOWN
                if row[x] == DOWN:
                    a, b = up_amin[x], up_bmin[x]
                    ca, cb = amin[x], bmin[x]
                    lhs = a * cb
                    rhs = ca * b
                    if lhs < rhs or (lhs == rhs and (b, a) < (cb, ca)):
                        amin[x], bmin[x] = a, b
                    a, b = up_amax[x], up_bmax[x]
                    ca, cb = amax[x], bmax[x]
                    lhs = a * cb
                    rhs = ca * b
                    if lhs > rhs or (lhs == rhs and (b, a) < (cb, ca)):
                        amax[x], bmax[x] = a, b
                # child to the right: (x+1, d-x) chose LEFT
                if row[x + 1] == LEFT:
                    a, b = up_amin[x + 1], up_bmin[x + 1]
                    ca, cb = amin[x], bmin[x]
                    lhs = a * cb
                    rhs = ca * b
                    if lhs < rhs or (lhs == rhs and (b, a) < (cb, ca)):
                        amin[x], bmin[x] = a, b
                    a, b = up_amax[x + 1], up_bmax[x + 1]
                    ca, cb = amax[x], bmax[x]
                    lhs = a * cb
                    rhs = ca * b
                    if lhs > rhs or (lhs == rhs and (b, a) < (cb, ca)):
                        amax[x], bmax[x] = a, b
        # Best (= worst error) point on this diagonal, smallest x wins ties.
        best_num = 0
        best_den = 1
        best_x = 0
        best_t = (0, d)
        for x in range(n):
            e1n = abs(x * bmin[x] - d * amin[x])
            e1d = bmin[x]
            e2n = abs(x * bmax[x] - d * amax[x])
            e2d = bmax[x]
            if e1n * e2d >= e2n * e1d:
                en, ed, ta, tb = e1n, e1d, amin[x], bmin[x]
                if e1n * e2d == e2n * e1d and (bmax[x], amax[x]) < (bmin[x], amin[x]):
                    ta, tb = amax[x], bmax[x]
                    en, ed = e2n, e2d
            else:
                en, ed, ta, tb = e2n, e2d, amax[x], bmax[x]
            if en * best_den > best_num * ed:
                best_num, best_den, best_x, best_t = en, ed, x, (ta, tb)
        out.append(
            DiagonalError(
                d,
                Fraction(best_num, best_den),
                GridPoint(best_x, d - best_x),
                GridPoint(best_t[0], best_t[1] - best_t[0]),
            )
        )
        up_amin, up_bmin, up_amax, up_bmax = amin, bmin, amax, bmax
    # Diagonal 0: the origin is on every ray with error exactly 0.  Use the
    # system-wide minimum-fraction target to keep the row deterministic.
    if bound >= 1:
        a, b = up_amin[0], up_bmin[0]
        a2, b2 = up_amin[1], up_bmin[1]
        if a2 * b < a * b2 or (a2 * b == a * b2 and (b2, a2) < (b, a)):
            a, b = a2, b2
        origin_target = GridPoint(a, b - a)
    else:
        origin_target = ORIGIN
    out.append(DiagonalError(0, Fraction(0), ORIGIN, origin_target))
    out.reverse()
    return out


def max_error(sys_: RaySystem) -> ErrorReport:
    """Worst error over every (ray point, target) pair of the system."""
    if sys_.bound == 0:
        return ErrorReport(Fraction(0), ORIGIN, ORIGIN, 0)
    rows = per_diagonal_errors(sys_)
    best = rows[0]
    for row in rows[1:]:
        if row.error > best.error:
            best = row
    return ErrorReport(best.error, best.witness, best.target, best.diagonal)
