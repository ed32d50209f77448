"""Exact primitives for lattice geometry in the first quadrant.

Everything in this module is integer or rational arithmetic.  Points live on
the integer grid, lines pass through the origin, and all comparisons are
resolved by cross-multiplication, so there is no floating point anywhere in
a correctness path.

Conventions used throughout the package:

* the *diagonal* of a point is ``x + y`` (anti-diagonal index),
* the *slope* of a nonzero point ``p`` is ``p.y / p.x``, with a vertical
  line getting the distinguished value :data:`INFINITY`,
* a point is *below* the line through ``q`` when its slope is less than or
  equal to ``q``'s slope -- ties count as below, which keeps "below or
  above" a total partition of the nonzero lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, NamedTuple, Union


class GridPoint(NamedTuple):
    """An integer lattice point."""

    x: int
    y: int

    def step_down(self) -> "GridPoint":
        return GridPoint(self.x, self.y - 1)

    def step_left(self) -> "GridPoint":
        return GridPoint(self.x - 1, self.y)

    def step_up(self) -> "GridPoint":
        return GridPoint(self.x, self.y + 1)

    def step_right(self) -> "GridPoint":
        return GridPoint(self.x + 1, self.y)

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


ORIGIN = GridPoint(0, 0)

#: A point with exact rational coordinates (intersections of lines with
#: diagonals are generally not lattice points).
RationalPoint = tuple[Fraction, Fraction]


def diagonal(p: GridPoint) -> int:
    """Index of the anti-diagonal through ``p``: simply ``x + y``."""
    return p[0] + p[1]


class _Infinity:
    """Slope of a vertical line.  Compares greater than every Fraction."""

    __slots__ = ()

    def __lt__(self, other: object) -> bool:
        return False

    def __le__(self, other: object) -> bool:
        return isinstance(other, _Infinity)

    def __gt__(self, other: object) -> bool:
        return not isinstance(other, _Infinity)

    def __ge__(self, other: object) -> bool:
        return True

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _Infinity)

    def __hash__(self) -> int:
        return hash(("gridrays", "infinite-slope"))

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = _Infinity()

Slope = Union[Fraction, _Infinity]


def _require_nonzero(p: GridPoint) -> None:
    if p[0] == 0 and p[1] == 0:
        raise ValueError("the origin does not define a slope or a line")


def slope(p: GridPoint) -> Slope:
    """Slope ``y/x`` of the line through the origin and ``p``.

    Points on the positive y-axis get :data:`INFINITY`.  Raises
    ``ValueError`` for the origin.
    """
    _require_nonzero(p)
    if p[0] == 0:
        return INFINITY
    return Fraction(p[1], p[0])


def intersect_diagonal(p: GridPoint, d: int) -> RationalPoint:
    """Where the line through the origin and ``p`` crosses diagonal ``d``.

    The intersection of ``y = (p.y/p.x) x`` with ``x + y = d`` is
    ``(d*p.x/(p.x+p.y), d*p.y/(p.x+p.y))``; the formula also covers the
    vertical line (``p.x == 0``), which meets the diagonal at ``(0, d)``.
    """
    _require_nonzero(p)
    if d < 0:
        raise ValueError("diagonal index must be nonnegative")
    dp = p[0] + p[1]
    return (Fraction(d * p[0], dp), Fraction(d * p[1], dp))


class Side(Enum):
    """Position of a point relative to a line through the origin."""

    BELOW = "below"
    ABOVE = "above"


def compare_to_line(p: GridPoint, q: GridPoint) -> Side:
    """Which side of the line through ``q`` the point ``p`` falls on.

    ``p`` is ABOVE exactly when ``slope(p) > slope(q)``; equal slopes
    (including ``p`` on the line) count as BELOW.  Both points must be
    nonzero and in the closed first quadrant.
    """
    _require_nonzero(p)
    _require_nonzero(q)
    # slope(p) > slope(q)  <=>  p.y * q.x > q.y * p.x  (valid for x >= 0,
    # and degenerate x == 0 cases resolve to the infinite slope correctly)
    return Side.ABOVE if p[1] * q[0] > q[1] * p[0] else Side.BELOW


# --------------------------------------------------------------------------
# Cones spanned by finite point sets.


@dataclass(frozen=True)
class Cone:
    """The set of rays between two extreme slopes (both lines included)."""

    top: Slope
    bottom: Slope


def _extreme_points(points: Iterable[GridPoint]) -> tuple[GridPoint, GridPoint]:
    """Return (max-slope point, min-slope point) of a nonempty point set."""
    ordered = sorted(set(points))
    if not ordered:
        raise ValueError("cone of an empty point set is undefined")
    top = bottom = ordered[0]
    _require_nonzero(top)
    for p in ordered[1:]:
        _require_nonzero(p)
        # slope(p) > slope(top)  <=>  p.y * top.x > top.y * p.x
        if p[1] * top[0] > top[1] * p[0]:
            top = p
        if p[1] * bottom[0] < bottom[1] * p[0]:
            bottom = p
    return top, bottom


def cone_of(points: Iterable[GridPoint]) -> Cone:
    """Cone spanned by a finite set of nonzero first-quadrant points."""
    top, bottom = _extreme_points(points)
    return Cone(top=slope(top), bottom=slope(bottom))


def cone_width(points: Iterable[GridPoint], d: int) -> Fraction:
    """Width of the cone of ``points`` measured along diagonal ``d``.

    This is the distance (in x, which on a fixed diagonal equals the
    L-infinity distance) between the two intersections of the extreme lines
    with the diagonal.
    """
    top, bottom = _extreme_points(points)
    if d < 0:
        raise ValueError("diagonal index must be nonnegative")
    x_top = Fraction(d * top[0], top[0] + top[1])
    x_bottom = Fraction(d * bottom[0], bottom[0] + bottom[1])
    return x_bottom - x_top


def grid_points_in_cone(points: Iterable[GridPoint], d: int) -> int:
    """Number of lattice points of diagonal ``d`` inside the cone.

    Boundary points count: the cone is closed on both extreme lines, which
    is what makes a one-point set contain its own multiples.  The count is
    always ``floor(w)`` or ``floor(w) + 1`` where ``w`` is the cone width
    on the diagonal.
    """
    top, bottom = _extreme_points(points)
    if d < 0:
        raise ValueError("diagonal index must be nonnegative")
    # x range on the diagonal: d*top.x/D(top) <= x <= d*bottom.x/D(bottom)
    tn, td = d * top[0], top[0] + top[1]
    bn, bd = d * bottom[0], bottom[0] + bottom[1]
    lo = -((-tn) // td)  # ceil(tn / td)
    hi = bn // bd  # floor(bn / bd)
    return max(0, hi - lo + 1)
