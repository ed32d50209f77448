"""The low-error ray construction.

Every point picks its parent locally, using only its own coordinates, so the
whole system is embarrassingly parallel and any truncation of a larger
system equals the directly-built smaller one.

The rule routes rays toward the *midlines of zones*.  Fix the ring of
diagonals ``2^i < d <= 2^(i+1)``.  The lattice points ``(j, 2^i - j)`` of
diagonal ``2^i`` define lines through the origin, and zone ``(i, j)`` is the
part of the ring between the lines of ``j`` and ``j + 1`` (lower line
excluded, upper included -- ties on a line count as below it).  Interior
points of the ring fall into exactly one zone, except the single point with
``y == 2`` on a power-of-two diagonal, which the tie direction leaves
zoneless.  A point picks whichever candidate parent is horizontally closer
to the midline of its zone on the parent's diagonal; earlier special cases
keep axis-hugging rays straight and restart the pattern on power-of-two
diagonals, where splits sit exactly at odd interior x.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Optional

from .geometry import GridPoint
from .system import DOWN, LEFT, ParentChoice, RaySystem

__all__ = [
    "ZoneId",
    "zone_of",
    "zone_midpoint_x",
    "zone_lattice_count",
    "pick_parent",
    "build_system",
    "zone_confinement_violation",
]


class ZoneId(NamedTuple):
    """A zone: ``level`` names the ring, ``index`` the slot within it.

    Ring ``level = i`` covers diagonals ``2^i < d <= 2^(i+1)``; valid slots
    are ``1 <= index <= 2^i - 2``.
    """

    level: int
    index: int


def _is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def _ring_level(d: int) -> int:
    """The i with ``2^i < d <= 2^(i+1)`` (requires ``d >= 2``)."""
    return (d - 1).bit_length() - 1


def zone_of(p: GridPoint) -> Optional[ZoneId]:
    """The zone containing ``p``, or None.

    Only points with both coordinates at least 2 and diagonal above 4 live
    in zones.  Of those, exactly the points with ``y == 2`` on a
    power-of-two diagonal are zoneless (they sit on the closed lower
    boundary of the ring where the tie direction excludes them).
    """
    x, y = p
    d = x + y
    if d == 0:
        raise ValueError("the origin belongs to every ray and has no zone")
    if x < 2 or y < 2 or d <= 4:
        return None
    i = _ring_level(d)
    j = ((x << i)) // d
    if j < 1 or j > (1 << i) - 2:
        return None
    return ZoneId(i, j)


def zone_midpoint_x(zone: ZoneId, d: int) -> Fraction:
    """x-coordinate of the middle of a zone on diagonal ``d`` of its ring.

    The zone's boundary lines cross the diagonal at ``d*j/2^i`` and
    ``d*(j+1)/2^i``; on a fixed diagonal the L-infinity midpoint is the
    plain average, ``d*(2j+1)/2^(i+1)``.
    """
    i, j = zone
    if j < 1 or j > (1 << i) - 2:
        raise ValueError(f"invalid zone {zone}")
    if not (1 << i) < d <= (1 << (i + 1)):
        raise ValueError(f"diagonal {d} is not in the ring of level {i}")
    return Fraction(d * (2 * j + 1), 1 << (i + 1))


def zone_lattice_count(zone: ZoneId, d: int) -> int:
    """Number of lattice points of zone ``zone`` on diagonal ``d``.

    Always 1 or 2: the zone spans strictly more than one and at most two
    units of x on any diagonal of its ring.
    """
    i, j = zone
    if not (1 << i) < d <= (1 << (i + 1)):
        raise ValueError(f"diagonal {d} is not in the ring of level {i}")
    # x in the zone  <=>  j <= x * 2^i / d < j + 1
    scale = 1 << i
    lo = (j * d + scale - 1) // scale  # ceil(j*d / 2^i)
    hi = ((j + 1) * d + scale - 1) // scale  # ceil((j+1)*d / 2^i)
    return hi - lo


def _choice_code(x: int, y: int, tie: int) -> int:
    """Parent choice for ``(x, y)``; ``tie`` breaks exact midline ties."""
    if x <= 1:
        if y == 0:  # (1, 0): the only x <= 1 point that goes left
            return LEFT
        return DOWN
    if y <= 1:
        return LEFT
    d = x + y
    if y == 2 and d & (d - 1) == 0:
        return DOWN
    e = d - 1
    if e & (e - 1) == 0:
        # Restart diagonal: take whichever candidate has odd x.
        return DOWN if x & 1 else LEFT
    # Steer toward the midline of the zone on the parent diagonal.
    i = (d - 1).bit_length() - 1
    j = (x << i) // d
    # Compare |x - mid| with |x-1 - mid| where mid = e*(2j+1) / 2^(i+1),
    # scaled by 2^(i+1) to stay in integers.
    mid = e * (2 * j + 1)
    down_dist = abs((x << (i + 1)) - mid)
    left_dist = abs(((x - 1) << (i + 1)) - mid)
    if down_dist < left_dist:
        return DOWN
    if left_dist < down_dist:
        return LEFT
    return tie


def pick_parent(p: GridPoint, tie: ParentChoice = ParentChoice.DOWN) -> GridPoint:
    """Parent of ``p`` under the construction rule.

    ``tie`` selects the candidate used when both are exactly equidistant
    from the zone midline (the default prefers the lower parent).
    """
    x, y = p
    if x < 0 or y < 0 or (x == 0 and y == 0):
        raise ValueError(f"no parent for point {GridPoint(x, y)}")
    if _choice_code(x, y, tie.code) == DOWN:
        return GridPoint(x, y - 1)
    return GridPoint(x - 1, y)


def build_system(bound: int, tie: ParentChoice = ParentChoice.DOWN) -> RaySystem:
    """Ray system over ``1 <= x + y <= bound`` built by the local rule."""
    if bound < 0:
        raise ValueError(f"bound must be nonnegative, got {bound}")
    tie_code = tie.code
    code = _choice_code
    rows: list[bytes] = [b""]
    for d in range(1, bound + 1):
        row = bytearray(d + 1)
        for x in range(d + 1):
            row[x] = code(x, d - x, tie_code)
        rows.append(bytes(row))
    return RaySystem.from_rows(bound, rows, validate=False)


def zone_confinement_violation(
    sys_: RaySystem, target: GridPoint
) -> Optional[tuple[GridPoint, Optional[ZoneId], ZoneId]]:
    """Check that the ray to ``target`` stays inside zones cut by its line.

    Walking the ray backwards from a target that has a zone, every visited
    point with both coordinates above 1 must lie in the zone of its own ring
    that the target's origin line passes through.  Returns None when the ray
    conforms, else ``(point, zone found, zone expected)``.  Zoneless points
    encountered on the way (the ``y == 2`` power-of-two corner) are skipped:
    their parent drops to ``y == 1``, where the walk stops anyway.
    """
    start = GridPoint(*target)
    if zone_of(start) is None:
        raise ValueError(f"target {start} has no zone")
    tx = start.x
    td = start.x + start.y
    rows = sys_.rows
    x, y = start
    while x > 1 and y > 1:
        zone = zone_of(GridPoint(x, y))
        if zone is not None:
            expected = ZoneId(zone.level, ((tx << zone.level)) // td)
            if zone != expected:
                return (GridPoint(x, y), zone, expected)
        if rows[x + y][x] == DOWN:
            y -= 1
        else:
            x -= 1
    return None
