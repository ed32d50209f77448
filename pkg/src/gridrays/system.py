"""Ray systems: a tree of grid paths from the origin to every point.

A :class:`RaySystem` assigns to every first-quadrant point ``p`` with
``1 <= x + y <= bound`` a single *parent*, either the point below
(``(x, y-1)``) or the point to the left (``(x-1, y)``).  Axis points have no
choice: on the y-axis the parent must be below, on the x-axis it must be to
the left.  Following parents from ``p`` down to the origin and reversing
gives the *ray* of ``p`` -- a monotone staircase path.

Storing one choice per point makes the family of rays automatically
consistent: two rays agree below any shared point because the shared point
has only one parent.  The interesting structure is therefore in *which*
parents are chosen, and the statistics exposed here (split points, inner
leaves, subtrees) describe the resulting tree shape per diagonal.

Choices are stored per diagonal as immutable ``bytes`` rows, ``rows[d][x]``
holding the choice of the point ``(x, d - x)``; this keeps even systems with
millions of points compact and cheap to slice.
"""

from __future__ import annotations

import json
from enum import Enum
from typing import Iterable, Iterator, Mapping, Sequence

from .geometry import ORIGIN, GridPoint

__all__ = [
    "ParentChoice",
    "RaySystem",
    "RaySystemError",
    "DigitalRay",
    "iter_domain",
    "DOWN",
    "LEFT",
]

# Internal row encoding.  DOWN means "parent is (x, y-1)".
DOWN = 1
LEFT = 0


class ParentChoice(Enum):
    """Which neighbour a point uses as its parent."""

    DOWN = "D"
    LEFT = "L"

    @property
    def code(self) -> int:
        return DOWN if self is ParentChoice.DOWN else LEFT


#: A ray is an ordered list of points from the origin to the target.
DigitalRay = list[GridPoint]


class RaySystemError(ValueError):
    """Raised for malformed choice maps or serialized systems."""


def iter_domain(bound: int) -> Iterator[GridPoint]:
    """All points with ``1 <= x + y <= bound`` ordered by (diagonal, x)."""
    for d in range(1, bound + 1):
        for x in range(d + 1):
            yield GridPoint(x, d - x)


def _validate_rows(bound: int, rows: Sequence[bytes]) -> None:
    if bound < 0:
        raise RaySystemError(f"bound must be nonnegative, got {bound}")
    if len(rows) != bound + 1:
        raise RaySystemError(
            f"expected {bound + 1} choice rows for bound {bound}, got {len(rows)}"
        )
    if len(rows[0]) != 0:
        raise RaySystemError("diagonal 0 holds only the origin and stores no choices")
    for d in range(1, bound + 1):
        row = rows[d]
        if len(row) != d + 1:
            raise RaySystemError(
                f"diagonal {d} must store {d + 1} choices, got {len(row)}"
            )
        if row[0] != DOWN:
            raise RaySystemError(
                f"point (0, {d}) lies on the y-axis and must choose parent D"
            )
        if row[d] != LEFT:
            raise RaySystemError(
                f"point ({d}, 0) lies on the x-axis and must choose parent L"
            )
        for x in range(1, d):
            if row[x] not in (DOWN, LEFT):
                raise RaySystemError(
                    f"point ({x}, {d - x}) has invalid choice byte {row[x]}"
                )


class RaySystem:
    """A total parent map over the triangle ``1 <= x + y <= bound``.

    Instances are immutable after construction; all accessors are safe to
    share across threads.
    """

    __slots__ = ("bound", "rows")

    def __init__(self, bound: int, choices: Mapping[GridPoint, ParentChoice]):
        if bound < 0:
            raise RaySystemError(f"bound must be nonnegative, got {bound}")
        rows: list[bytes] = [b""]
        for d in range(1, bound + 1):
            row = bytearray(d + 1)
            for x in range(d + 1):
                p = GridPoint(x, d - x)
                try:
                    choice = choices[p]
                except KeyError:
                    raise RaySystemError(f"missing choice for point {p}") from None
                if not isinstance(choice, ParentChoice):
                    raise RaySystemError(f"choice for {p} is not a ParentChoice")
                row[x] = choice.code
            rows.append(bytes(row))
        expected = bound * (bound + 3) // 2  # sum of (d+1) for d = 1..bound
        if len(choices) != expected:
            for p in choices:
                q = GridPoint(*p)
                if not (0 <= q.x and 0 <= q.y and 1 <= q.x + q.y <= bound):
                    raise RaySystemError(f"choice given for out-of-domain point {q}")
            raise RaySystemError("duplicate or extraneous choices in mapping")
        _validate_rows(bound, rows)
        object.__setattr__(self, "bound", bound)
        object.__setattr__(self, "rows", tuple(rows))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("RaySystem is immutable")

    @classmethod
    def from_rows(cls, bound: int, rows: Sequence[bytes], validate: bool = True) -> "RaySystem":
        """Build directly from per-diagonal choice rows (bulk constructor)."""
        rows = tuple(bytes(r) for r in rows)
        if validate:
            _validate_rows(bound, rows)
        sys_ = object.__new__(cls)
        object.__setattr__(sys_, "bound", bound)
        object.__setattr__(sys_, "rows", rows)
        return sys_

    # -- basic accessors ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RaySystem):
            return NotImplemented
        return self.bound == other.bound and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.bound, self.rows))

    def __repr__(self) -> str:
        return f"RaySystem(bound={self.bound})"

    def points(self) -> Iterator[GridPoint]:
        """Domain points ordered by (diagonal, x); the origin is excluded."""
        return iter_domain(self.bound)

    def _require_in_domain(self, p: GridPoint) -> GridPoint:
        q = GridPoint(*p)
        if q.x < 0 or q.y < 0 or q.x + q.y > self.bound:
            raise ValueError(f"point {q} outside the bound-{self.bound} domain")
        return q

    def choice(self, p: GridPoint) -> ParentChoice:
        q = self._require_in_domain(p)
        if q == ORIGIN:
            raise ValueError("the origin has no parent choice")
        code = self.rows[q.x + q.y][q.x]
        return ParentChoice.DOWN if code == DOWN else ParentChoice.LEFT

    def parent(self, p: GridPoint) -> GridPoint:
        q = self._require_in_domain(p)
        if q == ORIGIN:
            raise ValueError("the origin has no parent")
        if self.rows[q.x + q.y][q.x] == DOWN:
            return GridPoint(q.x, q.y - 1)
        return GridPoint(q.x - 1, q.y)

    def children(self, p: GridPoint) -> list[GridPoint]:
        """Points on the next diagonal whose parent is ``p`` (ordered by x)."""
        q = self._require_in_domain(p)
        d = q.x + q.y
        out: list[GridPoint] = []
        if d + 1 <= self.bound:
            row = self.rows[d + 1]
            if row[q.x] == DOWN:
                out.append(GridPoint(q.x, q.y + 1))
            if row[q.x + 1] == LEFT:
                out.append(GridPoint(q.x + 1, q.y))
        return out

    # -- rays ----------------------------------------------------------------

    def ray(self, p: GridPoint) -> DigitalRay:
        """The path from the origin to ``p`` along parent links."""
        q = self._require_in_domain(p)
        x, y = q
        rows = self.rows
        path = [q]
        while x or y:
            if x == 0:
                y -= 1
            elif y == 0:
                x -= 1
            elif rows[x + y][x] == DOWN:
                y -= 1
            else:
                x -= 1
            path.append(GridPoint(x, y))
        path.reverse()
        return path

    def ray_in_z2(self, q: GridPoint) -> DigitalRay:
        """Ray to an arbitrary point of the plane, by reflection.

        The system covers the closed first quadrant; the other quadrants are
        served by mirroring coordinates, so the path to ``q`` is the path to
        ``(|q.x|, |q.y|)`` with the signs of ``q`` re-applied.
        """
        gx, gy = q
        if abs(gx) + abs(gy) > self.bound:
            raise ValueError(f"point {GridPoint(gx, gy)} outside bound {self.bound}")
        sx = -1 if gx < 0 else 1
        sy = -1 if gy < 0 else 1
        base = self.ray(GridPoint(abs(gx), abs(gy)))
        return [GridPoint(sx * p.x, sy * p.y) for p in base]

    # -- per-diagonal tree statistics -----------------------------------------

    def _next_row(self, d: int) -> bytes:
        if not 0 <= d < self.bound:
            raise ValueError(
                f"diagonal {d} has no successor inside the bound-{self.bound} domain"
            )
        return self.rows[d + 1]

    def split_points(self, d: int) -> list[GridPoint]:
        """Points of diagonal ``d`` whose both upper neighbours chose them.

        A point ``p`` splits when ``(x, y+1)`` chose DOWN and ``(x+1, y)``
        chose LEFT, i.e. two rays continue from ``p``.
        """
        row = self._next_row(d)
        return [
            GridPoint(x, d - x)
            for x in range(d + 1)
            if row[x] == DOWN and row[x + 1] == LEFT
        ]

    def inner_leaves(self, d: int) -> list[GridPoint]:
        """Points of diagonal ``d`` that no point of diagonal ``d+1`` chose."""
        row = self._next_row(d)
        return [
            GridPoint(x, d - x)
            for x in range(d + 1)
            if row[x] == LEFT and row[x + 1] == DOWN
        ]

    def count_inner_leaves_range(self, lo: int, hi: int) -> int:
        """Total number of inner leaves on diagonals ``lo..hi`` inclusive."""
        if not 0 <= lo <= hi < self.bound:
            raise ValueError(
                f"need 0 <= lo <= hi < bound, got lo={lo} hi={hi} bound={self.bound}"
            )
        total = 0
        for d in range(lo, hi + 1):
            row = self.rows[d + 1]
            total += sum(
                1 for x in range(d + 1) if row[x] == LEFT and row[x + 1] == DOWN
            )
        return total

    def subtree(self, v: GridPoint) -> set[GridPoint]:
        """All points whose ray passes through ``v`` (``v`` included)."""
        start = self._require_in_domain(v)
        seen = {start}
        stack = [start]
        while stack:
            p = stack.pop()
            for c in self.children(p):
                seen.add(c)
                stack.append(c)
        return seen

    def restrict(self, new_bound: int) -> "RaySystem":
        """The same system truncated to a smaller bound (cheap: rows shared)."""
        if not 0 <= new_bound <= self.bound:
            raise ValueError(f"cannot restrict bound {self.bound} to {new_bound}")
        return RaySystem.from_rows(
            new_bound, self.rows[: new_bound + 1], validate=False
        )

    # -- serialization ---------------------------------------------------------

    def to_json_dict(self) -> dict:
        choices = [
            {"x": x, "y": d - x, "parent": "D" if self.rows[d][x] == DOWN else "L"}
            for d in range(1, self.bound + 1)
            for x in range(d + 1)
        ]
        return {"bound": self.bound, "choices": choices}

    @classmethod
    def from_json_dict(cls, data: object) -> "RaySystem":
        """Parse and fully validate the exchange format.

        Raises :class:`RaySystemError` naming the offending entry for any
        structural problem: wrong types, out-of-domain points, duplicates,
        missing points, or axis points with the wrong parent.
        """
        if not isinstance(data, dict):
            raise RaySystemError("top-level JSON value must be an object")
        if "bound" not in data or "choices" not in data:
            raise RaySystemError("map object needs 'bound' and 'choices' keys")
        bound = data["bound"]
        if not isinstance(bound, int) or isinstance(bound, bool) or bound < 0:
            raise RaySystemError(f"bound must be a nonnegative integer, got {bound!r}")
        entries = data["choices"]
        if not isinstance(entries, list):
            raise RaySystemError("'choices' must be a list")
        rows = [bytearray(d + 1) if d else bytearray() for d in range(bound + 1)]
        seen = [bytearray(d + 1) for d in range(bound + 1)]
        for entry in entries:
            if not isinstance(entry, dict):
                raise RaySystemError(f"choice entry {entry!r} is not an object")
            try:
                x, y, parent = entry["x"], entry["y"], entry["parent"]
            except KeyError as exc:
                raise RaySystemError(
                    f"choice entry {entry!r} is missing key {exc}"
                ) from None
            if not isinstance(x, int) or isinstance(x, bool) or not isinstance(y, int) or isinstance(y, bool):
                raise RaySystemError(f"non-integer coordinates in entry {entry!r}")
            if parent not in ("D", "L"):
                raise RaySystemError(
                    f"point ({x}, {y}) has invalid parent {parent!r} (expected 'D' or 'L')"
                )
            d = x + y
            if x < 0 or y < 0 or d < 1 or d > bound:
                raise RaySystemError(f"point ({x}, {y}) outside the bound-{bound} domain")
            if seen[d][x]:
                raise RaySystemError(f"duplicate choice for point ({x}, {y})")
            seen[d][x] = 1
            rows[d][x] = DOWN if parent == "D" else LEFT
        for d in range(1, bound + 1):
            for x in range(d + 1):
                if not seen[d][x]:
                    raise RaySystemError(f"missing choice for point ({x}, {d - x})")
        try:
            _validate_rows(bound, [bytes(r) for r in rows])
        except RaySystemError:
            raise
        return cls.from_rows(bound, rows, validate=False)

    def dump(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json_dict(), fh)
            fh.write("\n")

    @classmethod
    def load(cls, path: str) -> "RaySystem":
        with open(path, "r", encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise RaySystemError(f"not valid JSON: {exc}") from exc
        return cls.from_json_dict(data)
