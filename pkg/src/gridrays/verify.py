"""Structural checks for families of origin rays.

The checks re-derive everything from the rays themselves rather than
trusting parent maps, so they also apply to foreign data: deserialized
files, hand-entered fixtures, or schemes (like per-target rounding) that do
not come from a single tree at all.  Any object with a ``bound`` attribute
and a ``ray(point) -> list[GridPoint]`` method can be checked; a plain
mapping of paths can be wrapped in :class:`PathTable`.

Checks that are genuinely about the tree shape (prolongation failures,
split/leaf alternation, dead-pair detection) require a :class:`RaySystem`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Optional, Protocol

from .geometry import ORIGIN, GridPoint
from .system import DOWN, LEFT, DigitalRay, RaySystem, iter_domain

__all__ = [
    "RayProvider",
    "PathTable",
    "S1Violation",
    "S2Violation",
    "S3Violation",
    "S5Violation",
    "DeadPairViolation",
    "AlternationViolation",
    "check_s1",
    "check_s2",
    "check_s3",
    "check_s4",
    "check_s5",
    "check_alternation",
    "check_no_consecutive_dead",
    "run_all_checks",
]


class RayProvider(Protocol):
    bound: int

    def ray(self, p: GridPoint) -> DigitalRay: ...


class PathTable:
    """An explicit target-to-path table acting as a ray provider."""

    def __init__(self, bound: int, paths: dict[GridPoint, DigitalRay]):
        self.bound = bound
        self._paths = {GridPoint(*k): [GridPoint(*q) for q in v] for k, v in paths.items()}

    @classmethod
    def from_system(cls, sys_: RaySystem) -> "PathTable":
        return cls(sys_.bound, {p: sys_.ray(p) for p in iter_domain(sys_.bound)})

    def ray(self, p: GridPoint) -> DigitalRay:
        return list(self._paths[GridPoint(*p)])

    def replace(self, target: GridPoint, path: DigitalRay) -> "PathTable":
        """A copy with one path swapped out (for corruption fixtures)."""
        paths = dict(self._paths)
        paths[GridPoint(*target)] = [GridPoint(*q) for q in path]
        return PathTable(self.bound, paths)


class S1Violation(NamedTuple):
    """A ray that is not a connected origin-to-target grid path."""

    target: GridPoint
    first: GridPoint
    second: GridPoint


class S2Violation(NamedTuple):
    point: GridPoint
    reason: str


class S3Violation(NamedTuple):
    """``ray(subpoint)`` is not a prefix of ``ray(target)``."""

    target: GridPoint
    subpoint: GridPoint
    divergence: GridPoint


class S5Violation(NamedTuple):
    """An axis target whose ray leaves the axis."""

    target: GridPoint
    point: GridPoint


class DeadPairViolation(NamedTuple):
    """Two diagonal neighbours that both stop extending before ``diagonal``."""

    point: GridPoint
    neighbour: GridPoint
    diagonal: int


class AlternationViolation(NamedTuple):
    diagonal: int
    pattern: str


def check_s1(provider: RayProvider) -> Optional[S1Violation]:
    """Every ray starts at the origin, ends at its target, and moves in unit
    grid steps.  Returns the first violation in (diagonal, x) target order."""
    for p in iter_domain(provider.bound):
        path = provider.ray(p)
        if not path or path[0] != ORIGIN:
            return S1Violation(p, path[0] if path else p, ORIGIN)
        if path[-1] != p:
            return S1Violation(p, path[-1], p)
        for a, b in zip(path, path[1:]):
            if abs(a[0] - b[0]) + abs(a[1] - b[1]) != 1:
                return S1Violation(p, GridPoint(*a), GridPoint(*b))
    return None


def check_s2(provider: RayProvider, samples: int = 16) -> Optional[S2Violation]:
    """Mirror coherence of the whole-plane extension.

    For a deterministic sample of points ``q`` (all four sign patterns of
    the first ``samples`` domain points), the path to ``q`` must be the
    sign-mapped first-quadrant ray, a valid grid path from the origin to
    ``q``, and its reversal therefore the path from ``q`` back.  Real
    systems cannot fail; this exists to catch corrupted imports.
    """
    if not hasattr(provider, "ray_in_z2"):
        return None
    count = 0
    for p in iter_domain(provider.bound):
        base = provider.ray(p)
        for sx in (1, -1):
            for sy in (1, -1):
                q = GridPoint(sx * p.x, sy * p.y)
                path = provider.ray_in_z2(q)
                expected = [GridPoint(sx * v.x, sy * v.y) for v in base]
                if path != expected:
                    return S2Violation(q, "mirrored path disagrees with quadrant ray")
                if path[0] != ORIGIN or path[-1] != q:
                    return S2Violation(q, "path endpoints are wrong")
        count += 1
        if count >= samples:
            break
    return None


def check_s3(provider: RayProvider) -> Optional[S3Violation]:
    """Rays through a shared point share their whole prefix below it.

    Equivalent formulation used here: across all rays, every point has a
    unique predecessor.  On conflict the two rays are re-walked to report
    the first diverging position.  Assumes rays already pass
    :func:`check_s1` (run it first on untrusted data).
    """
    pred: dict[GridPoint, tuple[GridPoint, GridPoint]] = {}
    for p in iter_domain(provider.bound):
        path = provider.ray(p)
        for i in range(1, len(path)):
            s = path[i]
            q = path[i - 1]
            known = pred.get(s)
            if known is None:
                pred[s] = (q, p)
            elif known[0] != q:
                # Either the current ray or the one that recorded the
                # predecessor diverges from ray(s); report whichever does.
                sub = provider.ray(s)
                for tgt, full in ((p, path), (known[1], provider.ray(known[1]))):
                    for a, b in zip(sub, full):
                        if a != b:
                            return S3Violation(tgt, s, GridPoint(*a))
                return S3Violation(p, s, GridPoint(*q))
    return None


def check_s4(sys_: RaySystem) -> list[GridPoint]:
    """Points whose ray extends to no point of the next diagonal.

    These are exactly the inner leaves of the tree -- the prolongation
    failures.  The returned list covers all diagonals below the bound,
    ordered by (diagonal, x); an empty list means every ray prolongs.
    """
    failures: list[GridPoint] = []
    for d in range(sys_.bound):
        failures.extend(sys_.inner_leaves(d))
    return failures


def check_s5(provider: RayProvider) -> Optional[S5Violation]:
    """Rays to axis points must run straight along the axis."""
    for k in range(1, provider.bound + 1):
        t = GridPoint(0, k)
        for q in provider.ray(t):
            if q[0] != 0:
                return S5Violation(t, GridPoint(*q))
        t = GridPoint(k, 0)
        for q in provider.ray(t):
            if q[1] != 0:
                return S5Violation(t, GridPoint(*q))
    return None


def _max_reach_rows(sys_: RaySystem) -> list[list[int]]:
    """For every point, the largest diagonal its subtree attains."""
    bound = sys_.bound
    reach: list[list[int]] = [[] for _ in range(bound + 1)]
    if bound == 0:
        return reach
    reach[bound] = [bound] * (bound + 1)
    for d in range(bound - 1, 0, -1):
        row = sys_.rows[d + 1]
        above = reach[d + 1]
        cur = [d] * (d + 1)
        for x in range(d + 1):
            if row[x] == DOWN and above[x] > d:
                cur[x] = above[x]
            if row[x + 1] == LEFT and above[x + 1] > cur[x]:
                cur[x] = above[x + 1]
        reach[d] = cur
    return reach


def check_no_consecutive_dead(
    sys_: RaySystem, claimed_error_bound: Fraction = Fraction(3, 2)
) -> Optional[DeadPairViolation]:
    """No two diagonal neighbours may both stop extending early.

    If some point ``v`` does not extend to a diagonal ``d <= bound``, both
    of its same-diagonal neighbours ``(x-1, y+1)`` and ``(x+1, y-1)`` (when
    inside the quadrant) must extend to every such ``d``.  A violation
    forces a target whose ray misses *three* consecutive candidate points,
    so the system's error is at least 3/2 -- refuting any
    ``claimed_error_bound`` below that.
    """
    bound = sys_.bound
    reach = _max_reach_rows(sys_)
    for d in range(1, bound):
        cur = reach[d]
        for x in range(d):  # pairs (x, y) and (x+1, y-1)
            a, b = cur[x], cur[x + 1]
            if a < bound and b < bound:
                return DeadPairViolation(
                    GridPoint(x, d - x), GridPoint(x + 1, d - x - 1), max(a, b) + 1
                )
    return None


def check_alternation(sys_: RaySystem, d: int) -> Optional[AlternationViolation]:
    """Split points and inner leaves alternate along a diagonal.

    Scanning by increasing x, the sequence of split points (S) and inner
    leaves (L) must look like S, L, S, ..., L, S: it starts and ends with a
    split and therefore has one more split than leaves.
    """
    if not 0 <= d < sys_.bound:
        raise ValueError(f"diagonal {d} has no successor inside bound {sys_.bound}")
    row = sys_.rows[d + 1]
    pattern = []
    for x in range(d + 1):
        if row[x] == DOWN and row[x + 1] == LEFT:
            pattern.append("S")
        elif row[x] == LEFT and row[x + 1] == DOWN:
            pattern.append("L")
    text = "".join(pattern)
    ok = (
        len(text) % 2 == 1
        and set(text[0::2]) == {"S"}
        and (set(text[1::2]) or {"L"}) == {"L"}
    )
    return None if ok else AlternationViolation(d, text)


def run_all_checks(provider: RayProvider) -> dict[str, object]:
    """Run every applicable check; values are None/empty when passing."""
    report: dict[str, object] = {
        "s1": check_s1(provider),
        "s2": check_s2(provider),
        "s3": check_s3(provider),
        "s5": check_s5(provider),
    }
    if isinstance(provider, RaySystem):
        report["s4_failures"] = check_s4(provider)
        report["dead_pair"] = check_no_consecutive_dead(provider)
        alternation = None
        for d in range(provider.bound):
            alternation = check_alternation(provider, d)
            if alternation is not None:
                break
        report["alternation"] = alternation
    return report
