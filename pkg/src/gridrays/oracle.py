"""Minimum-error search over all ray systems of a small bound.

Interior points choose their parent freely (axis choices are forced), so a
bound-``N`` domain has ``N*(N-1)/2`` binary decisions.  The searchers walk
the decision tree in (diagonal, x) point order, trying DOWN before LEFT, and
evaluate targets incrementally: assigning a point fixes its whole ray, whose
error is a max over already-known ancestors.  The running maximum over
assigned targets can only grow as points are added, which makes it an
admissible bound for branch-and-bound pruning.

Both searchers are deterministic and, where both apply, return the same
minimum and the same witness: the first system in decision order that
attains the minimum (strict improvements replace the incumbent, ties never
do, and pruning only cuts branches that cannot strictly improve).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .geometry import GridPoint
from .system import DOWN, LEFT, RaySystem

__all__ = [
    "SearchResult",
    "EXHAUSTIVE_CAP",
    "min_error_exhaustive",
    "min_error_bnb",
    "min_error_curve",
]

#: Largest bound the plain enumerator accepts (2^21 systems).
EXHAUSTIVE_CAP = 7


@dataclass(frozen=True)
class SearchResult:
    min_error: Fraction
    witness_system: RaySystem
    systems_explored: int
    pruned: int
    proven_optimal: bool = True


class _Budget(Exception):
    pass


def _search(bound: int, prune: bool, budget: Optional[int]) -> SearchResult:
    # Point ids in (diagonal, x) order, origin first.
    ids: dict[tuple[int, int], int] = {(0, 0): 0}
    coords: list[tuple[int, int]] = [(0, 0)]
    for d in range(1, bound + 1):
        for x in range(d + 1):
            ids[(x, d - x)] = len(coords)
            coords.append((x, d - x))
    npts = len(coords)

    # parent ids; axis parents are forced, interior ones set during search
    parent = [0] * npts
    free: list[int] = []
    for pid in range(1, npts):
        x, y = coords[pid]
        if x == 0:
            parent[pid] = ids[(0, y - 1)]
        elif y == 0:
            parent[pid] = ids[(x - 1, 0)]
        else:
            free.append(pid)

    # per free target: denominator and the numerator table over all points
    dens = [0] * npts
    tables: list[Optional[list[int]]] = [None] * npts
    for pid in free:
        tx, ty = coords[pid]
        td = tx + ty
        dens[pid] = td
        tables[pid] = [abs(vx * td - (vx + vy) * tx) for vx, vy in coords]
    down_parent = [0] * npts
    left_parent = [0] * npts
    for pid in free:
        x, y = coords[pid]
        down_parent[pid] = ids[(x, y - 1)]
        left_parent[pid] = ids[(x - 1, y)]

    rows = [bytearray(d + 1) if d else bytearray() for d in range(bound + 1)]
    for d in range(1, bound + 1):
        rows[d][0] = DOWN
        rows[d][d] = LEFT

    nfree = len(free)
    best_num, best_den = None, 1
    best_rows: Optional[list[bytes]] = None
    explored = 0
    pruned_count = 0
    nodes = 0

    def walk(depth: int, cur_num: int, cur_den: int) -> None:
        nonlocal best_num, best_den, best_rows, explored, pruned_count, nodes
        if depth == nfree:
            explored += 1
            if best_num is None or cur_num * best_den < best_num * cur_den:
                best_num, best_den = cur_num, cur_den
                best_rows = [bytes(r) for r in rows]
            return
        pid = free[depth]
        x, y = coords[pid]
        d = x + y
        row = rows[d]
        table = tables[pid]
        den = dens[pid]
        for choice, par in ((DOWN, down_parent[pid]), (LEFT, left_parent[pid])):
            nodes += 1
            if budget is not None and nodes > budget:
                raise _Budget
            parent[pid] = par
            # error of the newly completed ray, over ancestors of pid
            m = 0
            v = par
            while v:
                e = table[v]
                if e > m:
                    m = e
                v = parent[v]
            # merge with the running system maximum
            if m * cur_den > cur_num * den:
                new_num, new_den = m, den
            else:
                new_num, new_den = cur_num, cur_den
            if (
                prune
                and best_num is not None
                and new_num * best_den >= best_num * new_den
            ):
                pruned_count += 1
                continue
            row[x] = choice
            walk(depth + 1, new_num, new_den)

    exhausted = False
    try:
        walk(0, 0, 1)
    except _Budget:
        exhausted = True
    if best_rows is None:
        raise ValueError(
            f"budget {budget} too small to reach any complete system at bound {bound}"
        )
    witness = RaySystem.from_rows(bound, best_rows, validate=False)
    return SearchResult(
        min_error=Fraction(best_num, best_den),
        witness_system=witness,
        systems_explored=explored,
        pruned=pruned_count,
        proven_optimal=not exhausted,
    )


def min_error_exhaustive(bound: int) -> SearchResult:
    """Minimum error over every ray system of the bound, by full enumeration.

    Rejects bounds above :data:`EXHAUSTIVE_CAP`; use :func:`min_error_bnb`
    for anything larger.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if bound > EXHAUSTIVE_CAP:
        raise ValueError(
            f"bound {bound} needs 2^{bound * (bound - 1) // 2} systems; "
            f"the enumerator stops at {EXHAUSTIVE_CAP} -- use min_error_bnb"
        )
    return _search(bound, prune=False, budget=None)


def min_error_bnb(bound: int, budget: Optional[int] = None) -> SearchResult:
    """Branch-and-bound variant of :func:`min_error_exhaustive`.

    Prunes any partial assignment whose already-fixed rays reach the
    incumbent error, which never discards a strictly better system, so the
    result matches the enumerator exactly.  ``budget`` caps the number of
    decision nodes; if the cap fires, the incumbent is returned with
    ``proven_optimal=False``.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if budget is not None and budget <= 0:
        raise ValueError("budget must be positive")
    return _search(bound, prune=True, budget=budget)


def min_error_curve(
    max_bound: int, budget: Optional[int] = None
) -> list[tuple[int, Fraction]]:
    """``(bound, minimum error)`` for every bound up to ``max_bound``."""
    out: list[tuple[int, Fraction]] = []
    for n in range(1, max_bound + 1):
        if n <= EXHAUSTIVE_CAP:
            out.append((n, min_error_exhaustive(n).min_error))
        else:
            out.append((n, min_error_bnb(n, budget=budget).min_error))
    return out
