"""Acceptance gate: the package's headline claims, one test per criterion.

Each criterion prints a single ``criterion N ...: PASS`` / ``FAIL`` line
(collected and echoed at the end of the run, see conftest) and enforces the
claim with assertions at the stated tolerance -- exact rational comparison
unless a tolerance is given.

The tests are numbered and self-contained; a few share expensively built
systems through module-level caches.
"""
from __future__ import annotations

import functools
import json
import random
import time
from fractions import Fraction
from pathlib import Path

import numpy as np

from gridrays.baselines import (
    RoundingS3Witness,
    find_s3_violation_rounding,
    lpath_system,
    rounding_ray,
)
from gridrays.construction import build_system, zone_lattice_count, zone_of, ZoneId
from gridrays.errors import max_error, point_error_linf
from gridrays.geometry import (
    GridPoint,
    Side,
    compare_to_line,
    cone_width,
    grid_points_in_cone,
)
from gridrays.oracle import min_error_bnb, min_error_exhaustive
from gridrays.system import ParentChoice
from gridrays.verify import (
    check_alternation,
    check_no_consecutive_dead,
    check_s1,
    check_s2,
    check_s3,
    check_s4,
    check_s5,
)

from conftest import ACCEPTANCE_RESULTS

DATA = Path(__file__).parent / "data"
THREE_HALVES = Fraction(3, 2)


def criterion(number: int, title: str):
    """Record a PASS/FAIL summary line around a criterion test."""

    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            try:
                fn(*args, **kwargs)
            except BaseException:
                ACCEPTANCE_RESULTS.append(f"criterion {number:2d} {title}: FAIL")
                raise
            elapsed = time.perf_counter() - start
            line = f"criterion {number:2d} {title}: PASS ({elapsed:.1f}s)"
            ACCEPTANCE_RESULTS.append(line)
            print(line)

        return run

    return wrap


@functools.lru_cache(maxsize=None)
def big_system(tie: ParentChoice = ParentChoice.DOWN):
    return build_system(2048, tie)


@functools.lru_cache(maxsize=None)
def mid_system():
    return big_system().restrict(256)


@criterion(1, "strict 3/2 upper bound up to 2048, both tie settings")
def test_criterion_1_upper_bound():
    for tie in (ParentChoice.DOWN, ParentChoice.LEFT):
        full = big_system(tie)
        for k in range(2, 12):
            report = max_error(full.restrict(1 << k))
            assert report.max_error < THREE_HALVES, (tie, 1 << k, report)


@criterion(2, "error curve approaches 3/2 and matches the golden file")
def test_criterion_2_error_curve():
    full = big_system()
    curve = [(1 << k, max_error(full.restrict(1 << k)).max_error) for k in range(2, 12)]
    values = [e for _, e in curve]
    assert all(a <= b for a, b in zip(values, values[1:])), "curve must be non-decreasing"
    assert values[-1] > values[2], "growth must continue past bound 16"
    with open(DATA / "error_curve.json", encoding="utf-8") as fh:
        golden = json.load(fh)
    assert [(n, e.numerator, e.denominator) for n, e in curve] == [
        (g["bound"], g["num"], g["den"]) for g in golden
    ]


@criterion(3, "oracle floor: exact values, monotone, branch-and-bound agrees")
def test_criterion_3_oracle_floor():
    assert min_error_exhaustive(2).min_error == Fraction(1, 2)
    previous = Fraction(-1)
    for n in range(1, 8):
        full = min_error_exhaustive(n)
        fast = min_error_bnb(n)
        assert full.min_error >= previous
        previous = full.min_error
        assert fast.min_error == full.min_error
        assert fast.witness_system == full.witness_system
        assert fast.proven_optimal and full.proven_optimal


@criterion(4, "oracle floor sandwiched by the construction below 3/2")
def test_criterion_4_sandwich():
    for n in range(1, 8):
        floor_value = min_error_exhaustive(n).min_error
        built = max_error(build_system(n)).max_error
        assert floor_value <= built < THREE_HALVES, n


@criterion(5, "axiom suite clean for every bound up to 256")
def test_criterion_5_axiom_suite():
    full = mid_system()
    # Paths are shared by restriction: the ray of p in any truncation equals
    # its ray in the bound-256 system, so the path-shape checks (s1, s2, s3,
    # s5) pass for every smaller bound iff they pass at 256.  The same holds
    # for alternation, which only reads one choice row per diagonal.
    assert check_s1(full) is None
    assert check_s2(full) is None
    assert check_s3(full) is None
    assert check_s5(full) is None
    for d in range(full.bound):
        assert check_alternation(full, d) is None
    # Dead-pair detection depends on the bound itself (a subtree that stops
    # early at 256 may be full-length at 100), so it runs per bound; so does
    # the prolongation census.
    leaves_per_diagonal = [len(full.inner_leaves(d)) for d in range(full.bound)]
    for n in range(1, 257):
        sys_n = full.restrict(n)
        assert check_no_consecutive_dead(sys_n) is None, n
        if n >= 5:
            failures = sum(leaves_per_diagonal[:n])
            assert failures > 0, n
            assert GridPoint(2, 2) in sys_n.inner_leaves(4), n
    # Spot-check the per-bound shortcut against the real thing.
    for n in (5, 16, 64, 256):
        sys_n = full.restrict(n)
        assert check_s1(sys_n) is None
        assert check_s3(sys_n) is None
        failures = check_s4(sys_n)
        assert len(failures) == sum(leaves_per_diagonal[:n])
        assert GridPoint(2, 2) in failures


@criterion(6, "power-of-two diagonals split exactly at odd interior x")
def test_criterion_6_split_pattern():
    sys_ = build_system(512)
    for i in range(2, 9):
        d = 1 << i
        interior = range(1, d)
        assert sys_.split_points(d) == [
            GridPoint(x, d - x) for x in interior if x % 2 == 1
        ]
        assert sys_.inner_leaves(d) == [
            GridPoint(x, d - x) for x in interior if x % 2 == 0
        ]


@criterion(7, "zone closed form, occupancy, and ray confinement")
def test_criterion_7_zones():
    from gridrays.construction import zone_confinement_violation

    # (a) closed form vs the definitional line-side predicate.  The zone
    # boundary slopes strictly decrease in j, so satisfying the predicate at
    # the reported index is equivalent to being the unique such index; only
    # the (rare) zoneless points need the full scan to confirm emptiness.
    def in_definitional_zone(p: GridPoint, ring: int, j: int) -> bool:
        below = compare_to_line(p, GridPoint(j, ring - j)) is Side.BELOW
        above = compare_to_line(p, GridPoint(j + 1, ring - j - 1)) is Side.ABOVE
        return below and above

    for d in range(5, 513):
        level = (d - 1).bit_length() - 1
        ring = 1 << level
        for x in range(2, d - 1):
            p = GridPoint(x, d - x)
            zone = zone_of(p)
            if zone is None:
                assert not any(
                    in_definitional_zone(p, ring, j) for j in range(1, ring - 1)
                ), p
            else:
                assert zone.level == level
                assert in_definitional_zone(p, ring, zone.index), p
    # (b) occupancy is one or two lattice points everywhere in range.
    for level in range(2, 9):
        for d in range((1 << level) + 1, (1 << (level + 1)) + 1):
            for j in range(1, (1 << level) - 1):
                assert zone_lattice_count(ZoneId(level, j), d) in (1, 2)
    # (c) every zoned target's ray stays inside its line's zones.
    sys_ = mid_system()
    for p in sys_.points():
        if zone_of(p) is not None:
            assert zone_confinement_violation(sys_, p) is None, p


@criterion(8, "closest-point formula matches brute force within 1e-3")
def test_criterion_8_closest_point():
    limit = 12
    s = np.linspace(0.0, 1.0, 10_001)
    for tx in range(limit + 1):
        for ty in range(limit + 1):
            if tx == 0 and ty == 0:
                continue
            td = tx + ty
            line_x = s * tx
            line_y = s * ty
            vs = [
                GridPoint(vx, vy)
                for vx in range(limit + 1)
                for vy in range(limit + 1)
                if vx + vy <= td
            ]
            vx_arr = np.array([v.x for v in vs], dtype=float)[:, None]
            vy_arr = np.array([v.y for v in vs], dtype=float)[:, None]
            brute = np.maximum(
                np.abs(vx_arr - line_x), np.abs(vy_arr - line_y)
            ).min(axis=1)
            target = GridPoint(tx, ty)
            for v, expected in zip(vs, brute):
                exact = float(point_error_linf(v, target))
                assert abs(exact - expected) <= 1e-3, (v, target)


@criterion(9, "cone lattice count within one of the cone width")
def test_criterion_9_cone_counts():
    rng = random.Random(0x5EED)
    for _ in range(1000):
        size = rng.randint(1, 8)
        pts = []
        while len(pts) < size:
            q = GridPoint(rng.randint(0, 64), rng.randint(0, 64))
            if q != (0, 0):
                pts.append(q)
        d = rng.randint(1, 128)
        floor_width = int(cone_width(pts, d))
        assert grid_points_in_cone(pts, d) in (floor_width, floor_width + 1)


@criterion(10, "baselines: L-path exact, rounding pointwise-optimal but inconsistent")
def test_criterion_10_baselines():
    lpath = lpath_system(8)
    assert check_s1(lpath) is None
    assert check_s2(lpath) is None
    assert check_s3(lpath) is None
    assert check_s4(lpath) == []
    assert check_s5(lpath) is None
    report = max_error(lpath)
    assert report.max_error == 2
    assert report.witness_point == GridPoint(0, 4)
    for target in (
        GridPoint(x, d - x) for d in range(1, 129) for x in range(d + 1)
    ):
        for v in rounding_ray(target):
            assert point_error_linf(v, target) <= Fraction(1, 2), (v, target)
    frozen = RoundingS3Witness(
        target=GridPoint(2, 1),
        subpoint=GridPoint(1, 1),
        divergence=GridPoint(0, 1),
    )
    assert find_s3_violation_rounding(32) == frozen
    assert find_s3_violation_rounding(32) == frozen  # stable across runs
