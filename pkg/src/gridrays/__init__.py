"""Digital rays on the integer grid.

A ray system connects the origin to every point of a triangular region with
monotone staircase paths that form a tree (one parent per point).  This
package builds such systems with worst-case error provably under 3/2,
measures errors exactly in rational arithmetic, verifies the structural
axioms, searches small bounds for the true optimum, and ships rounding and
L-path baselines for comparison.
"""

from .baselines import (
    RoundingScheme,
    find_s3_violation_rounding,
    lpath_system,
    rounding_ray,
)
from .construction import (
    ZoneId,
    build_system,
    pick_parent,
    zone_confinement_violation,
    zone_lattice_count,
    zone_midpoint_x,
    zone_of,
)
from .errors import (
    DiagonalError,
    ErrorReport,
    max_error,
    per_diagonal_errors,
    point_error_l2,
    point_error_linf,
    ray_error,
)
from .geometry import (
    INFINITY,
    ORIGIN,
    Cone,
    GridPoint,
    RationalPoint,
    Side,
    Slope,
    compare_to_line,
    cone_of,
    cone_width,
    diagonal,
    grid_points_in_cone,
    intersect_diagonal,
    slope,
)
from .oracle import (
    EXHAUSTIVE_CAP,
    SearchResult,
    min_error_bnb,
    min_error_curve,
    min_error_exhaustive,
)
from .system import (
    DigitalRay,
    ParentChoice,
    RaySystem,
    RaySystemError,
    iter_domain,
)
from .verify import (
    AlternationViolation,
    DeadPairViolation,
    PathTable,
    S1Violation,
    S2Violation,
    S3Violation,
    S5Violation,
    check_alternation,
    check_no_consecutive_dead,
    check_s1,
    check_s2,
    check_s3,
    check_s4,
    check_s5,
    run_all_checks,
)

__version__ = "0.1.0"
