"""Exact counting of minimal-volume polycubes inscribed in a rectangular prism.

Four independent engines cover the same counts: a brute-force oracle,
closed formulas and recurrences, generating-function series expansion, and
a verification harness that cross-checks them pairwise and reproduces the
published reference tables.
"""

from .core import (
    COUNT_LIMIT,
    Cell,
    CountOverflowError,
    FamilyTag,
    Polycube,
    PrismDims,
    checked_count,
    degree,
    format_polycube,
    is_inscribed,
    min_volume,
    parse_polycubes,
    project,
)
from .formulas import (
    binom,
    diag_volume,
    p2d_corner,
    p2d_corner_rec,
    p2d_min,
    p2dx2d_volume,
    p3d_corner_closed,
    p3d_corner_rec,
    p3dmin_thickness2,
    p3dmin_thickness3,
    p3dmin_volume,
    sc_prism,
    sc_volume,
    trinom,
)
from .oracle import (
    EnumerationConfig,
    classify,
    count_2d_min,
    count_by_family,
    count_connected,
    count_min_corner,
    count_min_inscribed,
    iter_min_inscribed,
    weighted_2d_count,
)
from .series import (
    GF_VALIDITY,
    TruncatedSeries,
    catalog_names,
    diagonal_sequence,
    expand,
    to_csv,
    total_min,
    volume_sequence,
)
from .verify import (
    CheckResult,
    Erratum,
    VerificationReport,
    crosscheck,
    reproduce_table1,
    reproduce_table2,
)

__all__ = [
    "COUNT_LIMIT",
    "Cell",
    "CheckResult",
    "CountOverflowError",
    "EnumerationConfig",
    "Erratum",
    "FamilyTag",
    "GF_VALIDITY",
    "Polycube",
    "PrismDims",
    "TruncatedSeries",
    "VerificationReport",
    "binom",
    "catalog_names",
    "checked_count",
    "classify",
    "count_2d_min",
    "count_by_family",
    "count_connected",
    "count_min_corner",
    "count_min_inscribed",
    "crosscheck",
    "degree",
    "diag_volume",
    "diagonal_sequence",
    "expand",
    "format_polycube",
    "is_inscribed",
    "iter_min_inscribed",
    "min_volume",
    "p2d_corner",
    "p2d_corner_rec",
    "p2d_min",
    "p2dx2d_volume",
    "p3d_corner_closed",
    "p3d_corner_rec",
    "p3dmin_thickness2",
    "p3dmin_thickness3",
    "p3dmin_volume",
    "parse_polycubes",
    "project",
    "reproduce_table1",
    "reproduce_table2",
    "sc_prism",
    "sc_volume",
    "to_csv",
    "total_min",
    "trinom",
    "volume_sequence",
    "weighted_2d_count",
]
