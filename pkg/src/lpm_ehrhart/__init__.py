"""Exact Ehrhart polynomials of lattice path matroids."""

from .algebra import Polynomial, coeffwise_leq, interpolate
from .ehrhart import (
    EhrhartReport,
    compare_shapes,
    ehr_grouped,
    ehr_oracle,
    ehr_pm,
    ehr_positive,
    ehr_signed,
    ehr_snake,
    ehr_uniform,
    lattice_points,
)
from .paths import (
    DelannoyPath,
    MarkedPath,
    NEPath,
    enumerate_delannoy,
    enumerate_ne_paths,
    extract_marks,
    gamma_min,
    high_peaks,
    insert_diagonals,
    ribbon_of,
)
from .posets import (
    FencePoset,
    RibbonShape,
    enumerate_filters,
    ideal_generated_by,
    order_polynomial,
    pp_count,
    pp_polynomial,
    remove_filter,
)
from .shapes import (
    LatticePathPair,
    ShapeError,
    SkewShape,
    connected,
    enumerate_bases,
    lies_below,
    parse_shape,
    paths_to_shape,
    shape_to_paths,
)

__version__ = "0.1.0"
