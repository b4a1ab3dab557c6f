"""Seiberg-Witten invariants, stable pair series and BPS spectra of surfaces, in exact arithmetic."""

from .documents import SchemaError, builtin_surface, load_surface, parse_class_vector, surface_from_document
from .errors import (
    ConsistencyError,
    GroupMismatchError,
    NonProjectiveError,
    PreconditionError,
    SeriesError,
    StablePairsError,
)
from .fgab import (
    FgAbGroup,
    GroupElement,
    IntMatrix,
    SmithDecomposition,
    elements_equal,
    lattice_index,
    present_group,
    smith_normal_form,
    solve_fiber_representations,
)
from .invariants import DualityReport, duality_check, euler_hilb, gw_series, gwpt_check, pt_generating
from .series import (
    BpsSpectrum,
    QLaurent,
    ULaurent,
    bps_extract,
    bps_reconstruct,
    sin_power,
    u_transform,
    x_power_expand,
)
from .surface import (
    FibrationData,
    Hodge,
    LogTransformInput,
    NumInv,
    SurfaceModel,
    build_explicit,
    build_log_transform,
    canonical_class,
    numerical_invariants,
)
from .swcalc import SwResult, fm_binomial, sw_elliptic, wall_crossing_delta

__all__ = [
    "BpsSpectrum",
    "ConsistencyError",
    "DualityReport",
    "FgAbGroup",
    "FibrationData",
    "GroupElement",
    "GroupMismatchError",
    "Hodge",
    "IntMatrix",
    "LogTransformInput",
    "NonProjectiveError",
    "NumInv",
    "PreconditionError",
    "QLaurent",
    "SchemaError",
    "SeriesError",
    "SmithDecomposition",
    "StablePairsError",
    "SurfaceModel",
    "SwResult",
    "ULaurent",
    "bps_extract",
    "bps_reconstruct",
    "build_explicit",
    "build_log_transform",
    "builtin_surface",
    "canonical_class",
    "duality_check",
    "elements_equal",
    "euler_hilb",
    "fm_binomial",
    "gw_series",
    "gwpt_check",
    "lattice_index",
    "load_surface",
    "numerical_invariants",
    "parse_class_vector",
    "present_group",
    "pt_generating",
    "sin_power",
    "smith_normal_form",
    "solve_fiber_representations",
    "surface_from_document",
    "sw_elliptic",
    "u_transform",
    "wall_crossing_delta",
    "x_power_expand",
]

__version__ = "0.1.0"
