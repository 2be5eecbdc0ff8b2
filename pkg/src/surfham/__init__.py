"""Concatenated quantum Hamming and surface-Hamming memory simulations."""

__version__ = "0.1.0"

from .concat import ConcatenationSchema, build_schema, overhead
from .decode import decode_concatenated, decode_level
from .hamming import HammingLevelCode, build_level_code, steane_failure_probability
from .logical import LogicalBasis, extract_logicals, validate_logicals
from .mwpm import SurfaceDecoder
from .sim import (
    RateEstimate,
    TrialStats,
    estimate_surface_rate,
    run_block_campaign,
    run_hamming_campaign,
    run_surface_hamming_campaign,
)
from .surface import SurfaceLattice, build_surface

__all__ = [
    "ConcatenationSchema",
    "HammingLevelCode",
    "LogicalBasis",
    "RateEstimate",
    "SurfaceDecoder",
    "SurfaceLattice",
    "TrialStats",
    "build_level_code",
    "build_schema",
    "build_surface",
    "decode_concatenated",
    "decode_level",
    "estimate_surface_rate",
    "extract_logicals",
    "overhead",
    "run_block_campaign",
    "run_hamming_campaign",
    "run_surface_hamming_campaign",
    "steane_failure_probability",
    "validate_logicals",
    "__version__",
]
