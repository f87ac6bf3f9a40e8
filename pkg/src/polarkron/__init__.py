"""Polarization behaviour, partial distances and scaling exponents of binary
polar-code kernels and their Kronecker products over the erasure channel."""

from .errors import (
    CapacityError,
    DimensionError,
    IntegrityError,
    KernelParseError,
    NoPolarizationError,
    PolarKronError,
)
from .etable import ETable, PolyPB, compare_tables, conservation_check, eval_pb
from .gf2 import BitMatrix
from .kernel import ARIKAN, Kernel, parse_kernel, product_kernel
from .polarization import (
    kills,
    pb_bruteforce,
    pb_compose,
    pb_product_lower_eq7,
    pb_product_truth,
    pb_product_upper_eq6,
)
from .scaling import MuEstimate, SolverConfig, mu

__version__ = "0.1.0"

__all__ = [
    "ARIKAN",
    "BitMatrix",
    "CapacityError",
    "DimensionError",
    "ETable",
    "IntegrityError",
    "Kernel",
    "KernelParseError",
    "MuEstimate",
    "NoPolarizationError",
    "PolarKronError",
    "PolyPB",
    "SolverConfig",
    "compare_tables",
    "conservation_check",
    "eval_pb",
    "kills",
    "mu",
    "parse_kernel",
    "pb_bruteforce",
    "pb_compose",
    "pb_product_lower_eq7",
    "pb_product_truth",
    "pb_product_upper_eq6",
    "product_kernel",
]
