"""Exact zeta, Möbius and order-complement matrices of finite posets."""

from .errors import (
    CycleError,
    DimensionMismatch,
    DuplicateNameError,
    IndexOutOfRange,
    InvalidPermutation,
    NotSquare,
    ParseError,
    PosetError,
    SizeGuardError,
    UnknownLabelError,
)
from .incidence import (
    ChainCensus,
    VerificationReport,
    chain_counts,
    charpoly_formula,
    complement_matrix,
    det_complement_direct,
    det_complement_via_theorem,
    euler_char_chains,
    euler_char_mobius,
    mobius_matrix,
    reduced_euler_char,
    strict_matrix,
    verify_theorem,
    zeta_matrix,
)
from .linalg import IntMatrix, IntPolynomial, charpoly, determinant
from .oracle import OracleCensus, enumerate_chains, euler_char_oracle
from .poset import Poset, PosetSpec, build

__version__ = "0.1.0"
