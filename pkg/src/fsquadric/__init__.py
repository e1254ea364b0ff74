"""Exact Fubini-Study volumes of quadric domains in complex projective space."""

from .exact import SparsePoly, format_rational, parse_rational
from .partitions import BoxBound, Partition, conjugate, drop_first, enumerate_B, enumerate_C, star
from .quadric import (
    ExactVolume,
    Spectrum,
    denom_D,
    duality_gap,
    factor_T,
    map_alpha,
    map_beta,
    numer_S,
    numer_S_partialfrac,
    recursion_rhs,
    volume,
)
from .schur import schur_bialternant, schur_expand, schur_jacobi_trudi, vandermonde

__version__ = "0.1.0"
