"""Exact combinatorics of z-asymmetric partitions and content tabloids."""

from .content import (
    ContentSequence,
    content_sequence,
    diagonal_label,
    is_shifted_form,
    partition_from_content_sequence,
)
from .partitions import (
    CellStats,
    FrobeniusCoords,
    Partition,
    add_scalar,
    cell_stats,
    conjugate,
    content_sum,
    enumerate_partitions,
    enumerate_z_asymmetric,
    frobenius,
    from_frobenius,
    is_z_asymmetric,
    k_statistic,
    make_partition,
    rank,
)
from .polynomials import LaurentPolynomial, TruncatedMultiPolynomial, q_integer
from .report import VerificationReport
from .schur import (
    SSYT,
    dim_hook_content,
    enumerate_ssyt,
    principal_specialization,
    schur_bialternant_eval,
    schur_truncated,
    stepped_specialization,
)
from .tabloids import (
    Tabloid,
    content_gf,
    count_content_tabloids,
    count_hook_tabloids,
    enumerate_tabloids,
    phi,
    phi_inverse,
    verify_phi,
)

__version__ = "0.1.0"
