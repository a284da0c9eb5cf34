"""Iterated bijection and exact q-series verification for the Lebesgue identity."""

from .bijection import (
    BijectionTriple,
    ConsistencyError,
    PairP,
    PairQ,
    StepTrace,
    lebesgue_forward,
    lebesgue_inverse,
    pair_p_violation,
    pair_q_violation,
    phi_inverse_step,
    phi_step,
    triple_violation,
)
from .enumeration import (
    Histogram,
    enumerate_P,
    enumerate_Q,
    gen_partitions,
    refinement_histogram,
    verify_bijection_up_to,
)
from .partitions import (
    Partition,
    all_parts_even,
    alt_sum,
    conjugate,
    has_distinct_parts,
    make_partition,
    num_odd_parts,
)
from .polynomial import Poly
from .qseries import (
    TruncatedSeries,
    gaussian_binomial,
    lebesgue_lhs,
    lebesgue_rhs,
    pochhammer,
    series_add,
    series_inverse,
    series_mul,
    verify_identity,
)

__all__ = [
    "BijectionTriple",
    "ConsistencyError",
    "Histogram",
    "PairP",
    "PairQ",
    "Partition",
    "Poly",
    "StepTrace",
    "TruncatedSeries",
    "all_parts_even",
    "alt_sum",
    "conjugate",
    "enumerate_P",
    "enumerate_Q",
    "gaussian_binomial",
    "gen_partitions",
    "has_distinct_parts",
    "lebesgue_forward",
    "lebesgue_inverse",
    "lebesgue_lhs",
    "lebesgue_rhs",
    "make_partition",
    "num_odd_parts",
    "pair_p_violation",
    "pair_q_violation",
    "phi_inverse_step",
    "phi_step",
    "pochhammer",
    "refinement_histogram",
    "series_add",
    "series_inverse",
    "series_mul",
    "triple_violation",
    "verify_bijection_up_to",
    "verify_identity",
]
