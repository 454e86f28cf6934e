"""Exact base and exponent analysis of primitive non-powerful signed digraphs.

The package computes, at desk scale: generalized bases of sign matrices,
exponents and upper multiexponents of primitive digraphs, set bases and kth
upper bases of signed digraphs, the structural upper bounds that cycle
pairs yield, Frobenius numbers, and a verification harness that recomputes
the closed forms and the gap for the two extremal families.
"""

__version__ = "0.1.0"

from .digraph import (
    Digraph,
    ReachabilityProfile,
    diameter,
    enumerate_cycles,
    exponent,
    is_primitive,
    isomorphic_to,
    multiexponent_table,
    reachability_profile,
    set_exponent,
    shortest_cycle_length,
    strongly_connected,
    upper_multiexponent,
)
from .errors import (
    CapacityError,
    ConsistencyError,
    OrderMismatchError,
    ParseError,
    PolicyError,
    SignBaseError,
    StructuralError,
)
from .families import (
    ALL_POSITIVE,
    CANONICAL_NONPOWERFUL,
    DIFFERENT_SIGN_NM1,
    SAME_SIGN_NM1,
    SignPolicy,
    VerificationOutcome,
    build_d1,
    build_d2,
    random_primitive_digraph,
    random_primitive_nonpowerful,
    sample_nonpowerful_population,
    sample_signed_population,
    verify_closed_forms,
    verify_oracle_agreement,
    verify_third_bound_and_gap,
)
from .frobenius import (
    FrobeniusBasis,
    frobenius_number,
    in_frobenius_set,
    two_cycle_walk_decompose,
)
from .gsign import (
    MAX_ORDER,
    GenSign,
    PowerTrace,
    SignPattern,
    gsign_add,
    gsign_mul,
    has_amb,
    mat_mul,
    mat_power,
    power_sequence_base,
)
from .oracle import (
    ORACLE_MAX_LEN,
    ORACLE_MAX_ORDER,
    Walk,
    count_signed_walks,
    enumerate_signs,
    iter_walks,
    oracle_set_base,
)
from .sdgio import dump_sdg, load_sdg, parse_sdg, serialize_sdg
from .signed import (
    ClosedWalkBound,
    ClosedWalkCandidate,
    CycleRecord,
    DistinguishedPair,
    PairCondition,
    SignedDigraph,
    UpperBaseResult,
    WalkPairBound,
    bound_common_vertices,
    bound_sssd_pair,
    cycles,
    distinguished_pairs,
    is_powerful,
    is_powerful_by_powers,
    kth_upper_base,
    set_base,
    sssd_matrix,
    upper_base_table,
)

__all__ = [
    "__version__",
    "ALL_POSITIVE",
    "CANONICAL_NONPOWERFUL",
    "CapacityError",
    "ClosedWalkBound",
    "ClosedWalkCandidate",
    "ConsistencyError",
    "CycleRecord",
    "DIFFERENT_SIGN_NM1",
    "Digraph",
    "DistinguishedPair",
    "FrobeniusBasis",
    "GenSign",
    "MAX_ORDER",
    "ORACLE_MAX_LEN",
    "ORACLE_MAX_ORDER",
    "OrderMismatchError",
    "PairCondition",
    "ParseError",
    "PolicyError",
    "PowerTrace",
    "ReachabilityProfile",
    "SAME_SIGN_NM1",
    "SignBaseError",
    "SignPattern",
    "SignPolicy",
    "SignedDigraph",
    "StructuralError",
    "UpperBaseResult",
    "VerificationOutcome",
    "Walk",
    "WalkPairBound",
    "bound_common_vertices",
    "bound_sssd_pair",
    "build_d1",
    "build_d2",
    "count_signed_walks",
    "cycles",
    "diameter",
    "distinguished_pairs",
    "dump_sdg",
    "enumerate_cycles",
    "enumerate_signs",
    "exponent",
    "frobenius_number",
    "gsign_add",
    "gsign_mul",
    "has_amb",
    "in_frobenius_set",
    "is_powerful",
    "is_powerful_by_powers",
    "is_primitive",
    "iter_walks",
    "isomorphic_to",
    "kth_upper_base",
    "load_sdg",
    "mat_mul",
    "mat_power",
    "multiexponent_table",
    "oracle_set_base",
    "parse_sdg",
    "power_sequence_base",
    "random_primitive_digraph",
    "random_primitive_nonpowerful",
    "reachability_profile",
    "sample_nonpowerful_population",
    "sample_signed_population",
    "serialize_sdg",
    "set_base",
    "set_exponent",
    "shortest_cycle_length",
    "sssd_matrix",
    "strongly_connected",
    "two_cycle_walk_decompose",
    "upper_base_table",
    "upper_multiexponent",
    "verify_closed_forms",
    "verify_oracle_agreement",
    "verify_third_bound_and_gap",
]
