"""Exact power-index analysis of weighted voting systems.

Everything is computed in rational arithmetic (`fractions.Fraction`): power
indices by enumeration or generating-function dynamic programming, majority
games weighted by the divisors of an integer, and index maps iterated as
dynamical systems with closed-form fixed-point families.
"""

from .core import (
    Coalition,
    IndexKind,
    IndexVector,
    QuotaMode,
    Rational,
    ScaledSystem,
    VotingSystem,
    coalition_weight,
    format_rational,
    is_winning,
    normalize,
    parse_rational,
    scale_to_integers,
    to_rational,
)
from .divisor import (
    CasePrediction,
    DisagreementReport,
    DivisorSystem,
    PrimeMultipleComparison,
    SCAN_CSV_COLUMNS,
    abundance_class,
    case_prediction,
    compare_prime_multiples,
    critical_players,
    disagreement_report,
    divisor_system,
    divisors_of,
    report_csv_row,
    scan_abundant,
    sigma_of,
    sigma_range,
    write_scan_report,
)
from .errors import (
    DegenerateSystem,
    IntegerBoundary,
    InvalidCoalition,
    InvalidFamily,
    InvalidInput,
    PreconditionFailed,
    UnsupportedCase,
    VotingPowerError,
)
from .fixedpoint import (
    BanzhafPair,
    Cycle,
    FamilySpec,
    FixedPoint,
    IterationTrace,
    MaxIterations,
    aab_fixed_point_classes,
    aab_fixed_points,
    aab_heavy_ss_power,
    ab_banzhaf_indices,
    ab_family_point,
    ab_fixed_points,
    ab_heavy_ss_power,
    ab_joint_banzhaf_fixed,
    apply_index_map,
    is_fixed_point,
    iterate,
    trace_from_dict,
    trace_from_json,
    trace_to_dict,
    trace_to_json,
)
from .indices import (
    DEFAULT_ENUM_CAP,
    PivotCounts,
    SwingCounts,
    banzhaf,
    banzhaf_dp,
    banzhaf_enum,
    count_winning,
    shapley_shubik,
    ss_dp,
    ss_enum_perms,
    ss_enum_subsets,
)

__version__ = "0.1.0"

__all__ = [
    "BanzhafPair",
    "CasePrediction",
    "Coalition",
    "Cycle",
    "DEFAULT_ENUM_CAP",
    "DegenerateSystem",
    "DisagreementReport",
    "DivisorSystem",
    "FamilySpec",
    "FixedPoint",
    "IndexKind",
    "IndexVector",
    "IntegerBoundary",
    "InvalidCoalition",
    "InvalidFamily",
    "InvalidInput",
    "IterationTrace",
    "MaxIterations",
    "PivotCounts",
    "PreconditionFailed",
    "PrimeMultipleComparison",
    "QuotaMode",
    "Rational",
    "SCAN_CSV_COLUMNS",
    "ScaledSystem",
    "SwingCounts",
    "UnsupportedCase",
    "VotingPowerError",
    "VotingSystem",
    "aab_fixed_point_classes",
    "aab_fixed_points",
    "aab_heavy_ss_power",
    "ab_banzhaf_indices",
    "ab_family_point",
    "ab_fixed_points",
    "ab_heavy_ss_power",
    "ab_joint_banzhaf_fixed",
    "abundance_class",
    "apply_index_map",
    "banzhaf",
    "banzhaf_dp",
    "banzhaf_enum",
    "case_prediction",
    "coalition_weight",
    "compare_prime_multiples",
    "count_winning",
    "critical_players",
    "disagreement_report",
    "divisor_system",
    "divisors_of",
    "format_rational",
    "is_fixed_point",
    "is_winning",
    "iterate",
    "normalize",
    "parse_rational",
    "report_csv_row",
    "scale_to_integers",
    "scan_abundant",
    "shapley_shubik",
    "sigma_of",
    "sigma_range",
    "ss_dp",
    "ss_enum_perms",
    "ss_enum_subsets",
    "to_rational",
    "trace_from_dict",
    "trace_from_json",
    "trace_to_dict",
    "trace_to_json",
    "write_scan_report",
]
