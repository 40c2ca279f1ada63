"""Voting systems built from the divisors of an integer.

The system for ``n`` gives one seat per divisor of ``n``, weighted by the
divisor itself, with a simple-majority quota over the divisor sum ``sigma``:
``(sigma + 1) / 2`` when ``sigma`` is even, else ``sigma / 2``, both under the
meets-or-exceeds rule (equivalently: strictly more than half the total).

For small abundance excess ``k = sigma(n) - 2n`` (0 through 5) the Banzhaf
and Shapley-Shubik indices of whole player classes collapse to closed forms
in the divisor count alone.  `case_prediction` returns those closed forms and
`disagreement_report` checks them against the exact engines, recording every
player where the two indices differ.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import IO, Iterable

from .core import Coalition, IndexVector, QuotaMode, VotingSystem
from .errors import InvalidInput, PreconditionFailed, UnsupportedCase
from .indices import banzhaf_dp, count_winning, ss_dp


def divisors_of(n: int) -> tuple[int, ...]:
    """All positive divisors of ``n``, largest first (the seat order)."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidInput(f"expected a positive integer, got {n!r}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return tuple(sorted(small + large, reverse=True))


def sigma_of(n: int) -> int:
    """Sum of the positive divisors of ``n``."""
    return sum(divisors_of(n))


def abundance_class(n: int) -> str:
    """'deficient', 'perfect' or 'abundant' by the sign of sigma(n) - 2n."""
    excess = sigma_of(n) - 2 * n
    if excess < 0:
        return "deficient"
    return "perfect" if excess == 0 else "abundant"


def sigma_range(limit: int) -> list[int]:
    """``sigma(n)`` for every ``n`` from 1 to ``limit`` via a divisor sieve."""
    if limit < 1:
        raise InvalidInput("limit must be positive")
    sig = [0] * (limit + 1)
    for d in range(1, limit + 1):
        for m in range(d, limit + 1, d):
            sig[m] += d
    return sig[1:]


@dataclass(frozen=True)
class DivisorSystem:
    """A divisor-weighted majority game together with its arithmetic data."""

    n: int
    system: VotingSystem
    divisors: tuple[int, ...]
    sigma: int
    excess: int

    @property
    def player_count(self) -> int:
        return len(self.divisors)


def divisor_system(n: int) -> DivisorSystem:
    """Build the majority game whose players are the divisors of ``n``."""
    divs = divisors_of(n)
    sigma = sum(divs)
    quota = Fraction(sigma + 1, 2) if sigma % 2 == 0 else Fraction(sigma, 2)
    system = VotingSystem(
        quota=quota,
        mode=QuotaMode.MEETS_OR_EXCEEDS,
        weights=tuple(Fraction(d) for d in divs),
    )
    return DivisorSystem(n=n, system=system, divisors=divs, sigma=sigma, excess=sigma - 2 * n)


@dataclass(frozen=True)
class CasePrediction:
    """Closed-form index values predicted for player classes at a given excess.

    ``top`` is the seat weighted ``n`` itself, ``one`` the seat weighted 1,
    and ``mid`` every other seat.  A ``None`` entry means the catalog makes
    no claim for that class at this excess.  When ``mid_includes_one`` is
    true the ``mid`` values cover the weight-1 seat as well.
    """

    excess: int
    parity: str  # "any", "even" or "odd" (parity of n)
    top_banzhaf: Fraction | None
    top_ss: Fraction | None
    mid_banzhaf: Fraction | None
    mid_ss: Fraction | None
    one_banzhaf: Fraction | None
    one_ss: Fraction | None
    mid_includes_one: bool


def case_prediction(ds: DivisorSystem) -> CasePrediction:
    """Closed forms for the system's index values, valid for excess 0..5.

    The formulas depend only on the divisor count ``d`` (and, at excess 4
    and 5, on the parity of ``n``).  Raises `UnsupportedCase` outside the
    cataloged range.
    """
    k, d = ds.excess, ds.player_count
    two = 1 << (d - 1)
    if k == 0:
        return CasePrediction(
            excess=0,
            parity="any",
            top_banzhaf=Fraction(two - 1, two + d - 2),
            top_ss=Fraction(factorial(d) - factorial(d - 1), factorial(d)),
            mid_banzhaf=Fraction(1, two + d - 2),
            mid_ss=Fraction(1, d * (d - 1)),
            one_banzhaf=Fraction(1, two + d - 2),
            one_ss=Fraction(1, d * (d - 1)),
            mid_includes_one=True,
        )
    if k == 1:
        return CasePrediction(
            excess=1,
            parity="any",
            top_banzhaf=None,
            top_ss=None,
            mid_banzhaf=Fraction(2, two + 2 * (d - 2)),
            mid_ss=Fraction(2, d * (d - 1)),
            one_banzhaf=None,
            one_ss=None,
            mid_includes_one=False,
        )
    if k == 2:
        return CasePrediction(
            excess=2,
            parity="any",
            top_banzhaf=None,
            top_ss=None,
            mid_banzhaf=None,
            mid_ss=None,
            one_banzhaf=Fraction(1, two + 3 * (d - 2) - 2),
            one_ss=Fraction(1, d * (d - 1)),
            mid_includes_one=False,
        )
    if k == 3:
        return CasePrediction(
            excess=3,
            parity="any",
            top_banzhaf=None,
            top_ss=None,
            mid_banzhaf=Fraction(4, two + 4 * (d - 2) - 4),
            mid_ss=Fraction(2, (d - 1) * (d - 2)),
            one_banzhaf=None,
            one_ss=None,
            mid_includes_one=False,
        )
    if k == 4:
        if ds.n % 2 == 0:
            return CasePrediction(
                excess=4,
                parity="even",
                top_banzhaf=None,
                top_ss=None,
                mid_banzhaf=None,
                mid_ss=None,
                one_banzhaf=Fraction(1, two + 5 * (d - 3) - 1),
                one_ss=Fraction(2, d * (d - 1) * (d - 2)),
                mid_includes_one=False,
            )
        return CasePrediction(
            excess=4,
            parity="odd",
            top_banzhaf=None,
            top_ss=None,
            mid_banzhaf=Fraction(4, two + 4 * (d - 2) - 3),
            mid_ss=Fraction(2, d - 1),
            one_banzhaf=None,
            one_ss=None,
            mid_includes_one=False,
        )
    if k == 5:
        if ds.n % 2 == 0:
            return CasePrediction(
                excess=5,
                parity="even",
                top_banzhaf=None,
                top_ss=None,
                mid_banzhaf=None,
                mid_ss=None,
                one_banzhaf=Fraction(1, two + 5 * (d - 3) - 2),
                one_ss=Fraction(2, d * (d - 1) * (d - 2)),
                mid_includes_one=False,
            )
        return CasePrediction(
            excess=5,
            parity="odd",
            top_banzhaf=None,
            top_ss=None,
            mid_banzhaf=Fraction(4, two + 4 * (d - 2) - 6),
            mid_ss=Fraction(2, d - 1),
            one_banzhaf=None,
            one_ss=None,
            mid_includes_one=False,
        )
    raise UnsupportedCase(f"no closed-form catalog for excess {k} (supported: 0..5)")


@dataclass(frozen=True)
class DisagreementReport:
    """Exact index vectors for a divisor system plus where they disagree.

    ``witnesses`` lists seat positions (into the descending divisor order)
    whose Banzhaf and Shapley-Shubik values differ.  ``formula_notes``
    records, per predicted class, whether the engines confirmed the closed
    form; ``formula_match`` is None when no catalog entry applies.
    """

    n: int
    divisors: tuple[int, ...]
    banzhaf: IndexVector
    ss: IndexVector
    witnesses: tuple[int, ...]
    prediction: CasePrediction | None
    formula_notes: tuple[str, ...]
    formula_match: bool | None


def _check_class(
    label: str,
    positions: Iterable[int],
    vector: IndexVector,
    expected: Fraction | None,
    notes: list[str],
    matches: list[bool],
) -> None:
    if expected is None:
        return
    positions = list(positions)
    if not positions:
        notes.append(f"{label}: class empty, nothing to check")
        return
    values = {vector.values[i] for i in positions}
    ok = values == {expected}
    matches.append(ok)
    got = ", ".join(str(v) for v in sorted(values))
    verdict = "matches" if ok else f"differs (engine: {got})"
    notes.append(f"{label}: predicted {expected}, {verdict}")


def disagreement_report(n: int) -> DisagreementReport:
    """Compute both indices for the divisor system of ``n`` and compare them.

    Also checks any applicable closed-form catalog entry against the exact
    engine output.
    """
    ds = divisor_system(n)
    _, bz = banzhaf_dp(ds.system)
    ss = ss_dp(ds.system)
    witnesses = tuple(
        i for i, (b, s) in enumerate(zip(bz.values, ss.values)) if b != s
    )

    try:
        pred = case_prediction(ds)
    except UnsupportedCase:
        return DisagreementReport(
            n=n,
            divisors=ds.divisors,
            banzhaf=bz,
            ss=ss,
            witnesses=witnesses,
            prediction=None,
            formula_notes=(),
            formula_match=None,
        )

    d = ds.player_count
    mid_stop = d if pred.mid_includes_one else d - 1
    notes: list[str] = []
    matches: list[bool] = []
    _check_class("top banzhaf", [0], bz, pred.top_banzhaf, notes, matches)
    _check_class("top shapley-shubik", [0], ss, pred.top_ss, notes, matches)
    _check_class("mid banzhaf", range(1, mid_stop), bz, pred.mid_banzhaf, notes, matches)
    _check_class("mid shapley-shubik", range(1, mid_stop), ss, pred.mid_ss, notes, matches)
    _check_class("one banzhaf", [d - 1], bz, pred.one_banzhaf, notes, matches)
    _check_class("one shapley-shubik", [d - 1], ss, pred.one_ss, notes, matches)
    return DisagreementReport(
        n=n,
        divisors=ds.divisors,
        banzhaf=bz,
        ss=ss,
        witnesses=witnesses,
        prediction=pred,
        formula_notes=tuple(notes),
        formula_match=all(matches) if matches else None,
    )


def scan_abundant(limit: int, divisor_count: int | None = None) -> list[tuple[int, int, int]]:
    """All abundant ``n <= limit`` as ``(n, divisor count, excess)`` triples.

    ``divisor_count`` filters to systems with exactly that many players.
    """
    sig = sigma_range(limit)
    out = []
    for n in range(1, limit + 1):
        excess = sig[n - 1] - 2 * n
        if excess <= 0:
            continue
        d = len(divisors_of(n))
        if divisor_count is not None and d != divisor_count:
            continue
        out.append((n, d, excess))
    return out


@dataclass(frozen=True)
class PrimeMultipleComparison:
    """Winning-coalition counts for ``n*p`` and ``n*q`` with primes p, q > n."""

    n: int
    p: int
    q: int
    player_count: int
    count_p: int
    count_q: int
    equal: bool


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def compare_prime_multiples(n: int, p: int, q: int) -> PrimeMultipleComparison:
    """Count winning coalitions for the divisor systems of ``n*p`` and ``n*q``.

    Requires ``p`` and ``q`` to be distinct primes exceeding ``n``, so both
    products have the same divisor-lattice shape: every divisor of ``n*p`` is
    ``d`` or ``d*p`` for a divisor ``d`` of ``n``, and likewise for ``q``.
    A coalition's winning status then depends only on which lattice positions
    it occupies, not on the prime's value, so the two counts are expected to
    agree; ``equal`` records whether they actually do.
    """
    for r in (p, q):
        if not _is_prime(r):
            raise PreconditionFailed(f"{r} is not prime")
        if r <= n:
            raise PreconditionFailed(f"prime {r} must exceed {n}")
    if p == q:
        raise PreconditionFailed("the two primes must be distinct")

    divs_n = divisors_of(n)
    for r in (p, q):
        got = divisors_of(n * r)
        rebuilt = tuple(sorted([d * r for d in divs_n] + list(divs_n), reverse=True))
        assert got == rebuilt, "divisor structure did not split as d, d*prime"

    count_p = count_winning(divisor_system(n * p).system)
    count_q = count_winning(divisor_system(n * q).system)
    return PrimeMultipleComparison(
        n=n,
        p=p,
        q=q,
        player_count=2 * len(divs_n),
        count_p=count_p,
        count_q=count_q,
        equal=count_p == count_q,
    )


SCAN_CSV_COLUMNS = (
    "n",
    "d",
    "sigma",
    "k",
    "banzhaf_vector",
    "ss_vector",
    "witness_positions",
    "formula_match",
)


def report_csv_row(report: DisagreementReport) -> dict[str, str]:
    """Flatten a report into the scan CSV schema (vectors semicolon-joined)."""
    if report.formula_match is None:
        match = "NA"
    else:
        match = "Y" if report.formula_match else "N"
    return {
        "n": str(report.n),
        "d": str(len(report.divisors)),
        "sigma": str(sum(report.divisors)),
        "k": str(sum(report.divisors) - 2 * report.n),
        "banzhaf_vector": ";".join(str(v) for v in report.banzhaf.values),
        "ss_vector": ";".join(str(v) for v in report.ss.values),
        "witness_positions": ";".join(str(i) for i in report.witnesses),
        "formula_match": match,
    }


def write_scan_report(reports: Iterable[DisagreementReport], stream: IO[str]) -> None:
    """Write disagreement reports as CSV rows under `SCAN_CSV_COLUMNS`."""
    writer = csv.DictWriter(stream, fieldnames=SCAN_CSV_COLUMNS)
    writer.writeheader()
    for report in reports:
        writer.writerow(report_csv_row(report))


def critical_players(system: VotingSystem, coalition: Coalition) -> tuple[int, ...]:
    """Members whose departure turns the given winning coalition losing."""
    from .core import coalition_weight, is_winning

    if not is_winning(system, coalition):
        return ()
    total = coalition_weight(system, coalition)
    out = []
    for i in sorted(coalition):
        if not system.passes(total - system.weights[i]):
            out.append(i)
    return tuple(out)


__all__ = [
    "CasePrediction",
    "DisagreementReport",
    "DivisorSystem",
    "PrimeMultipleComparison",
    "SCAN_CSV_COLUMNS",
    "abundance_class",
    "case_prediction",
    "compare_prime_multiples",
    "count_winning",
    "critical_players",
    "disagreement_report",
    "divisor_system",
    "divisors_of",
    "report_csv_row",
    "scan_abundant",
    "sigma_of",
    "sigma_range",
    "write_scan_report",
]
