"""Power-index engines: enumeration oracles and generating-function dynamic programs.

Three interchangeable routes compute the same exact answers:

* ``ss_enum_perms`` walks all ``n!`` orderings — the ground-truth oracle for
  the Shapley-Shubik index, practical only for small ``n``.
* ``banzhaf_enum`` / ``ss_enum_subsets`` stream all ``2**n`` coalitions as bit
  masks (never materializing the power set) and tally critical/pivotal
  players; the subset route uses the identity that a player's Shapley-Shubik
  share equals ``sum |S|! (n-1-|S|)! / n!`` over losing coalitions ``S`` of
  the other players that the player tips to winning.
* ``banzhaf_dp`` / ``ss_dp`` expand the product of ``(1 + x**w_j)`` (tracking
  coalition cardinality too for Shapley-Shubik), then peel one player off the
  product per deconvolution.  Pseudo-polynomial in the scaled total weight,
  so dozens of players are fine when weights are modest integers.

All engines rescale to integers first (`scale_to_integers`), so comparisons
are pure integer arithmetic and results are exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial

from .core import IndexKind, IndexVector, QuotaMode, VotingSystem, scale_to_integers
from .errors import DegenerateSystem, InvalidInput

#: Default ceiling on the player count for the 2**n enumeration engines.
DEFAULT_ENUM_CAP = 24

#: Permutation oracle ceiling (n! blow-up).
PERM_CAP = 9

# When `engine="auto"`, prefer the DP unless the scaled weights are so large
# that the DP table would dwarf the 2**n enumeration.
_AUTO_DP_TOTAL_CAP = 2_000_000


@dataclass(frozen=True)
class SwingCounts:
    """Per-player counts of winning coalitions the player is critical in."""

    per_player: tuple[int, ...]
    total: int


@dataclass(frozen=True)
class PivotCounts:
    """Per-player counts of orderings the player is pivotal in (out of n!)."""

    per_player: tuple[int, ...]
    total: int


def _scaled_ints(system: VotingSystem) -> tuple[list[int], int]:
    """Integer weights plus the smallest integer weight a winning coalition can have."""
    scaled = scale_to_integers(system)
    qmin = scaled.quota2 + (1 if scaled.mode is QuotaMode.STRICTLY_EXCEEDS else 0)
    return list(scaled.weights), qmin


def _require_winnable(weights: list[int], qmin: int) -> None:
    if sum(weights) < qmin:
        raise DegenerateSystem("grand coalition loses: no winning coalition exists")


def _subset_weight_table(weights: list[int]) -> list[int]:
    """weights summed per bit mask; only sensible for small n (list of 2**n ints)."""
    table = [0] * (1 << len(weights))
    for mask in range(1, 1 << len(weights)):
        low = mask & -mask
        table[mask] = table[mask ^ low] + weights[low.bit_length() - 1]
    return table


def _mask_weight(weights: list[int], mask: int) -> int:
    total = 0
    while mask:
        low = mask & -mask
        total += weights[low.bit_length() - 1]
        mask ^= low
    return total


def _chunk_bounds(size: int, chunks: int) -> list[tuple[int, int]]:
    chunks = max(1, min(chunks, size))
    step, rem = divmod(size, chunks)
    bounds, start = [], 0
    for i in range(chunks):
        stop = start + step + (1 if i < rem else 0)
        bounds.append((start, stop))
        start = stop
    return bounds


def banzhaf_enum(
    system: VotingSystem, *, cap: int = DEFAULT_ENUM_CAP, chunks: int = 1
) -> tuple[SwingCounts, IndexVector]:
    """Banzhaf swing counts and index by streaming all ``2**n`` coalitions.

    ``chunks`` splits the mask range into that many pieces whose partial
    tallies are merged by integer addition, so the result is identical for
    any chunk count.  Enumeration beyond ~20 players is inherently slow; use
    the DP engine there.
    """
    n = system.n
    if n > cap:
        raise InvalidInput(f"{n} players exceeds the enumeration cap of {cap}")
    weights, qmin = _scaled_ints(system)
    _require_winnable(weights, qmin)
    wtable = _subset_weight_table(weights) if n <= 20 else None

    counts = [0] * n
    for lo, hi in _chunk_bounds(1 << n, chunks):
        part = _swing_counts_range(weights, qmin, lo, hi, wtable)
        counts = [a + b for a, b in zip(counts, part)]
    total = sum(counts)
    if total == 0:  # unreachable once the grand coalition wins, kept as a guard
        raise DegenerateSystem("no player is ever critical")
    index = IndexVector(IndexKind.BANZHAF, tuple(Fraction(c, total) for c in counts))
    return SwingCounts(tuple(counts), total), index


def _swing_counts_range(
    weights: list[int], qmin: int, lo: int, hi: int, wtable: list[int] | None
) -> list[int]:
    n = len(weights)
    counts = [0] * n
    for mask in range(lo, hi):
        total = wtable[mask] if wtable is not None else _mask_weight(weights, mask)
        if total < qmin:
            continue
        m = mask
        while m:
            low = m & -m
            i = low.bit_length() - 1
            if total - weights[i] < qmin:
                counts[i] += 1
            m ^= low
    return counts


def ss_enum_perms(system: VotingSystem) -> tuple[PivotCounts, IndexVector]:
    """Shapley-Shubik by walking every ordering; the ground-truth oracle.

    The pivot of an ordering is the first player whose arrival makes the
    prefix pass the quota (under the system's own mode).
    """
    n = system.n
    if n > PERM_CAP:
        raise InvalidInput(f"{n} players exceeds the permutation-oracle cap of {PERM_CAP}")
    weights, qmin = _scaled_ints(system)
    _require_winnable(weights, qmin)

    counts = [0] * n
    for perm in permutations(range(n)):
        acc = 0
        for i in perm:
            acc += weights[i]
            if acc >= qmin:
                counts[i] += 1
                break
    total = factorial(n)
    index = IndexVector(
        IndexKind.SHAPLEY_SHUBIK, tuple(Fraction(c, total) for c in counts)
    )
    return PivotCounts(tuple(counts), total), index


def ss_enum_subsets(
    system: VotingSystem, *, cap: int = DEFAULT_ENUM_CAP, chunks: int = 1
) -> IndexVector:
    """Shapley-Shubik via the subset form, streaming all ``2**n`` coalitions."""
    n = system.n
    if n > cap:
        raise InvalidInput(f"{n} players exceeds the enumeration cap of {cap}")
    weights, qmin = _scaled_ints(system)
    _require_winnable(weights, qmin)
    wtable = _subset_weight_table(weights) if n <= 20 else None
    fact = [factorial(i) for i in range(n + 1)]

    nums = [0] * n
    for lo, hi in _chunk_bounds(1 << n, chunks):
        part = _pivot_weight_range(weights, qmin, fact, lo, hi, wtable)
        nums = [a + b for a, b in zip(nums, part)]
    return IndexVector(
        IndexKind.SHAPLEY_SHUBIK, tuple(Fraction(v, fact[n]) for v in nums)
    )


def _pivot_weight_range(
    weights: list[int],
    qmin: int,
    fact: list[int],
    lo: int,
    hi: int,
    wtable: list[int] | None,
) -> list[int]:
    n = len(weights)
    nums = [0] * n
    for mask in range(lo, hi):
        total = wtable[mask] if wtable is not None else _mask_weight(weights, mask)
        if total < qmin:
            continue
        size = mask.bit_count()
        weight_factor = fact[size - 1] * fact[n - size]
        m = mask
        while m:
            low = m & -m
            i = low.bit_length() - 1
            if total - weights[i] < qmin:
                nums[i] += weight_factor
            m ^= low
    return nums


def banzhaf_dp(system: VotingSystem) -> tuple[SwingCounts, IndexVector]:
    """Banzhaf counts from the subset-weight generating function.

    Expands ``prod_j (1 + x**w_j)`` once, then removes player ``i`` by exact
    polynomial division to count the other players' coalitions in the swing
    window ``qmin - w_i <= weight <= qmin - 1``.
    """
    weights, qmin = _scaled_ints(system)
    _require_winnable(weights, qmin)
    total = sum(weights)

    coeff = [0] * (total + 1)
    coeff[0] = 1
    for w in weights:
        if w:
            for v in range(total, w - 1, -1):
                coeff[v] += coeff[v - w]
        else:
            coeff = [2 * c for c in coeff]

    counts: list[int] = []
    for wi in weights:
        lo, hi = max(qmin - wi, 0), min(qmin - 1, total - wi)
        if wi == 0 or lo > hi:
            counts.append(0)
            continue
        excl = coeff[:wi]
        for v in range(wi, total + 1):
            excl.append(coeff[v] - excl[v - wi])
        counts.append(sum(excl[lo : hi + 1]))

    swings = sum(counts)
    if swings == 0:
        raise DegenerateSystem("no player is ever critical")
    index = IndexVector(IndexKind.BANZHAF, tuple(Fraction(c, swings) for c in counts))
    return SwingCounts(tuple(counts), swings), index


def ss_dp(system: VotingSystem) -> IndexVector:
    """Shapley-Shubik from the joint (cardinality, weight) generating function.

    Tracks how many coalitions of each size reach each weight, peels player
    ``i`` off by deconvolution, and weighs each swing bucket of size ``s`` by
    ``s! (n-1-s)! / n!``.
    """
    weights, qmin = _scaled_ints(system)
    _require_winnable(weights, qmin)
    n, total = len(weights), sum(weights)
    fact = [factorial(i) for i in range(n + 1)]

    # table[s][v]: coalitions of size s with scaled weight v, over all players
    table = [[0] * (total + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for j, w in enumerate(weights):
        for s in range(j + 1, 0, -1):
            row, prev = table[s], table[s - 1]
            row[w:] = [a + b for a, b in zip(row[w:], prev[: total + 1 - w])]

    pivots: list[int] = []
    for wi in weights:
        lo, hi = max(qmin - wi, 0), min(qmin - 1, total - wi)
        if wi == 0 or lo > hi:
            pivots.append(0)
            continue
        prev = table[0]
        num = fact[0] * fact[n - 1] * sum(prev[lo : hi + 1])
        for s in range(1, n):
            cur = table[s][:wi]
            cur += [c - d for c, d in zip(table[s][wi:], prev[: total + 1 - wi])]
            num += fact[s] * fact[n - 1 - s] * sum(cur[lo : hi + 1])
            prev = cur
        pivots.append(num)

    return IndexVector(
        IndexKind.SHAPLEY_SHUBIK, tuple(Fraction(p, fact[n]) for p in pivots)
    )


def _pick_engine(system: VotingSystem, engine: str, cap: int) -> str:
    if engine in ("enum", "dp"):
        return engine
    if engine != "auto":
        raise InvalidInput(f"unknown engine {engine!r} (expected enum, dp or auto)")
    if system.n > cap:
        return "dp"
    scaled = scale_to_integers(system)
    return "enum" if sum(scaled.weights) > _AUTO_DP_TOTAL_CAP else "dp"


def banzhaf(
    system: VotingSystem, engine: str = "auto", *, cap: int = DEFAULT_ENUM_CAP
) -> tuple[SwingCounts, IndexVector]:
    """Banzhaf counts and index through the chosen engine (enum, dp or auto)."""
    if _pick_engine(system, engine, cap) == "enum":
        return banzhaf_enum(system, cap=cap)
    return banzhaf_dp(system)


def shapley_shubik(
    system: VotingSystem, engine: str = "auto", *, cap: int = DEFAULT_ENUM_CAP
) -> IndexVector:
    """Shapley-Shubik index through the chosen engine (enum, dp or auto)."""
    if _pick_engine(system, engine, cap) == "enum":
        return ss_enum_subsets(system, cap=cap)
    return ss_dp(system)


def count_winning(
    system: VotingSystem, engine: str = "auto", *, cap: int = DEFAULT_ENUM_CAP
) -> int:
    """Number of winning coalitions (the empty coalition counts as losing)."""
    weights, qmin = _scaled_ints(system)
    n = len(weights)
    if engine == "auto":
        engine = "enum" if n <= min(cap, 16) else "dp"
    if engine == "enum":
        if n > cap:
            raise InvalidInput(f"{n} players exceeds the enumeration cap of {cap}")
        wtable = _subset_weight_table(weights) if n <= 20 else None
        if wtable is not None:
            return sum(1 for w in wtable if w >= qmin)
        return sum(
            1 for mask in range(1 << n) if _mask_weight(weights, mask) >= qmin
        )
    if engine != "dp":
        raise InvalidInput(f"unknown engine {engine!r} (expected enum, dp or auto)")
    total = sum(weights)
    coeff = [0] * (total + 1)
    coeff[0] = 1
    for w in weights:
        if w:
            for v in range(total, w - 1, -1):
                coeff[v] += coeff[v - w]
        else:
            coeff = [2 * c for c in coeff]
    return sum(coeff[min(qmin, total + 1) :])
