"""Voting weight is not voting power.

A walk through the two classic power indices on small weighted games,
computed with exact rational arithmetic, plus a look at how the three
engines (subset enumeration, permutation enumeration, dynamic
programming) agree with each other.
"""

from fractions import Fraction

from votingpower import (
    QuotaMode,
    VotingSystem,
    banzhaf,
    banzhaf_dp,
    banzhaf_enum,
    count_winning,
    critical_players,
    shapley_shubik,
    ss_dp,
    ss_enum_perms,
    ss_enum_subsets,
)

F = Fraction


def show(title: str, system: VotingSystem) -> None:
    swings, bz = banzhaf(system)
    ss = shapley_shubik(system)
    print(f"\n{title}")
    shown = ", ".join(str(w) for w in system.weights)
    print(f"  quota {system.quota} ({system.mode.value}), weights [{shown}]")
    print(f"  winning coalitions: {count_winning(system)}")
    for i in range(system.n):
        print(
            f"  player {i}: weight {system.weights[i]}, "
            f"swings {swings.per_player[i]}, banzhaf {bz.values[i]}, "
            f"shapley-shubik {ss.values[i]}"
        )


# A 3-player committee: one chair with weight 2, two members with weight 1,
# quota 3.  The chair's weight share is 1/2, but both indices give more.
committee = VotingSystem(quota=F(3), mode=QuotaMode.MEETS_OR_EXCEEDS, weights=(2, 1, 1))
show("Committee [3; 2, 1, 1]", committee)

# The chair is critical in {chair, m1}, {chair, m2} and the grand coalition;
# each member only in the pair it completes.
print("  critical in the grand coalition:", critical_players(committee, {0, 1, 2}))
print("  critical in {chair, member1}:  ", critical_players(committee, {0, 1}))

# Raising one weight past the quota makes a dictator: all power, everywhere.
dictator = VotingSystem(quota=F(3), mode=QuotaMode.MEETS_OR_EXCEEDS, weights=(3, 1, 1))
show("Dictator [3; 3, 1, 1]", dictator)

# Fractional weights work natively -- no scaling required on the caller's side.
fractional = VotingSystem(
    quota=F(1, 2),
    mode=QuotaMode.STRICTLY_EXCEEDS,
    weights=(F(1, 3), F(2, 15), F(2, 15), F(2, 15), F(2, 15), F(2, 15)),
)
show("Strict majority with rational weights", fractional)

# All engines deliver identical exact answers; pick by size, not accuracy.
print("\nEngine agreement on the fractional game:")
print("  banzhaf enum == dp:", banzhaf_enum(fractional) == banzhaf_dp(fractional))
print(
    "  shapley-shubik perms == subsets == dp:",
    ss_enum_perms(fractional)[1]
    == ss_enum_subsets(fractional)
    == ss_dp(fractional),
)
