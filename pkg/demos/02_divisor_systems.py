"""Voting games played by the divisors of a number.

Each divisor of n votes with weight equal to itself; the quota is a bare
majority of sigma(n), the divisor sum.  Perfect and barely-abundant
numbers make games where the two power indices always disagree
somewhere, and small-excess cases follow closed forms that the engine
re-derives exactly.
"""

from votingpower import (
    abundance_class,
    compare_prime_multiples,
    disagreement_report,
    divisor_system,
    scan_abundant,
    sigma_of,
)

# The perfect number 6: divisors 6, 3, 2, 1 voting with quota 13/2.
ds = divisor_system(6)
print(f"n=6 is {abundance_class(6)}: sigma = {ds.sigma}, quota = {ds.system.quota}")
report = disagreement_report(6)
print("  seat  divisor  banzhaf  shapley-shubik")
for i, d in enumerate(ds.divisors):
    marker = "  <- indices differ" if i in report.witnesses else ""
    print(
        f"  {i:>4}  {d:>7}  {report.banzhaf.values[i]!s:>7}  "
        f"{report.ss.values[i]!s:>14}{marker}"
    )
print(f"  closed-form catalog match: {report.formula_match}")

# The same disagreement shows up for every n <= 1000 whose excess
# sigma(n) - 2n sits between 0 and 5.  Spot-check a few:
for n in (28, 20, 18, 12, 70):
    r = disagreement_report(n)
    k = sigma_of(n) - 2 * n
    print(
        f"n={n:>3} (excess {k}): witnesses at seats {list(r.witnesses)}, "
        f"catalog {'matches' if r.formula_match else 'recorded mismatch'}"
    )

# A census: abundant numbers up to 100 with exactly six divisors.
# There are three of them, not one.
print("\nabundant n <= 100 with 6 divisors:")
for n, d, k in scan_abundant(100, 6):
    print(f"  n={n}: {d} divisors, excess {k}")

# Multiplying a base by different large primes preserves the whole game:
# 6*31 and 6*37 have the same number of winning coalitions...
cmp = compare_prime_multiples(6, 31, 37)
print(
    f"\nwinning coalitions: n={cmp.n * cmp.p} has {cmp.count_p}, "
    f"n={cmp.n * cmp.q} has {cmp.count_q}, equal = {cmp.equal}"
)

# ...and in fact the full index vectors agree seat-by-seat.
rp, rq = disagreement_report(12 * 31), disagreement_report(12 * 37)
print(
    "n=372 and n=444 index vectors identical:",
    rp.banzhaf.values == rq.banzhaf.values and rp.ss.values == rq.ss.values,
)
