"""Families of non-trivial fixed points, solved in closed form.

Two parametric shapes produce fixed points of the Shapley-Shubik index
map: one heavy player with m equal lights ("ab"), and two equal heavies
with m equal lights ("aab").  The closed forms live behind a floor gate
(they need 1/(2b) to land in the right window and off integers); the
solvers sweep all branches and the exact engine certifies every answer.
"""

from fractions import Fraction

from votingpower import (
    IndexKind,
    IntegerBoundary,
    aab_fixed_point_classes,
    aab_fixed_points,
    aab_heavy_ss_power,
    ab_banzhaf_indices,
    ab_family_point,
    ab_fixed_points,
    ab_heavy_ss_power,
    is_fixed_point,
)

F = Fraction

# The flagship point: heavy 1/3 against five lights of 2/15.
print("heavy share at (m=5, b=2/15):", ab_heavy_ss_power(5, F(2, 15)))
print("  ...which equals the heavy weight 1 - 5*(2/15) = 1/3: a fixed point.")

# The same point is ALSO fixed for the Banzhaf map -- rare for this family.
pair = ab_banzhaf_indices(5, F(2, 15))
print(f"  banzhaf indices there: heavy {pair.heavy}, light {pair.light}")

# Parametric construction: k indexes the family, c the offset.  The gate
# rejects sizes where the floor window misses or 1/(2b) is an integer.
print("\none-heavy parametric points (odd branch):")
for k in range(2, 7):
    spec = ab_family_point(k, 1, "odd")
    status = "valid" if spec.valid else f"rejected ({spec.reason})"
    print(f"  k={k}: m={spec.m}, b={spec.light_weight}, {status}")

# Exhaustive solve per light count, certified by the exact engine.
print("\nall one-heavy fixed points by light count:")
for m in range(2, 9):
    sols = ab_fixed_points(m)
    certified = all(
        is_fixed_point((1 - m * b,) + (b,) * m, IndexKind.SHAPLEY_SHUBIK)
        for b in sols
    )
    print(f"  m={m}: b in {[str(b) for b in sols]} (engine-certified: {certified})")

print("\nall two-heavy fixed points by light count:")
for m in range(2, 11):
    sols = aab_fixed_points(m)
    print(f"  m={m}: b in {[str(b) for b in sols]}")

# The two-heavy closed forms organize into classes by parity of m.
print("\ntwo-heavy classes at k=2:")
for parity in ("even", "odd"):
    for spec in aab_fixed_point_classes(2, parity):
        print(
            f"  m={spec.m} ({parity}): b={spec.light_weight}, "
            f"valid={spec.valid}{' -- ' + spec.reason if spec.reason else ''}"
        )

# On the integer boundary the branch formula is undefined and the solver
# deliberately refuses; the engine shows such points can still be fixed.
try:
    aab_heavy_ss_power(2, F(1, 6))
except IntegerBoundary as exc:
    print(f"\nsolver refuses m=2, b=1/6: {exc}")
boundary = (F(1, 3), F(1, 3), F(1, 6), F(1, 6))
print(
    "engine check of (1/3, 1/3, 1/6, 1/6):",
    is_fixed_point(boundary, IndexKind.SHAPLEY_SHUBIK),
)
