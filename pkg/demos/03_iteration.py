"""Feeding an index back in as the weights.

Normalize a weight vector, play strict majority at quota 1/2, compute an
index, and use that index as the next round's weights.  Orbits of this
map either land on a fixed point or would cycle; the iterator detects
both and serializes the full trace as JSON.
"""

from fractions import Fraction

from votingpower import (
    FixedPoint,
    IndexKind,
    apply_index_map,
    is_fixed_point,
    iterate,
    trace_to_json,
)

F = Fraction

# One application of the map: (1/2, 1/4, 1/4) concentrates to (2/3, 1/6, 1/6)
# under the Shapley-Shubik index...
step = apply_index_map((F(1, 2), F(1, 4), F(1, 4)), IndexKind.SHAPLEY_SHUBIK)
print("one step from (1/2, 1/4, 1/4):", step)

# ...and iterating collapses all the way to a dictator in two steps.
trace = iterate((F(1, 2), F(1, 4), F(1, 4)), IndexKind.SHAPLEY_SHUBIK)
for i, state in enumerate(trace.states):
    print(f"  step {i}: {tuple(str(w) for w in state)}")
print("outcome:", trace.outcome)

# The trace round-trips through JSON for logging or external tooling.
print("\nas JSON:")
print(trace_to_json(trace))

# Fixed points of the map include every uniform vector and every dictator...
print("\nuniform (1/4 x4) fixed under both maps:",
      is_fixed_point((F(1, 4),) * 4, IndexKind.BANZHAF)
      and is_fixed_point((F(1, 4),) * 4, IndexKind.SHAPLEY_SHUBIK))

# ...and also genuinely lopsided vectors, like one heavy at 1/3 with five
# lights at 2/15 (see demo 04 for where that comes from).
heavy_light = (F(1, 3),) + (F(2, 15),) * 5
print("(1/3, 2/15 x5) fixed under shapley-shubik:",
      is_fixed_point(heavy_light, IndexKind.SHAPLEY_SHUBIK))
print("(1/3, 2/15 x5) fixed under banzhaf:      ",
      is_fixed_point(heavy_light, IndexKind.BANZHAF))

# Starting nearby tells a different story: small perturbations drain away.
trace = iterate((F(1, 3), F(1, 6), F(1, 8), F(3, 8)), IndexKind.BANZHAF, max_iters=20)
print("\nfrom (1/3, 1/6, 1/8, 3/8) under banzhaf:")
for i, state in enumerate(trace.states):
    print(f"  step {i}: {tuple(str(w) for w in state)}")
assert isinstance(trace.outcome, FixedPoint)
print("outcome:", trace.outcome)
