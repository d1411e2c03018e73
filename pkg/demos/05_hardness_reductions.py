"""The two reductions, used as self-checking instance generators.

Run: python3 demos/05_hardness_reductions.py
"""

import random

from cftree import (
    Gap2Instance,
    gap2_has_path,
    iso_nonrooted,
    iso_rooted,
    reduce_gap2_to_rooted_iso,
    reduce_rooted_to_nonrooted,
)


# Reachability in a bounded-out-degree graph becomes rooted NON-isomorphism:
# the designated trees match exactly when no path from 0 to n-1 exists.
print("reachability -> rooted isomorphism")
for edges, label in [
    (frozenset({(0, 1), (1, 3)}), "0 -> 1 -> 3 reaches the target"),
    (frozenset({(0, 1), (1, 2)}), "path stops at 2, target 3 unreached"),
    (frozenset(), "no edges at all"),
]:
    g = Gap2Instance(4, edges)
    a, ra, b, rb = reduce_gap2_to_rooted_iso(g)
    ok, _ = iso_rooted(a, ra, b, rb)
    print(f"  {label:<40} path={gap2_has_path(g)!s:<5} isomorphic={ok}")

# Random agreement check: the verdict is forced by plain BFS on the input.
rng = random.Random(0)
agree = 0
for _ in range(100):
    g = Gap2Instance(
        8,
        frozenset(
            (u, rng.randrange(8))
            for u in range(8)
            if rng.random() < 0.5
        ),
    )
    a, ra, b, rb = reduce_gap2_to_rooted_iso(g)
    ok, _ = iso_rooted(a, ra, b, rb)
    agree += ok == (not gap2_has_path(g))
print(f"  random instances agreeing with BFS oracle: {agree}/100")

# Any rooted instance lifts to a non-rooted one: hang both designated states
# under fresh roots reached by a marker letter.  The markers pin any
# isomorphism to map root to root.
print("\nrooted -> non-rooted lift")
g = Gap2Instance(4, frozenset({(0, 1), (1, 3)}))
a, ra, b, rb = reduce_gap2_to_rooted_iso(g)
rooted, _ = iso_rooted(a, ra, b, rb)
a2, p2, b2, q2 = reduce_rooted_to_nonrooted(a, ra, b, rb)
lifted, _ = iso_nonrooted(a2, p2, b2, q2)
print(f"  rooted verdict {rooted} -> lifted non-rooted verdict {lifted}")

g = Gap2Instance(4, frozenset())
a, ra, b, rb = reduce_gap2_to_rooted_iso(g)
rooted, _ = iso_rooted(a, ra, b, rb)
a2, p2, b2, q2 = reduce_rooted_to_nonrooted(a, ra, b, rb)
lifted, witness = iso_nonrooted(a2, p2, b2, q2)
print(f"  rooted verdict {rooted} -> lifted non-rooted verdict {lifted}, "
      f"witness is the root itself: {witness.word == ()}")
