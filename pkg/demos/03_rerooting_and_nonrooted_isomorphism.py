"""Moving roots, and isomorphism when the root need not be preserved.

Run: python3 demos/03_rerooting_and_nonrooted_isomorphism.py
"""

from cftree import (
    PDfa,
    disc_equal_rooted,
    involutive_closure,
    iso_nonrooted,
    iso_rooted,
    reroot_along_word,
    unfold_pdfa,
    verify_nonrooted_witness,
)

al = involutive_closure(["a"])

# The a-ray seen from its endpoint...
ray = PDfa({"u"}, al, {("u", "a"): "u"})
# ...and the same ray seen from one step inside: a forward ray plus a single
# backward edge to the dead old endpoint.
interior = PDfa(
    {"r", "s", "z"}, al, {("r", "a^-1"): "z", ("r", "a"): "s", ("s", "a"): "s"}
)
# A line that is infinite in both directions.
line = PDfa(
    {"v", "s", "x"},
    al,
    {("v", "a"): "s", ("s", "a"): "s", ("v", "a^-1"): "x", ("x", "a^-1"): "x"},
)

ok, _ = iso_rooted(ray, "u", interior, "r")
print("endpoint-rooted vs interior-rooted ray, rooted:", ok)

ok, witness = iso_nonrooted(ray, "u", interior, "r")
print(f"same pair, non-rooted: {ok}, witness node named by: {witness!s:>4}")
print("witness verifies:", verify_nonrooted_witness(ray, "u", interior, "r", witness.word))

# The witness is checked by actually moving the root: crossing one edge
# duplicates two states, after which the automaton condenses back.
rerooted, new_root = reroot_along_word(interior, "r", witness.word)
got = unfold_pdfa(rerooted, new_root, 3)
want = unfold_pdfa(ray, "u", 3)
print("rerooted interior tree matches the endpoint ray at radius 3:",
      disc_equal_rooted(got, want))

# Re-rooting the endpoint ray one step in changes its rooted type: the new
# root sees both a forward ray and the backward edge.
moved, state = reroot_along_word(ray, "u", ("a",))
print("\nendpoint ray rerooted at depth 1, out-set:", sorted(moved.out_set(state)))

# The ray and the bi-infinite line are not isomorphic even without roots:
# the ray has a degree-one node, the line does not.
ok, _ = iso_nonrooted(ray, "u", line, "v")
print("ray vs bi-infinite line, non-rooted:", ok)

# Every node of the line looks alike, so re-rooting anywhere is invisible.
moved, state = reroot_along_word(line, "v", ("a", "a"))
print("line rerooted two steps, still the same rooted tree:",
      disc_equal_rooted(unfold_pdfa(line, "v", 4), unfold_pdfa(moved, state, 4)))
