"""Rooted isomorphism is language equality, with shortest separating words.

Run: python3 demos/02_rooted_isomorphism.py
"""

from cftree import (
    PDfa,
    equivalence_table,
    involutive_closure,
    iso_rooted,
    language_upto,
)

al = involutive_closure(["a", "b"])
d = PDfa({"p", "q"}, al, {("p", "a"): "p", ("p", "b"): "q", ("q", "b"): "q"})

# Two states of one automaton generate isomorphic rooted trees exactly when
# they read the same words.
table = equivalence_table(d, d)
print("equivalent state pairs:", sorted(table))

ok, witness = iso_rooted(d, "p", d, "q")
print(f"\np vs q rooted isomorphic? {ok}")
print(f"shortest separating word: {witness} (readable on the {witness.side})")

# A fresh copy with renamed states is indistinguishable.
copy = PDfa(
    {"p2", "q2"}, al, {("p2", "a"): "p2", ("p2", "b"): "q2", ("q2", "b"): "q2"}
)
ok, _ = iso_rooted(d, "p", copy, "p2")
print(f"\np vs renamed copy isomorphic? {ok}")

# The languages witness the difference directly.
lp = language_upto(d, "p", 2)
lq = language_upto(d, "q", 2)
print("\nwords of length <= 2 from p but not q:")
for w in sorted(lp - lq):
    print("  ", ",".join(w))

# Two rays over different letters differ on the first step.
x = PDfa({"s"}, involutive_closure(["a"]), {("s", "a"): "s"})
y = PDfa({"t"}, involutive_closure(["b"]), {("t", "b"): "t"})
ok, witness = iso_rooted(x, "s", y, "t")
print(f"\na-ray vs b-ray isomorphic? {ok}, witness {witness}")
