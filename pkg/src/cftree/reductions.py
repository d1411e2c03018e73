"""Hardness reductions, reused here as instance generators for testing.

Bounded-out-degree graph reachability maps to rooted NON-isomorphism of two
pDFAs built over a binary alphabet with a reachability-prefix gadget, and any
rooted instance lifts to a non-rooted one by hanging both roots on a fresh
marker letter.  Both constructions are metamorphic test generators: the
verdict of the isomorphism engine on the output is forced by an independent,
trivially checkable property of the input.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .alphabet import involutive_closure, merge_alphabets
from .automata import PDfa, require_reduced
from .errors import AlphabetError, UnknownStateError

TOP_LETTER = "TOP"


@dataclass(frozen=True)
class Gap2Instance:
    """Directed graph on nodes 0..n-1 with out-degree at most two."""

    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(tuple(e) for e in self.edges))
        if self.n < 1:
            raise ValueError("need at least one node")
        out: dict[int, int] = {}
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) leaves the node range")
            out[u] = out.get(u, 0) + 1
            if out[u] > 2:
                raise ValueError(f"node {u} has more than two outgoing edges")


def gap2_has_path(g: Gap2Instance) -> bool:
    """Plain BFS reachability from node 0 to node n-1."""
    target = g.n - 1
    succ: dict[int, list[int]] = {}
    for u, v in g.edges:
        succ.setdefault(u, []).append(v)
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        if u == target:
            return True
        for v in succ.get(u, ()):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return False


def reduce_gap2_to_rooted_iso(g: Gap2Instance) -> tuple[PDfa, str, PDfa, str]:
    """Encode a reachability instance as a rooted-isomorphism instance.

    The two output automata differ only in the state reached by reading the
    all-zeros address: in the first it is the original source node (a dead
    end exactly when the target is reachable from it), in the second a state
    looping on both letters.  Hence the designated states generate isomorphic
    trees if and only if there is no path from 0 to n-1.

    Construction: drop edges into 0 and out of n-1, pad the node count to a
    power of two by inserting fresh nodes after 0, label the (up to two)
    outgoing edges per node with 0/1 (duplicating single edges, adding two
    self-loops to non-target sinks), then overlay a binary prefix tree
    addressing every node by its padded binary name.  Returns
    ``(a, root_a, b, root_b)``; both roots are the empty-word prefix state.
    """
    if g.n < 2:
        raise ValueError("need at least two nodes")
    ell = (g.n - 1).bit_length()
    size = 1 << ell
    pad = size - g.n

    def renum(i: int) -> int:
        return i if i == 0 else i + pad

    target = size - 1
    edges = sorted(
        (renum(u), renum(v))
        for u, v in g.edges
        if v != 0 and u != g.n - 1
    )
    succ: dict[int, list[int]] = {}
    for u, v in edges:
        succ.setdefault(u, []).append(v)

    def bname(i: int) -> str:
        return format(i, f"0{ell}b")

    alphabet = involutive_closure(["0", "1"])
    delta: dict[tuple[str, str], str] = {}
    for i in range(size):
        outs = sorted(succ.get(i, ()))
        if not outs:
            if i != target:
                delta[(bname(i), "0")] = bname(i)
                delta[(bname(i), "1")] = bname(i)
        elif len(outs) == 1:
            delta[(bname(i), "0")] = bname(outs[0])
            delta[(bname(i), "1")] = bname(outs[0])
        else:
            delta[(bname(i), "0")] = bname(outs[0])
            delta[(bname(i), "1")] = bname(outs[1])
    states = {bname(i) for i in range(size)}
    for k in range(ell):
        for w in range(1 << k):
            prefix = format(w, f"0{k}b") if k else ""
            states.add(prefix)
            delta[(prefix, "0")] = prefix + "0"
            delta[(prefix, "1")] = prefix + "1"
    a = PDfa(states, alphabet, delta)

    zeros = bname(0)
    states_b = (states - {zeros}) | {"f"}
    delta_b: dict[tuple[str, str], str] = {}
    for (p, x), q in delta.items():
        if p == zeros:
            continue
        delta_b[(p, x)] = "f" if q == zeros else q
    delta_b[("f", "0")] = "f"
    delta_b[("f", "1")] = "f"
    b = PDfa(states_b, alphabet, delta_b)
    return a, "", b, ""


def reduce_rooted_to_nonrooted(
    a: PDfa, p_root: str, b: PDfa, q_root: str
) -> tuple[PDfa, str, PDfa, str]:
    """Lift a rooted instance to a non-rooted one with a fresh marker letter.

    Each automaton gets a new designated state with a single marker-labeled
    transition onto the old designated state.  The new roots are the only
    nodes of their trees with an outgoing marker edge, so any isomorphism of
    the lifted trees must match them, making the non-rooted verdict on the
    lift equal the rooted verdict on the original.
    """
    require_reduced(a, "first automaton")
    require_reduced(b, "second automaton")
    if p_root not in a.states:
        raise UnknownStateError(f"state {p_root!r} is not in the first automaton")
    if q_root not in b.states:
        raise UnknownStateError(f"state {q_root!r} is not in the second automaton")
    merged = merge_alphabets(a.alphabet, b.alphabet)
    if TOP_LETTER in merged:
        raise AlphabetError(f"letter {TOP_LETTER!r} is already present")
    alphabet = merge_alphabets(merged, involutive_closure([TOP_LETTER]))

    def lift(d: PDfa, root: str) -> tuple[PDfa, str]:
        new_root = root + "'"
        while new_root in d.states:
            new_root += "'"
        delta = dict(d.delta)
        delta[(new_root, TOP_LETTER)] = root
        return PDfa(d.states | {new_root}, alphabet, delta), new_root

    a2, p2 = lift(a, p_root)
    b2, q2 = lift(b, q_root)
    return a2, p2, b2, q2


__all__ = [
    "Gap2Instance",
    "TOP_LETTER",
    "gap2_has_path",
    "reduce_gap2_to_rooted_iso",
    "reduce_rooted_to_nonrooted",
]
