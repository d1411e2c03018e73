"""Rooted and non-rooted isomorphism of deterministic context-free trees.

Inputs are reduced pDFAs with designated states.  Rooted isomorphism is
language equality of the designated states, decided by breadth-first search
over the product of the two automata; a failure comes with a shortest word
readable from exactly one side.  Non-rooted isomorphism searches a finite
configuration graph whose configurations pair a state of the first automaton
with a candidate node label of the second and an optional excluded branch;
an accepting path names a node at which re-rooting the second tree makes the
two rooted trees isomorphic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from .alphabet import merge_alphabets
from .automata import PDfa, require_reduced, trim
from .errors import UnknownStateError
from .rerooting import reroot_along_word
from .unfolding import Word


@dataclass(frozen=True)
class Witness:
    """A shortest word readable from exactly one of the designated states."""

    word: Word
    side: str  # "left" or "right": which automaton reads it

    def __str__(self) -> str:
        return " ".join(self.word)


@dataclass(frozen=True)
class NonRootedWitness:
    """Word naming the node at which re-rooting the second tree matches the first."""

    word: Word

    def __str__(self) -> str:
        return " ".join(self.word)


class UConfig(NamedTuple):
    p: str
    q: str
    back: str | None


class EquivalenceTable:
    """All state pairs of two pDFAs generating the same language."""

    __slots__ = ("pairs",)

    def __init__(self, pairs):
        self.pairs = frozenset(pairs)

    def __contains__(self, pair: tuple[str, str]) -> bool:
        return pair in self.pairs

    def equivalent(self, p: str, q: str) -> bool:
        return (p, q) in self.pairs

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(sorted(self.pairs))


def equivalence_table(a: PDfa, b: PDfa) -> EquivalenceTable:
    """Compute the language-equality relation between the states of two pDFAs.

    Pairs with different out-sets are distinguishable; distinguishability
    propagates backwards across simultaneous letter steps until a fixpoint.
    The table is the complement.  ``a`` and ``b`` may be the same automaton.
    """
    merge_alphabets(a.alphabet, b.alphabet)
    marked: set[tuple[str, str]] = set()
    work: deque[tuple[str, str]] = deque()
    for p in a.states:
        for q in b.states:
            if a.out_set(p) != b.out_set(q):
                marked.add((p, q))
                work.append((p, q))
    rev_a: dict[tuple[str, str], list[str]] = {}
    for (p, x), p2 in a.delta.items():
        rev_a.setdefault((p2, x), []).append(p)
    rev_b: dict[tuple[str, str], list[str]] = {}
    for (q, x), q2 in b.delta.items():
        rev_b.setdefault((q2, x), []).append(q)
    letters = set()
    for (_, x) in a.delta:
        letters.add(x)
    for (_, x) in b.delta:
        letters.add(x)
    while work:
        p2, q2 = work.popleft()
        for x in letters:
            for p in rev_a.get((p2, x), ()):
                for q in rev_b.get((q2, x), ()):
                    if (p, q) not in marked:
                        marked.add((p, q))
                        work.append((p, q))
    pairs = [
        (p, q)
        for p in a.states
        for q in b.states
        if (p, q) not in marked
    ]
    return EquivalenceTable(pairs)


def iso_rooted(
    a: PDfa, p_root: str, b: PDfa, q_root: str
) -> tuple[bool, Witness | None]:
    """Decide rooted isomorphism of the trees generated from two states.

    Equivalent to language equality of the designated states.  On failure
    returns a shortest separating word, found by BFS over reachable state
    pairs: the first pair with different out-sets, extended by a letter
    readable on one side only.
    """
    require_reduced(a, "first automaton")
    require_reduced(b, "second automaton")
    if p_root not in a.states:
        raise UnknownStateError(f"state {p_root!r} is not in the first automaton")
    if q_root not in b.states:
        raise UnknownStateError(f"state {q_root!r} is not in the second automaton")
    alphabet = merge_alphabets(a.alphabet, b.alphabet)
    letters = alphabet.sorted_letters()
    lidx = {x: i for i, x in enumerate(letters)}

    def index(d: PDfa) -> tuple[list[str], list[dict[int, int]], list[int]]:
        names = sorted(d.states)
        sidx = {s: i for i, s in enumerate(names)}
        succ: list[dict[int, int]] = [{} for _ in names]
        mask = [0] * len(names)
        for (p, x), q in d.delta.items():
            i = lidx[x]
            succ[sidx[p]][i] = sidx[q]
            mask[sidx[p]] |= 1 << i
        return names, succ, mask

    _, succ_a, mask_a = index(a)
    names_b, succ_b, mask_b = index(b)
    nb = len(names_b)
    start = sorted(a.states).index(p_root) * nb + names_b.index(q_root)
    parent: dict[int, tuple[int, int]] = {start: (-1, -1)}
    queue = deque([start])
    while queue:
        code = queue.popleft()
        pa, qb = divmod(code, nb)
        ma, mb = mask_a[pa], mask_b[qb]
        if ma != mb:
            sym = ma ^ mb
            i = (sym & -sym).bit_length() - 1
            side = "left" if (ma >> i) & 1 else "right"
            path: list[str] = [letters[i]]
            cur = code
            while parent[cur][0] != -1:
                cur, j = parent[cur]
                path.append(letters[j])
            path.reverse()
            return False, Witness(tuple(path), side)
        bits = ma
        while bits:
            i = (bits & -bits).bit_length() - 1
            bits &= bits - 1
            nxt = succ_a[pa][i] * nb + succ_b[qb][i]
            if nxt not in parent:
                parent[nxt] = (code, i)
                queue.append(nxt)
    return True, None


def iso_nonrooted(
    a: PDfa, p_root: str, b: PDfa, q_root: str
) -> tuple[bool, NonRootedWitness | None]:
    """Decide non-rooted isomorphism of the trees generated from two states.

    Searches the configuration graph over ``UConfig`` triples.  A
    configuration ``(p, q, back)`` stands for: some node v labeled q of the
    second tree, with the branch ``back`` toward v's already-matched child
    excluded, generates the part of the tree that must match the tree of p.
    Steps guess a predecessor transition of q and climb toward the root;
    acceptance at the root closes the isomorphism.  The step letters along a
    shortest accepting path, reversed, spell the root-to-v word, returned as
    a witness.
    """
    require_reduced(a, "first automaton")
    require_reduced(b, "second automaton")
    if p_root not in a.states:
        raise UnknownStateError(f"state {p_root!r} is not in the first automaton")
    if q_root not in b.states:
        raise UnknownStateError(f"state {q_root!r} is not in the second automaton")
    alphabet = merge_alphabets(a.alphabet, b.alphabet)
    a = trim(a, p_root)
    b = trim(b, q_root)
    table = equivalence_table(a, b)

    in_b: dict[str, list[tuple[str, str]]] = {q: [] for q in b.states}
    for (qhat, x), q in sorted(b.delta.items()):
        in_b[q].append((qhat, x))

    def subtrees_match(p: str, q: str, base: frozenset[str]) -> bool:
        return all((a.delta[(p, x)], b.delta[(q, x)]) in table for x in base)

    initial = [UConfig(p_root, q, None) for q in sorted(b.states)]
    parent: dict[UConfig, tuple[UConfig | None, str | None]] = {
        c: (None, None) for c in initial
    }
    queue = deque(initial)
    while queue:
        cfg = queue.popleft()
        p, q, back = cfg
        outs_p = a.out_set(p)
        base = b.out_set(q) - {back} if back is not None else b.out_set(q)
        base = frozenset(base)
        if q == q_root and outs_p == base and subtrees_match(p, q, base):
            word: list[str] = []
            cur: UConfig | None = cfg
            while cur is not None:
                prev, letter = parent[cur]
                if letter is not None:
                    word.append(letter)
                cur = prev
            return True, NonRootedWitness(tuple(word))
        if base < outs_p and len(outs_p) == len(base) + 1 and subtrees_match(p, q, base):
            (extra,) = outs_p - base
            for qhat, bhat in in_b[q]:
                if alphabet.inv(bhat) != extra:
                    continue
                nxt = UConfig(a.delta[(p, extra)], qhat, bhat)
                if nxt not in parent:
                    parent[nxt] = (cfg, bhat)
                    queue.append(nxt)
    return False, None


def verify_nonrooted_witness(
    a: PDfa, p_root: str, b: PDfa, q_root: str, w: Word
) -> bool:
    """Check a non-rooted witness: re-root the second tree at the node named
    by ``w`` and test rooted isomorphism against the first."""
    b2, v = reroot_along_word(b, q_root, tuple(w))
    ok, _ = iso_rooted(a, p_root, b2, v)
    return ok
