"""Multi-edge NFAs and partial DFAs over involutive alphabets.

An :class:`MNfa` is a finite edge-labeled multigraph: parallel transitions
with identical endpoints and label are distinguished by an integer id.  A
:class:`PDfa` stores its transitions as a partial function
``(state, letter) -> state``, so determinism holds by representation.  Both
are immutable after construction; all checks live in separate functions so a
caller can collect every problem at once instead of failing fast.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

from .alphabet import InvolutiveAlphabet
from .errors import NotDeterministicError, NotReducedError, UnknownStateError


@dataclass(frozen=True)
class Transition:
    tid: int
    src: str
    label: str
    dst: str

    def triple(self) -> tuple[str, str, str]:
        return (self.src, self.label, self.dst)


class MNfa:
    """Multi-edge nondeterministic finite automaton."""

    __slots__ = ("states", "alphabet", "transitions", "_by_src", "_by_id")

    def __init__(
        self,
        states: Iterable[str],
        alphabet: InvolutiveAlphabet,
        transitions: Iterable[Transition],
    ):
        self.states = frozenset(states)
        self.alphabet = alphabet
        self.transitions = tuple(sorted(transitions, key=lambda t: t.tid))
        by_src: dict[str, list[Transition]] = {}
        by_id: dict[int, Transition] = {}
        for t in self.transitions:
            by_src.setdefault(t.src, []).append(t)
            by_id[t.tid] = t
        self._by_src = by_src
        self._by_id = by_id

    def transitions_from(self, state: str) -> tuple[Transition, ...]:
        if state not in self.states:
            raise UnknownStateError(f"state {state!r} is not in the automaton")
        return tuple(self._by_src.get(state, ()))

    def transition_by_id(self, tid: int) -> Transition:
        try:
            return self._by_id[tid]
        except KeyError:
            raise UnknownStateError(f"no transition with id {tid}") from None

    def max_tid(self) -> int:
        return max((t.tid for t in self.transitions), default=-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MNfa):
            return NotImplemented
        return (
            self.states == other.states
            and self.alphabet == other.alphabet
            and self.transitions == other.transitions
        )

    def __hash__(self) -> int:
        return hash((self.states, self.alphabet, self.transitions))

    def __repr__(self) -> str:
        return f"MNfa(states={len(self.states)}, transitions={len(self.transitions)})"


class PDfa:
    """Partial deterministic finite automaton (a deterministic letter-labeled graph)."""

    __slots__ = ("states", "alphabet", "delta", "_out")

    def __init__(
        self,
        states: Iterable[str],
        alphabet: InvolutiveAlphabet,
        delta: Mapping[tuple[str, str], str],
    ):
        self.states = frozenset(states)
        self.alphabet = alphabet
        self.delta = dict(delta)
        out: dict[str, set[str]] = {s: set() for s in self.states}
        for (p, a) in self.delta:
            out.setdefault(p, set()).add(a)
        self._out = {p: frozenset(v) for p, v in out.items()}

    def out_set(self, p: str) -> frozenset[str]:
        """Letters readable from ``p``."""
        if p not in self.states:
            raise UnknownStateError(f"state {p!r} is not in the automaton")
        return self._out.get(p, frozenset())

    def step(self, p: str, a: str) -> str | None:
        return self.delta.get((p, a))

    def run(self, p: str, word: Iterable[str]) -> str | None:
        """State reached from ``p`` by reading ``word``, or None if it dies."""
        cur: str | None = p
        for a in word:
            if cur is None:
                return None
            cur = self.delta.get((cur, a))
        return cur

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PDfa):
            return NotImplemented
        return (
            self.states == other.states
            and self.alphabet == other.alphabet
            and self.delta == other.delta
        )

    def __hash__(self) -> int:
        return hash((self.states, self.alphabet, tuple(sorted(self.delta.items()))))

    def __repr__(self) -> str:
        return f"PDfa(states={len(self.states)}, transitions={len(self.delta)})"


class Issue(NamedTuple):
    code: str
    detail: str
    ids: tuple


@dataclass
class ValidationReport:
    issues: list[Issue]

    @property
    def ok(self) -> bool:
        return not self.issues

    def codes(self) -> set[str]:
        return {i.code for i in self.issues}


def validate_mnfa(m: MNfa) -> ValidationReport:
    """Report dangling state references, unknown labels and duplicate ids."""
    issues: list[Issue] = []
    seen_ids: set[int] = set()
    for t in m.transitions:
        if t.tid in seen_ids:
            issues.append(Issue("DUPLICATE_ID", f"transition id {t.tid} used more than once", (t.tid,)))
        seen_ids.add(t.tid)
        if t.src not in m.states:
            issues.append(Issue("DANGLING_STATE", f"transition {t.tid} starts at unknown state {t.src!r}", (t.tid, t.src)))
        if t.dst not in m.states:
            issues.append(Issue("DANGLING_STATE", f"transition {t.tid} ends at unknown state {t.dst!r}", (t.tid, t.dst)))
        if t.label not in m.alphabet:
            issues.append(Issue("UNKNOWN_LABEL", f"transition {t.tid} is labeled with unknown letter {t.label!r}", (t.tid, t.label)))
    return ValidationReport(issues)


def validate_pdfa(d: PDfa) -> ValidationReport:
    issues: list[Issue] = []
    for (p, a), q in sorted(d.delta.items()):
        if p not in d.states:
            issues.append(Issue("DANGLING_STATE", f"transition from unknown state {p!r}", (p,)))
        if q not in d.states:
            issues.append(Issue("DANGLING_STATE", f"transition ({p!r}, {a!r}) ends at unknown state {q!r}", (q,)))
        if a not in d.alphabet:
            issues.append(Issue("UNKNOWN_LABEL", f"transition from {p!r} is labeled with unknown letter {a!r}", (a,)))
    return ValidationReport(issues)


def find_nondeterministic_pair(m: MNfa) -> tuple[Transition, Transition] | None:
    """Two distinct transitions sharing start and label, if any exist."""
    seen: dict[tuple[str, str], Transition] = {}
    for t in m.transitions:
        key = (t.src, t.label)
        if key in seen:
            return (seen[key], t)
        seen[key] = t
    return None


def as_pdfa(m: MNfa) -> PDfa:
    """Reinterpret an mNFA as a pDFA.

    Succeeds exactly when no two distinct transitions share start state and
    label; the result generates the same tree from every state.
    """
    pair = find_nondeterministic_pair(m)
    if pair is not None:
        a, b = pair
        raise NotDeterministicError(
            f"transitions {a.tid} and {b.tid} both read {a.label!r} from state {a.src!r}",
            pair=pair,
        )
    delta = {(t.src, t.label): t.dst for t in m.transitions}
    return PDfa(m.states, m.alphabet, delta)


def pdfa_to_mnfa(d: PDfa) -> MNfa:
    """View a pDFA as an mNFA, with ids assigned in sorted transition order."""
    transitions = [
        Transition(i, p, a, q)
        for i, ((p, a), q) in enumerate(sorted(d.delta.items()))
    ]
    return MNfa(d.states, d.alphabet, transitions)


def reducedness_violation(d: PDfa) -> tuple[tuple[str, str, str], tuple[str, str, str]] | None:
    """A pair of transitions ``p -a-> q``, ``q -a^-1-> r``, if one exists.

    Such a pair puts a word with an ``a a^-1`` factor in the language of
    ``p``, which is what reducedness forbids.  For a self-inverse letter this
    degenerates to an ``a a`` path.
    """
    for (p, a), q in sorted(d.delta.items()):
        ainv = d.alphabet.inv(a)
        r = d.delta.get((q, ainv))
        if r is not None:
            return ((p, a, q), (q, ainv, r))
    return None


def is_reduced(d: PDfa) -> bool:
    return reducedness_violation(d) is None


def require_reduced(d: PDfa, what: str = "automaton") -> None:
    pair = reducedness_violation(d)
    if pair is not None:
        (p, a, q), (_, ainv, r) = pair
        raise NotReducedError(
            f"{what} is not reduced: {p!r} -{a}-> {q!r} -{ainv}-> {r!r}",
            pair=pair,
        )


def reachable_states(aut: MNfa | PDfa, root: str) -> set[str]:
    if root not in aut.states:
        raise UnknownStateError(f"state {root!r} is not in the automaton")
    seen = {root}
    queue = deque([root])
    while queue:
        p = queue.popleft()
        if isinstance(aut, MNfa):
            targets = [t.dst for t in aut.transitions_from(p)]
        else:
            targets = [aut.delta[(p, a)] for a in sorted(aut.out_set(p))]
        for q in targets:
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return seen


def trim(aut: MNfa | PDfa, root: str) -> MNfa | PDfa:
    """Restrict to the states reachable from ``root``.

    The tree generated from ``root`` is unchanged at every radius, and
    ``root`` becomes a root of the result.
    """
    keep = reachable_states(aut, root)
    if isinstance(aut, MNfa):
        transitions = [t for t in aut.transitions if t.src in keep]
        return MNfa(keep, aut.alphabet, transitions)
    delta = {(p, a): q for (p, a), q in aut.delta.items() if p in keep}
    return PDfa(keep, aut.alphabet, delta)
