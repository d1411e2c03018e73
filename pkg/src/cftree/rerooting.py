"""Moving the root of a generated tree across an edge, and along a word.

A single step duplicates the old root state and the target of the crossed
transition into fresh states; the tree generated from the fresh target is the
old tree with its root moved across that edge.  Iterating the step along a
word, trimming and re-condensing to a pDFA after each move, re-roots a
deterministic tree at the node the word names.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import (
    MNfa,
    PDfa,
    Transition,
    as_pdfa,
    pdfa_to_mnfa,
    require_reduced,
    trim,
)
from .errors import UnknownStateError, WordNotInLanguageError
from .unfolding import Word


@dataclass
class RerootResult:
    automaton: MNfa
    new_root: str
    added_states: tuple[str, str]


def _fresh(name: str, taken: frozenset[str] | set[str]) -> str:
    while name in taken:
        name += "+"
    return name


def reroot_step(m: MNfa, root: str, sigma0: int, step_index: int = 0) -> RerootResult:
    """Move the root of the tree generated from ``root`` across transition ``sigma0``.

    Adds a copy ``p'`` of ``root`` without the crossed transition and a copy
    ``q'`` of its target with an extra inverse transition back to ``p'``; the
    tree generated from ``q'`` is the old tree re-rooted across ``sigma0``.
    """
    if root not in m.states:
        raise UnknownStateError(f"state {root!r} is not in the automaton")
    crossed = m.transition_by_id(sigma0)
    if crossed.src != root:
        raise UnknownStateError(
            f"transition {sigma0} starts at {crossed.src!r}, not at the root {root!r}"
        )
    q0 = crossed.dst
    p_new = _fresh(f"{root}@p{step_index}", m.states)
    q_new = _fresh(f"{q0}@q{step_index}", m.states | {p_new})

    tid = m.max_tid() + 1
    extra: list[Transition] = []
    for t in m.transitions_from(root):
        if t.tid == sigma0:
            continue
        extra.append(Transition(tid, p_new, t.label, t.dst))
        tid += 1
    extra.append(Transition(tid, q_new, m.alphabet.inv(crossed.label), p_new))
    tid += 1
    for t in m.transitions_from(q0):
        extra.append(Transition(tid, q_new, t.label, t.dst))
        tid += 1

    out = MNfa(m.states | {p_new, q_new}, m.alphabet, m.transitions + tuple(extra))
    return RerootResult(out, q_new, (p_new, q_new))


def reroot_along_word(d: PDfa, root: str, w: Word) -> tuple[PDfa, str]:
    """Re-root the tree generated from ``root`` at the node named by ``w``.

    Requires a reduced automaton and ``w`` in the language of ``root``.  Each
    step crosses one edge, trims to the reachable part and condenses back to
    a pDFA; the generated tree stays deterministic, so the condensing cannot
    fail.  The result is again reduced.
    """
    require_reduced(d, "input")
    if root not in d.states:
        raise UnknownStateError(f"state {root!r} is not in the automaton")
    if d.run(root, w) is None:
        raise WordNotInLanguageError(
            f"word {','.join(w) or 'eps'} is not readable from {root!r}"
        )
    cur = trim(d, root)
    cur_root = root
    for k, a in enumerate(w):
        m = pdfa_to_mnfa(cur)
        sigma0 = next(t.tid for t in m.transitions_from(cur_root) if t.label == a)
        step = reroot_step(m, cur_root, sigma0, step_index=k)
        trimmed = trim(step.automaton, step.new_root)
        cur = as_pdfa(trimmed)
        cur_root = step.new_root
    return cur, cur_root
