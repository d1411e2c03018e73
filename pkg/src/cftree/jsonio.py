"""JSON documents for automata, finite trees and reachability instances.

Document shapes (field order irrelevant, unknown fields rejected):

automaton::

    { "alphabet": { "letters": [..], "inverse": {letter: letter} },
      "kind": "mnfa" | "pdfa",
      "states": [..],
      "transitions": [ {"id": int, "from": state, "label": letter, "to": state} ],
      "root": state }                      # optional

tree (one edge listed per involutive pair, either orientation)::

    { "radius": int, "root": id,
      "nodes": [ {"id": str, "label": str} ],
      "edges": [ {"from": id, "label": letter, "to": id} ] }

reachability instance::

    { "n": int, "edges": [[u, v], ...] }

Writers emit a fixed field order and sorted collections, so output is
byte-identical across runs.
"""

from __future__ import annotations

import json
from collections import deque
from typing import Any

from .alphabet import InvolutiveAlphabet, involutive_closure
from .automata import MNfa, PDfa, Transition
from .errors import CFTreeError, SchemaError
from .reductions import Gap2Instance
from .unfolding import DiscTree, Node


def _require_fields(doc: dict, required: set[str], optional: set[str], what: str) -> None:
    if not isinstance(doc, dict):
        raise SchemaError(f"{what} must be a JSON object")
    missing = required - set(doc)
    if missing:
        raise SchemaError(f"{what} is missing fields: {sorted(missing)}")
    unknown = set(doc) - required - optional
    if unknown:
        raise SchemaError(f"{what} has unknown fields: {sorted(unknown)}")


def _string_list(value: Any, what: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise SchemaError(f"{what} must be a list of strings")
    return value


def alphabet_from_doc(doc: Any) -> InvolutiveAlphabet:
    _require_fields(doc, {"letters", "inverse"}, set(), "alphabet")
    letters = _string_list(doc["letters"], "alphabet.letters")
    inverse = doc["inverse"]
    if not isinstance(inverse, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in inverse.items()
    ):
        raise SchemaError("alphabet.inverse must map letters to letters")
    try:
        return InvolutiveAlphabet(letters, inverse)
    except CFTreeError as e:
        raise SchemaError(f"bad alphabet: {e}") from e


def alphabet_to_doc(alphabet: InvolutiveAlphabet) -> dict:
    inv = alphabet.inverse_map()
    return {
        "letters": alphabet.sorted_letters(),
        "inverse": {a: inv[a] for a in alphabet.sorted_letters()},
    }


def automaton_from_doc(doc: Any, *, strict: bool = True) -> tuple[MNfa | PDfa, str | None]:
    """Build an automaton from a document.

    With ``strict`` (the default), transitions must reference known states
    and letters, and a "pdfa" document must actually be deterministic.
    Non-strict loading checks only the document shape, so a validation pass
    can report every semantic problem at once.
    """
    _require_fields(doc, {"alphabet", "kind", "states", "transitions"}, {"root"}, "automaton")
    alphabet = alphabet_from_doc(doc["alphabet"])
    kind = doc["kind"]
    if kind not in ("mnfa", "pdfa"):
        raise SchemaError(f'kind must be "mnfa" or "pdfa", not {kind!r}')
    states = _string_list(doc["states"], "states")
    if len(set(states)) != len(states):
        raise SchemaError("duplicate state names")
    if not isinstance(doc["transitions"], list):
        raise SchemaError("transitions must be a list")
    transitions: list[Transition] = []
    for td in doc["transitions"]:
        _require_fields(td, {"id", "from", "label", "to"}, set(), "transition")
        if not isinstance(td["id"], int):
            raise SchemaError("transition id must be an integer")
        if not all(isinstance(td[k], str) for k in ("from", "label", "to")):
            raise SchemaError("transition endpoints and label must be strings")
        transitions.append(Transition(td["id"], td["from"], td["label"], td["to"]))
    root = doc.get("root")
    if root is not None and not isinstance(root, str):
        raise SchemaError("root must be a state name")

    state_set = set(states)
    if strict:
        ids = [t.tid for t in transitions]
        if len(set(ids)) != len(ids):
            raise SchemaError("duplicate transition ids")
        for t in transitions:
            if t.src not in state_set or t.dst not in state_set:
                raise SchemaError(f"transition {t.tid} references unknown state")
            if t.label not in alphabet:
                raise SchemaError(f"transition {t.tid} uses unknown letter {t.label!r}")
        if root is not None and root not in state_set:
            raise SchemaError(f"root {root!r} is not a state")

    if kind == "pdfa":
        delta: dict[tuple[str, str], str] = {}
        for t in transitions:
            key = (t.src, t.label)
            if key in delta:
                raise SchemaError(
                    f'document says "pdfa" but transitions from {t.src!r} on {t.label!r} clash'
                )
            delta[key] = t.dst
        return PDfa(states, alphabet, delta), root
    return MNfa(states, alphabet, transitions), root


def automaton_to_doc(aut: MNfa | PDfa, root: str | None = None) -> dict:
    doc: dict[str, Any] = {"alphabet": alphabet_to_doc(aut.alphabet)}
    if isinstance(aut, MNfa):
        doc["kind"] = "mnfa"
        doc["states"] = sorted(aut.states)
        doc["transitions"] = [
            {"id": t.tid, "from": t.src, "label": t.label, "to": t.dst}
            for t in aut.transitions
        ]
    else:
        doc["kind"] = "pdfa"
        doc["states"] = sorted(aut.states)
        doc["transitions"] = [
            {"id": i, "from": p, "label": a, "to": q}
            for i, ((p, a), q) in enumerate(sorted(aut.delta.items()))
        ]
    if root is not None:
        doc["root"] = root
    return doc


def tree_from_doc(doc: Any) -> DiscTree:
    _require_fields(doc, {"radius", "root", "nodes", "edges"}, {"alphabet"}, "tree")
    if not isinstance(doc["radius"], int):
        raise SchemaError("radius must be an integer")
    labels: dict[Node, str] = {}
    for nd in doc["nodes"]:
        _require_fields(nd, {"id", "label"}, set(), "node")
        if nd["id"] in labels:
            raise SchemaError(f"duplicate node id {nd['id']!r}")
        labels[nd["id"]] = nd["label"]
    if doc["root"] not in labels:
        raise SchemaError("root is not a listed node")
    listed: list[tuple[Node, str, Node]] = []
    letters: set[str] = set()
    for ed in doc["edges"]:
        _require_fields(ed, {"from", "label", "to"}, set(), "edge")
        u, a, v = ed["from"], ed["label"], ed["to"]
        if u not in labels or v not in labels:
            raise SchemaError(f"edge ({u!r}, {a!r}, {v!r}) references unknown node")
        letters.add(a)
        listed.append((u, a, v))
    if "alphabet" in doc:
        alphabet = alphabet_from_doc(doc["alphabet"])
        if not letters <= alphabet.letters:
            raise SchemaError("edge letters outside the declared alphabet")
    else:
        base = {a for a in letters if not a.endswith("^-1")}
        base |= {a[: -len("^-1")] for a in letters if a.endswith("^-1")}
        alphabet = involutive_closure(sorted(base) if base else ["a"])

    # Each listed edge stands for an involutive pair and may be written in
    # either orientation; BFS from the root over the symmetric adjacency
    # orients everything parent-to-child.
    adj: dict[Node, list[tuple[str, Node]]] = {v: [] for v in labels}
    for u, a, v in listed:
        adj[u].append((a, v))
        adj[v].append((alphabet.inv(a), u))
    children: dict[Node, tuple[tuple[str, Node], ...]] = {}
    seen = {doc["root"]}
    queue = deque([doc["root"]])
    while queue:
        u = queue.popleft()
        kids: list[tuple[str, Node]] = []
        for a, v in sorted(adj[u], key=lambda e: (e[0], str(e[1]))):
            if v in seen:
                continue
            seen.add(v)
            kids.append((a, v))
            queue.append(v)
        if kids:
            children[u] = tuple(kids)
    if seen != set(labels):
        raise SchemaError("tree document is not connected")
    if len(listed) != len(labels) - 1:
        raise SchemaError("a tree on n nodes must list exactly n-1 edges")
    try:
        return DiscTree(doc["radius"], doc["root"], labels, children, alphabet)
    except ValueError as e:
        raise SchemaError(f"bad tree document: {e}") from e


def tree_to_doc(t: DiscTree) -> dict:
    order = t.sorted_nodes()
    ids = {v: f"v{i}" for i, v in enumerate(order)}
    return {
        "radius": t.radius,
        "root": ids[t.root],
        "alphabet": alphabet_to_doc(t.alphabet),
        "nodes": [{"id": ids[v], "label": t.labels[v]} for v in order],
        "edges": [
            {"from": ids[v], "label": a, "to": ids[c]}
            for v in order
            for a, c in t.children.get(v, ())
        ],
    }


def gap2_from_doc(doc: Any) -> Gap2Instance:
    _require_fields(doc, {"n", "edges"}, set(), "reachability instance")
    if not isinstance(doc["n"], int):
        raise SchemaError("n must be an integer")
    edges = []
    for e in doc["edges"]:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise SchemaError("edges must be pairs of integers")
        edges.append((e[0], e[1]))
    try:
        return Gap2Instance(doc["n"], frozenset(edges))
    except ValueError as e:
        raise SchemaError(f"bad reachability instance: {e}") from e


def gap2_to_doc(g: Gap2Instance) -> dict:
    return {"n": g.n, "edges": [list(e) for e in sorted(g.edges)]}


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"not valid JSON: {e}") from e
