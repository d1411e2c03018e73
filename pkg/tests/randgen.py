"""Seeded random instance generators for the test and acceptance suites."""

import random
from itertools import product

from cftree import (
    DiscTree,
    Gap2Instance,
    InvolutiveAlphabet,
    PDfa,
    involutive_closure,
    is_reduced,
    trim,
)


def random_alphabet(rng: random.Random, max_base: int = 2) -> InvolutiveAlphabet:
    n = rng.randint(1, max_base)
    return involutive_closure([chr(ord("a") + i) for i in range(n)])


def _can_add(delta, in_letters, p, a, q, ainv):
    """Adding p -a-> q keeps the automaton reduced.

    Forbidden patterns: q already reads a^-1 (a then a^-1), or an a^-1-edge
    already enters p (a^-1 then a).
    """
    if (p, a) in delta:
        return False
    if (q, ainv) in delta:
        return False
    if ainv in in_letters.get(p, ()):
        return False
    return True


def random_reduced_pdfa(
    rng: random.Random,
    n_states: int,
    alphabet: InvolutiveAlphabet | None = None,
    extra_density: float = 0.5,
) -> tuple[PDfa, str]:
    """A reduced pDFA with all states reachable from the returned root.

    A random spanning structure guarantees reachability; extra transitions
    are sprinkled in wherever they do not create a letter-inverse path.
    """
    if alphabet is None:
        alphabet = random_alphabet(rng)
    letters = alphabet.sorted_letters()
    states = [f"s{i}" for i in range(n_states)]
    delta: dict[tuple[str, str], str] = {}
    in_letters: dict[str, set[str]] = {s: set() for s in states}

    def add(p, a, q):
        delta[(p, a)] = q
        in_letters[q].add(a)

    for i in range(1, n_states):
        placed = False
        for _ in range(20):  # cheap random probes before a full scan
            p = states[rng.randrange(i)]
            a = rng.choice(letters)
            if _can_add(delta, in_letters, p, a, states[i], alphabet.inv(a)):
                add(p, a, states[i])
                placed = True
                break
        if not placed:
            candidates = [
                (states[j], a)
                for j in range(i)
                for a in letters
                if _can_add(delta, in_letters, states[j], a, states[i], alphabet.inv(a))
            ]
            if not candidates:
                # No legal edge can reach this state; drop it and every later one.
                states = states[:i]
                break
            p, a = rng.choice(candidates)
            add(p, a, states[i])

    n_extra = int(extra_density * len(states) * len(letters))
    for _ in range(n_extra):
        p = rng.choice(states)
        a = rng.choice(letters)
        q = rng.choice(states)
        if _can_add(delta, in_letters, p, a, q, alphabet.inv(a)):
            add(p, a, q)

    d = PDfa(states, alphabet, delta)
    assert is_reduced(d)
    return d, states[0]


def random_pdfa(
    rng: random.Random,
    n_states: int,
    alphabet: InvolutiveAlphabet | None = None,
    density: float = 0.4,
) -> tuple[PDfa, str]:
    """A pDFA with no reducedness guarantee, trimmed from its root."""
    if alphabet is None:
        alphabet = random_alphabet(rng)
    letters = alphabet.sorted_letters()
    states = [f"s{i}" for i in range(n_states)]
    delta: dict[tuple[str, str], str] = {}
    for i in range(1, n_states):
        delta[(states[rng.randrange(i)], rng.choice(letters))] = states[i]
    for p in states:
        for a in letters:
            if (p, a) not in delta and rng.random() < density:
                delta[(p, a)] = rng.choice(states)
    d = trim(PDfa(states, alphabet, delta), states[0])
    return d, states[0]


def random_gap2(rng: random.Random, max_n: int = 32) -> Gap2Instance:
    n = rng.randint(2, max_n)
    edges = set()
    out = {i: 0 for i in range(n)}
    for _ in range(rng.randint(0, 2 * n)):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if out[u] < 2 and (u, v) not in edges:
            edges.add((u, v))
            out[u] += 1
    return Gap2Instance(n, frozenset(edges))


def random_involutive_tree(
    rng: random.Random,
    max_nodes: int = 50,
    alphabet: InvolutiveAlphabet | None = None,
) -> DiscTree:
    """A complete finite tree whose involutive closure is deterministic.

    Child letters at each node are drawn from the letters not yet used there
    and distinct from the inverse of the letter on the parent edge.
    """
    if alphabet is None:
        alphabet = random_alphabet(rng)
    letters = alphabet.sorted_letters()
    n_nodes = rng.randint(1, max_nodes)
    labels = {0: "t"}
    children: dict[int, list[tuple[str, int]]] = {}
    free_letters: dict[int, list[str]] = {0: list(letters)}
    open_nodes = [0]
    for v in range(1, n_nodes):
        candidates = [u for u in open_nodes if free_letters[u]]
        if not candidates:
            break
        u = rng.choice(candidates)
        a = rng.choice(free_letters[u])
        free_letters[u].remove(a)
        labels[v] = "t"
        children.setdefault(u, []).append((a, v))
        free_letters[v] = [x for x in letters if x != alphabet.inv(a)]
        open_nodes.append(v)
    kids = {u: tuple(sorted(cs)) for u, cs in children.items()}
    level = {0: 0}
    order = [0]
    for u in order:
        for _, c in kids.get(u, ()):
            level[c] = level[u] + 1
            order.append(c)
    radius = max(level.values())
    return DiscTree(radius, 0, labels, kids, alphabet)


def exhaustive_reduced_pdfa_pool(max_states: int = 2):
    """Every reduced pDFA with at most ``max_states`` states over {a, b}^{+-1}.

    States are named s0.. and transitions range over all partial functions;
    non-reduced assignments are filtered out.
    """
    alphabet = involutive_closure(["a", "b"])
    letters = alphabet.sorted_letters()
    pool = []
    for n in range(1, max_states + 1):
        states = [f"s{i}" for i in range(n)]
        slots = [(p, a) for p in states for a in letters]
        for assignment in product([None, *range(n)], repeat=len(slots)):
            delta = {
                slot: states[t]
                for slot, t in zip(slots, assignment)
                if t is not None
            }
            d = PDfa(states, alphabet, delta)
            if is_reduced(d):
                pool.append(d)
    return pool
