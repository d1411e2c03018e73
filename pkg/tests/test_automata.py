import random

import pytest

import samples
from cftree import (
    MNfa,
    NotDeterministicError,
    PDfa,
    Transition,
    UnknownStateError,
    as_pdfa,
    disc_equal_rooted,
    find_nondeterministic_pair,
    involutive_closure,
    is_reduced,
    pdfa_to_mnfa,
    reducedness_violation,
    trim,
    unfold_mnfa,
    validate_mnfa,
)
from randgen import random_reduced_pdfa


def test_validate_two_loop_mnfa_ok():
    assert validate_mnfa(samples.one_state_two_loops()).ok


def test_validate_unknown_label():
    m = MNfa({"p"}, involutive_closure(["a"]), [Transition(0, "p", "z", "p")])
    report = validate_mnfa(m)
    assert not report.ok
    assert "UNKNOWN_LABEL" in report.codes()


def test_validate_empty_transitions_ok():
    m = MNfa({"p"}, involutive_closure(["a"]), [])
    assert validate_mnfa(m).ok


def test_validate_dangling_and_duplicate():
    m = MNfa(
        {"p"},
        involutive_closure(["a"]),
        [Transition(0, "p", "a", "ghost"), Transition(0, "p", "a", "p")],
    )
    report = validate_mnfa(m)
    assert {"DANGLING_STATE", "DUPLICATE_ID"} <= report.codes()


def test_as_pdfa_fails_on_parallel_loops():
    m = samples.one_state_two_loops()
    with pytest.raises(NotDeterministicError) as exc:
        as_pdfa(m)
    t0, t1 = exc.value.pair
    assert (t0.tid, t1.tid) == (0, 1)
    assert t0.src == t1.src and t0.label == t1.label and t0 != t1


def test_as_pdfa_on_deterministic_mnfa():
    d = as_pdfa(samples.astar_bstar_mnfa())
    assert d.states == {"p", "q"}
    assert len(d.delta) == 3
    assert d == samples.astar_bstar_pdfa()


def test_as_pdfa_empty_transitions():
    m = MNfa({"p"}, involutive_closure(["a"]), [])
    d = as_pdfa(m)
    assert d.delta == {}


def test_as_pdfa_succeeds_iff_no_pair_scan_hit():
    # The conversion must agree with an exhaustive scan over transition pairs.
    rng = random.Random(7)
    al = involutive_closure(["a", "b"])
    letters = al.sorted_letters()
    for _ in range(200):
        n = rng.randint(1, 3)
        states = [f"s{i}" for i in range(n)]
        ts = [
            Transition(i, rng.choice(states), rng.choice(letters), rng.choice(states))
            for i in range(rng.randint(0, 5))
        ]
        m = MNfa(states, al, ts)
        scan_hit = any(
            t1.src == t2.src and t1.label == t2.label
            for i, t1 in enumerate(ts)
            for t2 in ts[i + 1 :]
        )
        assert (find_nondeterministic_pair(m) is not None) == scan_hit
        if scan_hit:
            with pytest.raises(NotDeterministicError):
                as_pdfa(m)
        else:
            as_pdfa(m)


def test_is_reduced_loop_both_directions():
    d = samples.loop_both_directions()
    assert not is_reduced(d)
    first, second = reducedness_violation(d)
    assert first == ("p", "a", "p") or first == ("p", "a^-1", "p")
    assert second[1] == d.alphabet.inv(first[1])


def test_is_reduced_astar_bstar():
    assert is_reduced(samples.astar_bstar_pdfa())


def test_two_incoming_a_transitions_still_reduced():
    # Distinct a-edges into one state are fine; only letter-inverse paths hurt.
    al = involutive_closure(["a"])
    d = PDfa({"p", "q", "r"}, al, {("p", "a"): "r", ("q", "a"): "r"})
    assert is_reduced(d)


def test_self_inverse_letter_reducedness():
    from cftree import InvolutiveAlphabet

    al = InvolutiveAlphabet({"c"}, {"c": "c"})
    d = PDfa({"p", "q"}, al, {("p", "c"): "q", ("q", "c"): "p"})
    assert not is_reduced(d)
    d2 = PDfa({"p", "q"}, al, {("p", "c"): "q"})
    assert is_reduced(d2)


def test_out_set():
    d = samples.astar_bstar_pdfa()
    assert d.out_set("p") == {"a", "b"}
    assert d.out_set("q") == {"b"}
    al = involutive_closure(["a"])
    iso = PDfa({"lonely"}, al, {})
    assert iso.out_set("lonely") == frozenset()
    with pytest.raises(UnknownStateError):
        d.out_set("ghost")


def test_trim_identity_when_all_reachable():
    m = samples.astar_bstar_mnfa()
    assert trim(m, "p") == m


def test_trim_drops_other_component():
    al = involutive_closure(["a"])
    m = MNfa(
        {"p", "q", "isolated"},
        al,
        [Transition(0, "p", "a", "q"), Transition(1, "isolated", "a", "isolated")],
    )
    t = trim(m, "p")
    assert t.states == {"p", "q"}
    assert len(t.transitions) == 1


def test_trim_idempotent():
    m = samples.astar_bstar_mnfa()
    assert trim(trim(m, "p"), "p") == trim(m, "p")


def test_trim_unknown_state():
    with pytest.raises(UnknownStateError):
        trim(samples.astar_bstar_mnfa(), "ghost")


def test_trim_preserves_discs():
    rng = random.Random(21)
    for _ in range(20):
        d, root = random_reduced_pdfa(rng, rng.randint(2, 5))
        extra = PDfa(
            d.states | {"junk"},
            d.alphabet,
            {**d.delta, ("junk", d.alphabet.sorted_letters()[0]): "junk"},
        )
        m = pdfa_to_mnfa(extra)
        trimmed = trim(m, root)
        for radius in range(9):
            x = unfold_mnfa(m, root, radius)
            y = unfold_mnfa(trimmed, root, radius)
            assert disc_equal_rooted(x, y, use_labels=True)
