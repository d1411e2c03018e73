import random

import pytest

import samples
from cftree import (
    WordNotInLanguageError,
    as_pdfa,
    disc_equal_rooted,
    is_reduced,
    language_upto,
    pdfa_to_mnfa,
    reroot_along_word,
    reroot_disc,
    reroot_step,
    trim,
    truncate,
    unfold_mnfa,
    unfold_pdfa,
)
from randgen import random_reduced_pdfa


def test_reroot_step_two_loop_mnfa():
    m = samples.one_state_two_loops()
    res = reroot_step(m, "p", 0)
    p_new, q_new = res.added_states
    assert res.new_root == q_new
    out = res.automaton
    assert out.states == {"p", p_new, q_new}
    triples = sorted(t.triple() for t in out.transitions)
    assert triples == sorted(
        [
            ("p", "a", "p"),
            ("p", "a", "p"),
            (p_new, "a", "p"),      # copy of the loop that was not crossed
            (q_new, "a^-1", p_new),  # the way back across the crossed edge
            (q_new, "a", "p"),       # copies of both loops at the crossed target
            (q_new, "a", "p"),
        ]
    )


def test_reroot_step_size_counts():
    rng = random.Random(3)
    for _ in range(20):
        d, root = random_reduced_pdfa(rng, rng.randint(1, 4))
        m = pdfa_to_mnfa(d)
        outgoing = m.transitions_from(root)
        if not outgoing:
            continue
        sigma0 = outgoing[0]
        res = reroot_step(m, root, sigma0.tid)
        assert len(res.automaton.states) == len(m.states) + 2
        expected = len(m.transitions) + (len(outgoing) - 1) + 1 + len(
            m.transitions_from(sigma0.dst)
        )
        assert len(res.automaton.transitions) == expected


def test_reroot_step_requires_root_transition():
    m = samples.astar_bstar_mnfa()
    with pytest.raises(Exception):
        reroot_step(m, "q", 0)  # transition 0 starts at p, not q


def test_reroot_step_disc_agrees_with_disc_rerooting():
    m = samples.one_state_two_loops()
    res = reroot_step(m, "p", 0)
    for ell in range(7):
        got = unfold_mnfa(res.automaton, res.new_root, ell)
        want = reroot_disc(unfold_mnfa(m, "p", ell + 1), (0,))
        assert disc_equal_rooted(got, want)


def test_reroot_step_disc_agreement_random():
    rng = random.Random(9)
    for _ in range(15):
        d, root = random_reduced_pdfa(rng, rng.randint(2, 4))
        m = pdfa_to_mnfa(d)
        for sigma0 in m.transitions_from(root)[:2]:
            res = reroot_step(m, root, sigma0.tid)
            for ell in (0, 2, 4):
                got = unfold_mnfa(res.automaton, res.new_root, ell)
                want = reroot_disc(unfold_mnfa(m, root, ell + 1), (sigma0.tid,))
                assert disc_equal_rooted(got, want)


def test_reroot_along_empty_word():
    d = samples.astar_bstar_pdfa()
    out, state = reroot_along_word(d, "p", ())
    assert state == "p"
    assert out == trim(d, "p")


def test_reroot_along_word_on_line_lands_on_same_tree():
    d = samples.bi_infinite_line()
    out, state = reroot_along_word(d, "v", ("a",))
    x = unfold_pdfa(d, "v", 4)
    y = unfold_pdfa(out, state, 4)
    assert disc_equal_rooted(x, y)


def test_reroot_along_word_on_ray_gains_back_edge():
    d = samples.ray()
    out, state = reroot_along_word(d, "u", ("a",))
    assert sorted(out.out_set(state)) == ["a", "a^-1"]
    assert not disc_equal_rooted(unfold_pdfa(d, "u", 1), unfold_pdfa(out, state, 1))


def test_reroot_along_word_rejects_words_outside_language():
    with pytest.raises(WordNotInLanguageError):
        reroot_along_word(samples.ray(), "u", ("a^-1",))


def test_reroot_along_word_requires_reduced():
    from cftree import NotReducedError

    with pytest.raises(NotReducedError):
        reroot_along_word(samples.loop_both_directions(), "p", ("a",))


def test_reroot_along_word_matches_disc_rerooting_and_stays_reduced():
    rng = random.Random(31)
    for _ in range(25):
        d, root = random_reduced_pdfa(rng, rng.randint(1, 5))
        words = sorted(wd for wd in language_upto(d, root, 3) if len(wd) <= 3)
        for wd in words[:6]:
            out, state = reroot_along_word(d, root, wd)
            assert is_reduced(out)
            for ell in (0, 3, 5):
                got = unfold_pdfa(out, state, ell)
                want = truncate(reroot_disc(unfold_pdfa(d, root, ell + len(wd)), wd), ell)
                assert disc_equal_rooted(got, want)


def test_reroot_there_and_back():
    # Crossing an edge and then crossing back yields the original tree.
    rng = random.Random(41)
    for _ in range(15):
        d, root = random_reduced_pdfa(rng, rng.randint(1, 4))
        m = pdfa_to_mnfa(d)
        outgoing = m.transitions_from(root)
        if not outgoing:
            continue
        sigma0 = outgoing[0]
        res = reroot_step(m, root, sigma0.tid)
        back_label = res.automaton.alphabet.inv(sigma0.label)
        tau0p = next(
            t
            for t in res.automaton.transitions_from(res.new_root)
            if t.label == back_label and t.dst == res.added_states[0]
        )
        res2 = reroot_step(res.automaton, res.new_root, tau0p.tid)
        for ell in (0, 2, 4):
            x = unfold_mnfa(m, root, ell)
            y = unfold_mnfa(res2.automaton, res2.new_root, ell)
            assert disc_equal_rooted(x, y)


def test_intermediate_condensation_succeeds():
    # Every step of a word rerooting admits the pDFA view again.
    rng = random.Random(55)
    for _ in range(10):
        d, root = random_reduced_pdfa(rng, rng.randint(2, 5))
        words = sorted(wd for wd in language_upto(d, root, 3) if len(wd) == 3)
        for wd in words[:3]:
            out, state = reroot_along_word(d, root, wd)
            as_pdfa(pdfa_to_mnfa(out))
            assert state in out.states
