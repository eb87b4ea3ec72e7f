import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidgs.braid import (
    CoxeterMatrix,
    Family,
    TheoremMatch,
    apply_theorem_rule,
    artin_presentation,
    bkl_generators,
    bkl_presentation,
    coxeter_braid_presentation,
    gs_normalize,
    identity_instances,
    identity_suite,
    is_gs_reduced,
    iter_theorem_matches,
    match_theorem_rule,
    parse_coxeter,
    theorem_rules,
)
from braidgs.completion import completed_system, interreduce, oracle_equal
from braidgs.core import ParseError, Presentation, delta_word
from braidgs.rewrite import StepBudgetExceeded, find_match, normal_form

from conftest import all_words, brute_class, brute_min, random_word


# -- presentations ---------------------------------------------------------------

def test_artin_presentation():
    assert artin_presentation(1).relations == ()
    assert artin_presentation(2).relations == (((2, 1, 2), (1, 2, 1)),)
    assert set(artin_presentation(3).relations) == {
        ((2, 1, 2), (1, 2, 1)),
        ((3, 2, 3), (2, 3, 2)),
        ((3, 1), (1, 3)),
    }
    assert artin_presentation(5).degree_preserving
    with pytest.raises(ValueError):
        artin_presentation(0)


def test_bkl_small():
    assert bkl_presentation(2).n_generators == 1
    assert bkl_presentation(2).relations == ()
    p = bkl_presentation(3)
    assert bkl_generators(3) == [(2, 1), (3, 1), (3, 2)]
    a21, a31, a32 = 1, 2, 3
    # a32 a21 = a31 a32 = a21 a31
    assert set(p.relations) == {((a32, a21), (a31, a32)), ((a31, a32), (a21, a31))}


def _brute_bkl_count(N):
    pairs = [(t, s) for s in range(1, N + 1) for t in range(1, s)]
    chains = sum(1 for t, s, r in itertools.permutations(range(1, N + 1), 3) if t > s > r)
    commuting = 0
    for (t, s), (r, q) in itertools.combinations(pairs, 2):
        if (t - r) * (t - q) * (s - r) * (s - q) > 0:
            commuting += 1
    return 2 * chains + commuting


@pytest.mark.parametrize("N", [3, 4, 5, 6])
def test_bkl_relation_count(N):
    p = bkl_presentation(N)
    assert p.n_generators == N * (N - 1) // 2
    assert len(p.relations) == _brute_bkl_count(N)
    assert p.degree_preserving


def test_bkl_4_count():
    assert len(bkl_presentation(4).relations) == 10


def test_coxeter_examples():
    assert coxeter_braid_presentation(CoxeterMatrix(2, {(1, 2): 3})).relations == (((2, 1, 2), (1, 2, 1)),)
    assert coxeter_braid_presentation(CoxeterMatrix(2, {(1, 2): 2})).relations == (((2, 1), (1, 2)),)
    assert coxeter_braid_presentation(CoxeterMatrix(2, {(1, 2): math.inf})).relations == ()
    # B_2 type: m = 4
    assert coxeter_braid_presentation(CoxeterMatrix(2, {(2, 1): 4})).relations == (((2, 1, 2, 1), (1, 2, 1, 2)),)


def test_coxeter_matrix_checks():
    with pytest.raises(ValueError):
        CoxeterMatrix(2, {(1, 2): 1})
    with pytest.raises(ValueError):
        CoxeterMatrix(2, {(1, 1): 3})
    with pytest.raises(ValueError):
        CoxeterMatrix(2, {(1, 2): 3, (2, 1): 4})
    with pytest.raises(ValueError):
        CoxeterMatrix(2, {(1, 3): 3})


def test_parse_coxeter():
    M = parse_coxeter("# A3\nm 1 2 3\nm 2 3 3\n")
    assert M.size == 3 and M.m(1, 3) == 2 and M.m(3, 2) == 3
    assert coxeter_braid_presentation(M) == Presentation(
        3, (((2, 1, 2), (1, 2, 1)), ((3, 1), (1, 3)), ((3, 2, 3), (2, 3, 2)))
    )
    assert parse_coxeter("size 4\nm 1 2 inf").size == 4
    assert parse_coxeter("m 1 2 inf").m(1, 2) == math.inf
    for bad in ["", "m 1 2", "m 1 2 x", "m 1 1 3", "q 1 2 3"]:
        with pytest.raises(ParseError):
            parse_coxeter(bad)


# -- matcher ---------------------------------------------------------------------

def test_match_examples():
    assert match_theorem_rule((2, 1, 2), 2) == TheoremMatch(0, 1, 2, 0, 0, Family.RUN)
    assert match_theorem_rule((2, 1, 1, 1, 2, 1), 2) == TheoremMatch(0, 1, 1, 0, 2, Family.RUN)
    assert match_theorem_rule((1, 2, 1, 1, 2), 2) is None
    assert match_theorem_rule((3, 1)) == TheoremMatch(0, 3, 1, 0, 0, Family.FAR_COMMUTE)
    assert match_theorem_rule(()) is None
    assert match_theorem_rule((2, 1, 1)) is None


def test_match_prefers_far_commutation_and_leftmost():
    # far commutation at position 0 beats any run rule further right
    m = match_theorem_rule((4, 1, 2, 1, 2))
    assert m.kind is Family.FAR_COMMUTE and m.position == 0
    m = match_theorem_rule((1, 3, 2, 3))
    assert m.position == 1 and m.kind is Family.RUN


def test_match_longest_then_largest_j():
    # a3 a2 a3 a2 a1: j=3 gives a3 a2 a3, j=2 gives a3 a2 a3 a2, j=1 the whole word
    w = (3, 2, 3, 2, 1)
    m = match_theorem_rule(w)
    assert (m.j, m.length) == (1, 5)
    js = sorted(x.j for x in iter_theorem_matches(w) if x.position == 0)
    assert js == [1, 2, 3]
    # W = a2 restricts j to <= 2
    w = (3, 2, 2, 3, 2, 1)
    assert sorted(x.j for x in iter_theorem_matches(w) if x.position == 0) == [1, 2]


def test_match_with_v_segment():
    # i = 3, V = a1 a2, W = a3 a3, tail a4 a3
    w = (4, 3, 1, 2, 3, 3, 4, 3)
    m = match_theorem_rule(w)
    assert (m.i, m.j, m.v_len, m.w_len, m.length) == (3, 3, 2, 2, 8)
    assert apply_theorem_rule(w, m) == (3, 4, 3, 1, 2, 3, 4, 4)


def test_apply_examples():
    assert apply_theorem_rule((2, 1, 2), match_theorem_rule((2, 1, 2))) == (1, 2, 1)
    w = (2, 1, 1, 2, 1)
    assert apply_theorem_rule(w, match_theorem_rule(w)) == (1, 2, 1, 1, 2)
    assert apply_theorem_rule((3, 1), match_theorem_rule((3, 1))) == (1, 3)


@pytest.mark.parametrize("n, max_len", [(2, 9), (3, 8), (4, 7)])
def test_every_match_is_sound(n, max_len):
    """Each applied rule is deg-lex decreasing and stays in the class."""
    rels = artin_presentation(n).relations
    rng = random.Random(n)
    for _ in range(150):
        w = random_word(rng, n, max_len, min_len=2)
        for m in iter_theorem_matches(w):
            out = apply_theorem_rule(w, m)
            assert len(out) == len(w) and out < w
            assert out in brute_class(w, rels)


def test_theorem_rules_agree_with_matcher():
    rules = theorem_rules(3, 8)
    assert len(theorem_rules(2, 10)) == 8
    assert len(theorem_rules(3, 10)) == 108
    for r in rules:
        ms = [m for m in iter_theorem_matches(r.lhs) if m.position == 0 and m.length == len(r.lhs)]
        assert ms
        assert r.rhs in {apply_theorem_rule(r.lhs, m) for m in ms}


# -- normal forms ------------------------------------------------------------------

def test_gs_normalize_examples():
    w = (2, 1, 2, 1, 2)
    assert gs_normalize(w, 2) == brute_min(brute_class(w, artin_presentation(2).relations))
    assert gs_normalize((), 3) == ()
    assert gs_normalize(delta_word(3), 3) == delta_word(3)
    assert is_gs_reduced(delta_word(5))
    with pytest.raises(ValueError):
        gs_normalize((4,), 3)
    with pytest.raises(ValueError):
        gs_normalize((1,), 3, strategy="middle")


@pytest.mark.parametrize("n, max_len", [(2, 8), (3, 7), (4, 6)])
def test_gs_normalize_is_class_minimum(n, max_len):
    rels = artin_presentation(n).relations
    rng = random.Random(100 + n)
    for _ in range(200):
        w = random_word(rng, n, max_len)
        assert gs_normalize(w, n) == brute_min(brute_class(w, rels))


def test_fast_leftmost_matches_naive(rng):
    for _ in range(500):
        n = rng.randint(2, 6)
        w = random_word(rng, n, 30)
        assert gs_normalize(w, n) == gs_normalize(w, n, strategy="naive-leftmost")


def test_strategies_agree(rng):
    for _ in range(300):
        w = random_word(rng, 4, 14)
        nf = gs_normalize(w, 4)
        assert gs_normalize(w, 4, strategy="rightmost") == nf
        assert gs_normalize(w, 4, strategy="random", rng=rng) == nf


def test_step_budget():
    with pytest.raises(StepBudgetExceeded):
        gs_normalize((4, 3, 2, 1) * 3, 4, max_steps=2)


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 7).flatmap(lambda n: st.lists(st.integers(1, n), max_size=40)))
def test_degree_preserved_and_reduced(letters):
    w = tuple(letters)
    out = gs_normalize(w)
    assert len(out) == len(w)
    assert is_gs_reduced(out)
    assert gs_normalize(out) == out


# -- the family against completion -----------------------------------------------

@pytest.mark.parametrize("n", [2, 3])
def test_leading_word_sets_agree(n):
    """Minimal leading words of the family = lhs set of the interreduced completed system."""
    bound = 8
    completed = {r.lhs for r in interreduce(completed_system(artin_presentation(n), bound)) if len(r.lhs) <= bound}
    minimal = set()
    for w in all_words(n, bound, min_len=2):
        whole = any(m.position == 0 and m.length == len(w) for m in iter_theorem_matches(w))
        if whole and is_gs_reduced(w[1:]) and is_gs_reduced(w[:-1]):
            minimal.add(w)
    assert minimal == completed


def test_w_empty_rules_with_small_j_are_redundant():
    """Rules with W empty and j <= i contain the shorter j = i + 1 leading word."""
    rules = theorem_rules(4, 9)
    kept = {r.lhs for r in interreduce(rules)}
    for r in rules:
        if r.lhs in kept:
            continue
        assert any(
            r.lhs[p:p + len(k)] == k
            for k in kept
            for p in range(len(r.lhs) - len(k) + 1)
            if len(k) <= len(r.lhs)
        )
    # a concrete instance: a3 a2 a3 a2 contains a3 a2 a3
    assert (3, 2, 3, 2) not in kept and (3, 2, 3) in kept


def test_cross_engine_small(rng):
    rules = completed_system(artin_presentation(4), 10)
    for _ in range(500):
        w = random_word(rng, 4, 10)
        assert gs_normalize(w, 4) == normal_form(w, rules)


def test_materialized_family_normalizes_like_matcher(rng):
    rules = theorem_rules(3, 10)
    for _ in range(500):
        w = random_word(rng, 3, 10)
        assert normal_form(w, rules) == gs_normalize(w, 3)
        assert (find_match(w, rules) is None) == is_gs_reduced(w)


def test_oracle_soundness_and_completeness_n3():
    p = artin_presentation(3)
    for L in range(0, 7):
        by_nf = {}
        for w in itertools.product(range(1, 4), repeat=L):
            by_nf.setdefault(gs_normalize(w, 3), []).append(w)
        for nf, members in by_nf.items():
            cls = brute_class(members[0], p.relations)
            assert cls == set(members), nf
    assert oracle_equal((1, 3, 2, 1), (3, 1, 2, 1), p)


# -- identities --------------------------------------------------------------------

def test_identity_examples():
    assert gs_normalize((2, 1, 3, 2, 1)) == gs_normalize((3, 2, 1, 3, 2))
    # a1 . a2 a1 = a2 a1 . a2
    assert gs_normalize((1, 2, 1)) == gs_normalize((2, 1, 2))
    names = {name for name, *_ in identity_instances(3, 2)}
    assert names == {"run-swap", "powered-run-swap", "letter-through-run"}
    # exponents all 1 give back the unpowered identity
    for name, params, lhs, rhs in identity_instances(4, 1):
        if name == "powered-run-swap":
            assert all(x == 1 for x in params[2])


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_identity_suite(n):
    rep = identity_suite(n, 3)
    assert rep.ok, rep.format()
    assert rep.format().startswith(f"checked {rep.checked} failures 0")


def test_identity_suite_rejects_small_n():
    with pytest.raises(ValueError):
        identity_suite(1, 3)
