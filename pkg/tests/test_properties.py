from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles as O
from corpus import LAD_NOT_ULTRA, random_ultra
from strategies import valuations
from ultraval import (
    CapExceeded,
    GroundSet,
    LemmaId,
    LemmaPreconditionError,
    PropertyId,
    Valuation,
    Verdict,
    catalog,
    check,
    check_equivalence_class,
    check_lemma,
    classify,
    extended_symmetric,
    left_right,
    random_table,
    symmetric,
)
from ultraval.properties import (
    DEFAULT_CAPS,
    EQUIVALENCE_CLASS,
    EquivalenceDisagreement,
    _lemma_cv,
    _lemma_one_n,
    _lemma_two_two,
    cap_for,
    replay,
)

ALL = [p.value for p in PropertyId]


# --- worked examples -------------------------------------------------------

def test_v_paper_verdicts(v_paper):
    assert check(v_paper, "ultra").holds
    assert all(vd.holds for vd in check_equivalence_class(v_paper).values())
    assert check(v_paper, "lad").holds


def test_v_paper_submodular_witness(v_paper):
    vd = check(v_paper, "submodular")
    w = vd.witness
    assert not vd.holds
    assert w.items == {"x": 0}
    assert w.bundles == {"A": 0, "B": 0b010}
    assert (w.lhs, w.rhs, w.relation) == (15, 5, "<=")


def test_v_paper_mnatural_witness(v_paper):
    w = check(v_paper, "mnatural").witness
    assert w.bundles == {"A": 0b011, "B": 0}
    assert w.items == {"x": 0}
    assert w.lhs == 25 and w.rhs == 15 and w.values["drop"] == 15


def test_w_or_ultra_witness(w_or):
    vd = check(w_or, "ultra")
    assert not vd.holds
    w = vd.witness
    assert w.bundles == {"A": 0}
    assert sorted(w.values.values()) == [0, 9, 10]
    assert w.violated()


def test_u_sym_and_lr_are_ultra():
    assert check(catalog("U_SYM"), "ultra").holds
    assert all(vd.holds for vd in check_equivalence_class(catalog("V_LR_DEFAULT")).values())


def test_w_xor_fails_all_five():
    verdicts = check_equivalence_class(catalog("W_XOR"))
    assert set(verdicts) == set(EQUIVALENCE_CLASS)
    assert not any(vd.holds for vd in verdicts.values())


@given(st.lists(st.integers(-9, 9), min_size=4, max_size=4))
def test_additive_valuations_satisfy_everything(prices):
    p = extended_symmetric(prices, [0, 0, 0, 0])
    for prop in ALL:
        if prop != "symmetric":
            assert check(p, prop).holds, prop


def test_zero_valuation_passes_every_axiom():
    z = symmetric(4, [0] * 5)
    assert all(vd.holds for vd in classify(z).values())


def test_substitutes_is_mnatural(v_paper):
    for v in (v_paper, catalog("U_SYM"), symmetric(3, [0, 5, 8, 9])):
        a, b = check(v, "substitutes"), check(v, "mnatural")
        assert a.holds == b.holds and a.witness == b.witness


def test_classify_covers_every_property(v_paper):
    out = classify(v_paper)
    assert list(out) == list(PropertyId)
    assert out[PropertyId.ULTRA].holds and not out[PropertyId.SUBMODULAR].holds


def test_verdict_invariant():
    with pytest.raises(ValueError):
        Verdict("ultra", True, check(catalog("W_OR"), "ultra").witness)
    with pytest.raises(ValueError):
        Verdict("ultra", False, None)


def test_verdicts_deterministic(w_or):
    assert check(w_or, "ultra") == check(w_or, "ultra")
    assert classify(w_or) == classify(catalog("W_OR"))


# --- caps ------------------------------------------------------------------

def test_default_caps():
    assert cap_for("exchange") == cap_for("mnatural") == cap_for("dt") == 12
    assert cap_for("ultra") == cap_for("lln") == cap_for("rgp") == 16
    assert cap_for("submodular") == cap_for("lad") == 16
    assert cap_for("ultra", force=True) == 24
    assert set(DEFAULT_CAPS) == set(PropertyId)


@pytest.mark.parametrize("prop, n", [("exchange", 13), ("dt", 13), ("mnatural", 13), ("lad", 17), ("ultra", 17)])
def test_cap_refusal(prop, n):
    with pytest.raises(CapExceeded):
        check(symmetric(n, [0] * (n + 1)), prop)


def test_force_lifts_cap():
    v = symmetric(17, list(range(18)))
    assert check(v, "lad", force=True).holds


def test_equivalence_class_refuses_above_strictest_cap():
    with pytest.raises(CapExceeded):
        check_equivalence_class(symmetric(13, [0] * 14))


# --- oracle agreement ------------------------------------------------------

@settings(max_examples=150, deadline=None)
@given(valuations(min_n=0, max_n=4))
def test_checkers_agree_with_naive_oracles(v):
    f = O.as_dict(v)
    for prop in ALL:
        assert check(v, prop).holds == O.ORACLES[prop](f), prop


@settings(max_examples=150, deadline=None)
@given(st.integers(3, 5), st.integers(0, 10**6))
def test_oracles_agree_on_ultra_families(n, seed):
    import random

    v = random_ultra(random.Random(seed), n)
    f = O.as_dict(v)
    for prop in ALL:
        assert check(v, prop).holds == O.ORACLES[prop](f), prop
    assert O.ultra(f)


def test_equivalence_disagreement_is_an_assertion():
    assert issubclass(EquivalenceDisagreement, AssertionError)


# --- witness replay and minimality ----------------------------------------

def _first_violation(v, prop):
    """Canonical first violation found by a slow, literal scan."""
    n, t, full = v.n, v.table, v.ground.full
    outs = lambda a: [i for i in range(n) if not a >> i & 1]  # noqa: E731
    ins = lambda a: [i for i in range(n) if a >> i & 1]  # noqa: E731
    bit = lambda *ix: sum(1 << i for i in ix)  # noqa: E731

    def c(a, x, y):
        return t[a | bit(x, y)] - t[a | bit(x)] - t[a | bit(y)] + t[a]

    if prop in ("exchange", "mnatural"):
        for a in range(1 << n):
            for b in range(1 << n):
                if prop == "exchange" and (b.bit_count() < a.bit_count()):
                    continue
                for x in ins(a & ~b):
                    alts = [t[a ^ bit(x, y)] + t[b ^ bit(x, y)] for y in ins(b & ~a)]
                    if prop == "mnatural":
                        alts.append(t[a ^ bit(x)] + t[b | bit(x)])
                    if not any(alt >= t[a] + t[b] for alt in alts):
                        return {"A": a, "B": b}, {"x": x}
    elif prop == "ultra":
        for a in range(1 << n):
            for x, y, z in permutations(outs(a), 3):
                if c(a, x, y) > c(a, x, z) and c(a, y, z) != c(a, x, y):
                    return {"A": a}, {"x": x, "y": y, "z": z}
    elif prop in ("lln", "rgp"):
        for s in range(1 << n):
            for x, y, z in permutations(outs(s), 3):
                vs = lambda *ix: t[s | bit(*ix)] - t[s]  # noqa: E731
                if prop == "lln":
                    bad = vs(x, z) - vs(x) > vs(y, z) - vs(y) and vs(x, y) - vs(y) < vs(x, z) - vs(z)
                else:
                    bad = vs(x, y) + vs(z) > max(vs(x, z) + vs(y), vs(y, z) + vs(x))
                if bad:
                    return {"S": s}, {"x": x, "y": y, "z": z}
    elif prop == "dt":
        for s in range(1 << n):
            for tt in range(1 << n):
                if tt & s or tt.bit_count() < 3:
                    continue
                for x in ins(tt):
                    lhs = t[s | bit(x)] + t[s | tt ^ bit(x)]
                    if not any(t[s | bit(y)] + t[s | tt ^ bit(y)] >= lhs for y in ins(tt) if y != x):
                        return {"S": s, "T": tt}, {"x": x}
    elif prop == "submodular":
        for a in range(1 << n):
            for x in outs(a):
                for b in range(1 << n):
                    if b & a == a and not b >> x & 1:
                        if t[b | bit(x)] - t[b] > t[a | bit(x)] - t[a]:
                            return {"A": a, "B": b}, {"x": x}
    elif prop == "lad":
        top = max(t)
        top_k = max(m.bit_count() for m in range(1 << n) if t[m] == top)
        for xx in range(1 << n):
            subs = [a for a in range(1 << n) if a & xx == a]
            best = max(t[a] for a in subs)
            for a in subs:
                if t[a] == best and a.bit_count() > top_k:
                    return {"X": xx, "A": a}, {}
    return None


MINIMAL = ["exchange", "mnatural", "ultra", "lln", "rgp", "dt", "submodular", "lad"]


@settings(max_examples=120, deadline=None)
@given(valuations(min_n=2, max_n=4))
def test_witnesses_replay_and_are_first(v):
    for prop in ALL:
        vd = check(v, prop)
        if vd.holds:
            assert vd.witness is None
            continue
        w = vd.witness
        assert w.violated()
        again = replay(v, prop, w)
        assert (again.lhs, again.rhs, again.relation) == (w.lhs, w.rhs, w.relation), prop
        assert again.values.items() <= w.values.items() or prop == "ultra"
        if prop == "ultra":
            assert again.values == w.values
        if prop in MINIMAL:
            assert _first_violation(v, prop) == (w.bundles, w.items), prop


def test_witness_describe(v_paper):
    w = check(v_paper, "submodular").witness
    text = w.describe(v_paper.ground)
    assert "A={}" in text and "B={y}" in text and "x=x" in text and "15 <= 5" in text


# --- further properties ----------------------------------------------------

@settings(max_examples=80, deadline=None)
@given(st.integers(3, 5), st.integers(0, 10**6))
def test_substitutes_decomposition(n, seed):
    import random

    rng = random.Random(seed)
    for v in (random_ultra(rng, n), random_table(n, seed, (-4, 4))):
        assert check(v, "mnatural").holds == (check(v, "submodular").holds and check(v, "ultra").holds)


def test_lad_fixture_is_not_ultra():
    assert check(LAD_NOT_ULTRA, "lad").holds
    assert not check(LAD_NOT_ULTRA, "ultra").holds
    assert O.lad(O.as_dict(LAD_NOT_ULTRA)) and not O.ultra(O.as_dict(LAD_NOT_ULTRA))


def test_lad_fixture_search_is_reproducible():
    seed = next(s for s in range(10_000)
                if check(v := random_table(3, s, (-5, 5)), "lad").holds and not check(v, "ultra").holds)
    assert random_table(3, seed, (-5, 5)).table == LAD_NOT_ULTRA.table


def test_lad_witness_example():
    # the only global maximiser is small, but {a,b} wins among subsets of {a,b}
    v = Valuation.from_mapping(("a", "b", "c"), {
        "": 0, "a": 1, "b": 1, "a,b": 5, "c": 9, "a,c": 0, "b,c": 0, "a,b,c": 0,
    })
    w = check(v, "lad").witness
    assert w.bundles == {"X": 0b011, "A": 0b011}
    assert (w.lhs, w.rhs) == (2, 1)


def test_symmetric_and_additive_witnesses():
    v = Valuation.from_mapping(("a", "b"), {"": 1, "a": 2, "b": 3, "a,b": 6})
    add = check(v, "additive").witness
    assert add.bundles == {"A": 0, "B": 0} and add.lhs == 1
    sym = check(v, "symmetric").witness
    assert sym.bundles == {"A": 0b10, "R": 0b01} and (sym.lhs, sym.rhs) == (3, 2)


def test_symmetric_family_classes():
    assert check(symmetric(2, [0, 5, 8]), "submodular").holds
    assert check(symmetric(2, [0, 5, 8]), "ultra").holds
    v = catalog("V_AND2")
    assert check(v, "ultra").holds and check(v, "exchange").holds
    assert not check(v, "submodular").holds


# --- lemmas ----------------------------------------------------------------

def test_cv_on_v_paper(v_paper):
    assert check_lemma(v_paper, "cv").holds


@pytest.mark.parametrize("lemma", ["cv", "one_n", "two_two", "conditional_ultra"])
def test_ultra_lemmas_refuse_non_ultra(w_or, lemma):
    with pytest.raises(LemmaPreconditionError):
        check_lemma(w_or, lemma)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 5), st.integers(0, 10**6))
def test_ultra_lemmas_hold_on_ultra_families(n, seed):
    import random

    v = random_ultra(random.Random(seed), n)
    for lemma in ("cv", "one_n", "two_two", "conditional_ultra"):
        assert check_lemma(v, lemma).holds, lemma


def _naive_cv(f, items):
    for S in O.powerset(items):
        for x, y, z in permutations(set(items) - S, 3):
            lhs = f[S | {z}] + f[S | {x, y}]
            if not (lhs <= f[S | {y}] + f[S | {x, z}] or lhs == f[S | {x}] + f[S | {y, z}]):
                return False
    return True


def _naive_one_n(f, items):
    for A in O.powerset(items):
        if not A:
            continue
        for x in set(items) - A:
            if not any(f[frozenset({x})] + f[A] <= f[frozenset({y})] + f[A - {y} | {x}] for y in A):
                return False
    return True


def _naive_two_two(f, items):
    for S in O.powerset(items):
        for w, x, y, z in permutations(set(items) - S, 4):
            c = lambda p, q: O.c(f, S, p, q)  # noqa: E731
            if c(w, y) + c(x, z) > max(c(w, x) + c(y, z), c(x, y) + c(w, z)):
                return False
    return True


@settings(max_examples=120, deadline=None)
@given(valuations(min_n=3, max_n=4))
def test_lemma_scans_match_naive(v):
    f, items = O.as_dict(v), v.ground.items
    assert (_lemma_cv(v) is None) == _naive_cv(f, items)
    assert (_lemma_one_n(v) is None) == _naive_one_n(f, items)
    assert (_lemma_two_two(v) is None) == _naive_two_two(f, items)


def test_dummy_d1_on_and2():
    vd = check_lemma(catalog("V_AND2"), "dummy_d1")
    assert vd.holds
    lln = vd.support
    assert not lln.holds
    # the extension's LLN failure: v'(b|d) = 0 < v'(b|a) = 10
    w = lln.witness
    assert w.violated()


def test_dummy_d1_extension_values():
    from ultraval import add_dummies

    d = add_dummies(catalog("V_AND2"), ["d"])
    assert d(["b", "d"]) - d(["d"]) == 0
    assert d(["a", "b"]) - d(["a"]) == 10


def test_dummy_d2_on_symmetric_concave():
    vd = check_lemma(symmetric(2, [0, 5, 8]), "dummy_d2")
    assert vd.holds and vd.support.holds


def test_dummy_preconditions(v_paper):
    with pytest.raises(LemmaPreconditionError):
        check_lemma(symmetric(2, [0, 5, 8]), "dummy_d1")
    with pytest.raises(LemmaPreconditionError):
        check_lemma(v_paper, "dummy_d2")


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 4), st.integers(0, 10**6))
def test_dummy_lemmas_on_families(n, seed):
    import random

    v = random_ultra(random.Random(seed), n)
    if check(v, "submodular").holds:
        assert check_lemma(v, "dummy_d2").holds
    else:
        assert check_lemma(v, "dummy_d1").holds


def test_lemma_ids_closed():
    assert {x.value for x in LemmaId} == {"cv", "one_n", "two_two", "conditional_ultra", "dummy_d1", "dummy_d2"}
