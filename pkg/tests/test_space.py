import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hprob import (E, EDAG, ONE, ZERO, HNum, OrderRel, Regime, ZdClass, build_space,
                   classify, complement_law, compare, continuity_limit, increasing_limit,
                   measure, monotone_compare, subadditivity_check,
                   union_inclusion_exclusion)
from hprob.errors import (DuplicateAtom, EmptySpace, MassMismatch, NegativeWeight,
                          NotASubset, NotDecreasing, UnknownAtom, UnknownEvent)

from helpers import (all_events, brute_measure, pair, random_space, space_and_events,
                     spaces)

QUARTER = HNum.real(F(1, 4))


@pytest.fixture
def uniform4():
    return build_space("1234", [QUARTER] * 4, Regime.UNIT,
                       {"A": "12", "B": "23"})


@pytest.fixture
def half_e():
    return build_space(["x", "y"], [HNum(F(1, 2), 0)] * 2, Regime.E)


# build_space
def test_uniform_space_is_valid(uniform4):
    assert uniform4.regime is Regime.UNIT
    assert uniform4.total_mass == ONE
    assert uniform4.atoms == ("1", "2", "3", "4")


def test_e_regime_second_component_trivial(half_e):
    assert half_e.total_mass == E
    assert all(half_e.p2(ev) == 0 for ev in all_events(half_e))


def test_mass_mismatch_reports_sum():
    with pytest.raises(MassMismatch) as info:
        build_space("12", [HNum(F(3, 4), F(1, 4)), HNum(F(1, 2), F(3, 4))], "unit")
    assert info.value.total == HNum(F(5, 4), 1)
    assert "axiom (ii)" in str(info.value)


def test_negative_weight_names_atom():
    with pytest.raises(NegativeWeight) as info:
        build_space(["a", "b"], [HNum(F(3, 2), 1), HNum(F(-1, 2), 0)], "unit")
    assert info.value.atom == "b"
    assert "axiom (i)" in str(info.value)


def test_structural_rejections():
    with pytest.raises(DuplicateAtom):
        build_space(["a", "a"], [QUARTER * 2, QUARTER * 2], "unit")
    with pytest.raises(EmptySpace):
        build_space([], [], "unit")


def test_weights_by_mapping():
    s = build_space(["a", "b"], {"b": HNum(0, 1), "a": HNum(1, 0)}, "unit")
    assert s.measure(["a"]) == E


def test_regime_is_declared_not_inferred():
    # total mass e is a valid E-regime space but not a unit-regime space
    with pytest.raises(MassMismatch):
        build_space("1", [E], Regime.UNIT)
    assert build_space("1", [E], Regime.E).total_mass == E


# measure
def test_measure_examples(uniform4):
    assert measure(uniform4, frozenset()) == ZERO
    assert measure(uniform4, uniform4.omega) == ONE
    assert measure(uniform4, "A") == HNum.real(F(1, 2))


def test_unknown_atom(uniform4):
    with pytest.raises(UnknownAtom):
        uniform4.measure(["9"])
    with pytest.raises(UnknownEvent):
        uniform4.measure("Z")


@given(space_and_events(k=1))
def test_measure_matches_brute_force(args):
    space, a = args
    assert pair(space.measure(a)) == brute_measure(space, a)
    assert space.measure(a) == HNum(space.p1(a), space.p2(a))


# complement
def test_complement_examples(uniform4):
    omega = uniform4.omega
    assert complement_law(uniform4, omega) == (ONE, ZERO)
    assert complement_law(uniform4, frozenset()) == (ZERO, ONE)
    assert complement_law(uniform4, ["1"]) == (QUARTER, HNum.real(F(3, 4)))


@given(space_and_events(k=1))
def test_complement_law(args):
    space, a = args
    pa, pc = complement_law(space, a)
    assert pa + pc == space.total_mass


# monotonicity
def test_monotone_examples(uniform4):
    assert monotone_compare(uniform4, "A", "A") is OrderRel.EQUAL
    assert monotone_compare(uniform4, ["1"], "A") is OrderRel.LESS
    with pytest.raises(NotASubset):
        monotone_compare(uniform4, "A", "B")


@given(space_and_events(k=2))
def test_monotone_and_bounded_by_total_mass(args):
    space, a, b = args
    assert monotone_compare(space, a & b, a | b) in (OrderRel.LESS, OrderRel.EQUAL)
    assert compare(space.measure(a), space.total_mass) in (OrderRel.LESS, OrderRel.EQUAL)


# addition theorem
def test_inclusion_exclusion_examples(uniform4):
    assert union_inclusion_exclusion(uniform4, ["A"]) == uniform4.measure("A")
    assert union_inclusion_exclusion(uniform4, [["1"], ["3", "4"]]) == \
        uniform4.measure(["1"]) + uniform4.measure(["3", "4"])
    assert union_inclusion_exclusion(uniform4, ["A", "B"]) == HNum.real(F(3, 4))


@pytest.mark.parametrize("n_atoms,max_len", [(2, 4), (3, 4), (4, 4), (5, 3), (6, 3)])
def test_inclusion_exclusion_exhaustive(n_atoms, max_len):
    rng = random.Random(n_atoms)
    space = random_space(rng, n_atoms, Regime.UNIT)
    events = all_events(space)
    for size in range(1, max_len + 1):
        for group in itertools.combinations_with_replacement(events, size):
            union = frozenset().union(*group)
            assert pair(union_inclusion_exclusion(space, group)) == brute_measure(space, union)


# subadditivity
def test_subadditivity_examples(uniform4):
    assert subadditivity_check(uniform4, [["1"], ["2"]])[2] is OrderRel.EQUAL
    assert subadditivity_check(uniform4, ["A", "A"])[2] is OrderRel.LESS
    assert subadditivity_check(uniform4, ["A", "B"]) == \
        (HNum.real(F(3, 4)), ONE, OrderRel.LESS)


@given(space_and_events(k=3))
def test_subadditivity(args):
    space, *events = args
    union, bound, rel = subadditivity_check(space, events)
    assert rel in (OrderRel.LESS, OrderRel.EQUAL)


# continuity
def test_continuity_examples(uniform4):
    assert continuity_limit(uniform4, ["A", "A", "A"]) == uniform4.measure("A")
    assert continuity_limit(uniform4, [set("123"), set("12"), set("1")]) == QUARTER
    with pytest.raises(NotDecreasing):
        continuity_limit(uniform4, [set("1"), set("12")])


def test_increasing_chain_via_complements(uniform4):
    chain = [frozenset("1"), frozenset("12"), frozenset("123")]
    assert increasing_limit(uniform4, chain) == HNum.real(F(3, 4))
    with pytest.raises(NotDecreasing):
        increasing_limit(uniform4, list(reversed(chain)))


@given(space_and_events(k=1), st.data())
def test_continuity_on_random_chains(args, data):
    space, a = args
    chain = [a]
    for _ in range(data.draw(st.integers(0, 4))):
        chain.append(data.draw(st.frozensets(st.sampled_from(sorted(chain[-1])))
                               if chain[-1] else st.just(frozenset())))
    assert continuity_limit(space, chain) == space.measure(chain[-1])
    up = list(reversed(chain))
    assert increasing_limit(space, up) == space.measure(up[-1])


# axioms and corollaries
@given(spaces())
def test_axiom_suite(space):
    events = all_events(space)
    assert space.measure(frozenset()) == ZERO
    assert space.measure(space.omega) == space.total_mass
    for ev in events:
        m = space.measure(ev)
        assert m.nu1 >= 0 and m.nu2 >= 0
        total = ZERO
        for atom in ev:
            total = total + space.measure([atom])
        assert total == m


@given(spaces(regimes=(Regime.E, Regime.EDAG)))
def test_zero_divisor_regimes_embed_real_measures(space):
    allowed = {Regime.E: (ZdClass.ZERO, ZdClass.ZD_E),
               Regime.EDAG: (ZdClass.ZERO, ZdClass.ZD_EDAG)}[space.regime]
    for ev in all_events(space):
        m = space.measure(ev)
        assert classify(m) in allowed
        lam = m.nu1 if space.regime is Regime.E else m.nu2
        assert 0 <= lam <= 1


@settings(max_examples=50)
@given(spaces(), st.data())
def test_component_measures_are_additive(space, data):
    a = data.draw(st.frozensets(st.sampled_from(space.atoms)))
    b = data.draw(st.frozensets(st.sampled_from(space.atoms))) - a
    for proj in (space.p1, space.p2):
        assert proj(a | b) == proj(a) + proj(b)
        assert proj(a) >= 0


def test_equality_ignores_atom_order():
    s1 = build_space(["a", "b"], [E, EDAG], "unit")
    s2 = build_space(["b", "a"], [EDAG, E], "unit")
    assert s1 == s2
    assert s1 != build_space(["a", "b"], [EDAG, E], "unit")
