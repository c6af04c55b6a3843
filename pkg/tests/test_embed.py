import pytest

from cayleykit import (
    NotAssociative,
    NotIdempotent,
    NotMonoid,
    Reason,
    TooLarge,
    brute_force_groups,
    classify_magma,
    embedded_groups,
    generated_mul_semigroup,
    is_special_monoid,
    is_special_semigroup,
    maximal_subgroup_at,
    new_table,
    restrict,
    zn_table,
)
from cayleykit.embed import maximal_witnesses
from conftest import generated_corpus, handcrafted_semigroups
from oracles import naive_groups, naive_identity

SG = frozenset({24, 12, 36, 48})


def test_maximal_subgroup_ss(ss):
    w = maximal_subgroup_at(ss, 36)
    assert w.carrier == SG and w.identity == 36 and w.order == 4


def test_maximal_subgroup_errors(ss, implication):
    with pytest.raises(NotIdempotent):
        maximal_subgroup_at(ss, 18)
    with pytest.raises(NotAssociative):
        maximal_subgroup_at(implication, 1)


def test_maximal_subgroup_of_group_is_everything(sg):
    assert maximal_subgroup_at(sg, 36).carrier == set(sg.labels)
    z7 = generated_mul_semigroup(3, 7)
    assert maximal_subgroup_at(z7, 1).carrier == set(z7.labels)


def test_embedded_groups_ss(ss):
    assert [(w.carrier, w.identity) for w in embedded_groups(ss, 2)] == [(SG, 36)]
    # min order 1 still gives one (maximal) group per idempotent; 36 is the only one
    assert [(w.carrier, w.identity) for w in embedded_groups(ss, 1)] == [(SG, 36)]


def test_embedded_groups_left_zero(left_zero):
    assert embedded_groups(left_zero, 2) == []
    assert naive_groups(left_zero, 2) == {frozenset({0}): 0, frozenset({1}): 1}


def test_brute_force_ss(ss):
    got = {w.carrier: w.identity for w in brute_force_groups(ss, 5)}
    assert got == {frozenset({36}): 36, frozenset({24, 36}): 36, SG: 36}
    assert got == naive_groups(ss)


def test_brute_force_edge_cases(implication):
    one = new_table([9], [[9]])
    assert [(w.carrier, w.identity) for w in brute_force_groups(one, 1)] == [(frozenset({9}), 9)]
    with pytest.raises(NotAssociative):
        brute_force_groups(implication, 2)
    big = zn_table(range(21), 21)
    with pytest.raises(TooLarge):
        brute_force_groups(big, 3)
    assert brute_force_groups(big, 1, limit=21)


def test_brute_force_against_naive_subsets():
    tables = [t for _, t in generated_corpus(20) if t.size <= 10] + \
             [t for t in handcrafted_semigroups() if t.size <= 10]
    for t in tables:
        for k in (1, 2, t.size):
            got = {w.carrier: w.identity for w in brute_force_groups(t, k)}
            assert got == naive_groups(t, k)


def test_brute_force_sorted(ss):
    ws = brute_force_groups(ss, 5)
    assert [w.order for w in ws] == [4, 2, 1]


def test_special_semigroup_ss(ss):
    v = is_special_semigroup(ss, 2)
    assert v.special and v.reason is Reason.WITNESSED
    assert v.witness.carrier == SG and v.witness.identity == 36


def test_special_semigroup_sg_is_group(sg):
    for k in (1, 2, 4):
        v = is_special_semigroup(sg, k)
        assert not v.special and v.reason is Reason.IS_ALREADY_TARGET_KIND and v.witnesses == ()


def test_special_semigroup_left_zero(left_zero):
    v = is_special_semigroup(left_zero, 2)
    assert not v.special and v.reason is Reason.NO_WITNESS
    # literal reading: the singletons {0}, {1} are groups and proper
    assert is_special_semigroup(left_zero, 1).special


def test_special_semigroup_requires_associativity(implication):
    with pytest.raises(NotAssociative):
        is_special_semigroup(implication, 2)


def test_special_monoid_z6():
    z6 = zn_table(range(6), 6)
    v = is_special_monoid(z6, 2)
    assert v.special
    assert v.witness.carrier == {1, 5} and v.witness.identity == 1
    assert {w.carrier for w in v.witnesses} == {frozenset({1, 5}), frozenset({2, 4})}


def test_special_monoid_adjoined_unit():
    t = zn_table([1, 18, 24, 12, 36, 48], 60)
    assert classify_magma(t).identity == 1
    v = is_special_monoid(t, 2)
    assert v.special and [w.carrier for w in v.witnesses] == [SG]
    # {1} is a group but is the unit of the monoid, so never a witness
    v1 = is_special_monoid(t, 1)
    assert all(w.carrier != {1} for w in v1.witnesses)


def test_special_monoid_errors_and_groups(ss, sg, implication):
    with pytest.raises(NotMonoid):
        is_special_monoid(ss, 2)
    with pytest.raises(NotAssociative):
        is_special_monoid(implication, 2)
    assert not is_special_monoid(sg, 2).special


def _corpus():
    return [t for _, t in generated_corpus(30)] + handcrafted_semigroups()


def test_maximal_brute_force_equals_embedded_on_small_corpus():
    for t in _corpus():
        if t.size > 6:
            continue
        brute = {(w.carrier, w.identity) for w in maximal_witnesses(brute_force_groups(t, t.size))}
        fast = {(w.carrier, w.identity) for w in embedded_groups(t, 1)}
        assert brute == fast


def test_witnesses_reverify_as_groups():
    for t in _corpus():
        for w in embedded_groups(t, 1):
            sub = restrict(t, w.carrier)
            assert classify_magma(sub).kind.is_group
            assert naive_identity(sub) == w.identity
            assert t.mul(w.identity, w.identity) == w.identity


def test_special_monotone_in_min_order():
    for t in _corpus():
        special_at = [is_special_semigroup(t, k).special for k in range(2, t.size + 2)]
        # once false, false for every larger k
        assert special_at == sorted(special_at, reverse=True)


def test_groups_are_never_special():
    for t in _corpus():
        if classify_magma(t).kind.is_group:
            assert not is_special_semigroup(t, 1).special


def test_no_witness_is_the_unit_singleton():
    for t in _corpus():
        e = classify_magma(t).identity
        if e is None:
            continue
        for k in (1, 2):
            v = is_special_semigroup(t, k)
            assert all(w.carrier != {e} for w in v.witnesses)
            assert all(w.carrier != set(t.labels) for w in v.witnesses)


def test_exhaustive_mode_agrees():
    for t in _corpus():
        if t.size > 16:
            continue
        for k in (1, 2):
            fast = is_special_semigroup(t, k)
            slow = is_special_semigroup(t, k, exhaustive=True)
            assert fast == slow
