"""Tests for permutations, groups, closures, subgroup and regular
subgroup enumeration.  The subgroup counts are cross-checked by an
independent pair-closure oracle (valid because every subgroup of the
groups used here is generated by at most two elements)."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from birkhoffsym.errors import NotASubgroupError, PreconditionError
from birkhoffsym.perm import (IndexedGroup, Permutation, PermutationGroup,
                              all_subgroups, builtin_group_names, centralizer,
                              closure, group_from_generator_lines, indexed,
                              is_regular, named_group, parse_cycles,
                              regular_subgroups, symmetric_group)


def perm_strategy(degree):
    return st.permutations(range(degree)).map(Permutation)


def test_composition_convention_q_first():
    # (p*q)(x) = p(q(x)): with p = (0 1), q = (1 2) we get 0 -> q 0 -> p 1
    p = parse_cycles("(0 1)", 3)
    q = parse_cycles("(1 2)", 3)
    assert (p * q).images == (1, 2, 0)
    assert (q * p).images == (2, 0, 1)


def test_call_power_inverse():
    c = parse_cycles("(0 1 2 3)", 4)
    assert c(0) == 1
    assert (c ** 2).images == (2, 3, 0, 1)
    assert (c ** -1) * c == Permutation.identity(4)
    assert c ** 0 == Permutation.identity(4)
    assert c.order() == 4


@given(perm_strategy(6), perm_strategy(6), perm_strategy(6))
def test_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(perm_strategy(7))
def test_cycle_string_roundtrip(p):
    assert parse_cycles(p.cycle_string(), 7) == p


@given(perm_strategy(6))
def test_inverse_roundtrip(p):
    assert (p * p.inverse()).is_identity()
    assert p.inverse().inverse() == p


def test_parse_cycles_validation():
    assert parse_cycles("()", 4).is_identity()
    assert parse_cycles("(0 1)(2 3)", 4).images == (1, 0, 3, 2)
    assert parse_cycles("(0,1,2)", 3) == parse_cycles("(0 1 2)", 3)
    with pytest.raises(ValueError):
        parse_cycles("(0 1", 3)
    with pytest.raises(ValueError):
        parse_cycles("(0 1)(1 2)", 3)  # repeated point
    with pytest.raises(ValueError):
        parse_cycles("(0 5)", 3)  # out of range


def test_immutability():
    p = Permutation.identity(3)
    with pytest.raises(AttributeError):
        p.images = (1, 0, 2)


def test_permutation_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])


def test_group_constructor_sorts_and_requires_identity():
    g = symmetric_group(3)
    assert g.elements[0].is_identity()
    assert list(g.elements) == sorted(g.elements)
    with pytest.raises(ValueError):
        PermutationGroup(3, [parse_cycles("(0 1)", 3)])


def test_closure_matches_itertools_for_s3_s4():
    for n in (3, 4):
        gens = [parse_cycles("(0 1)", n),
                Permutation(tuple(range(1, n)) + (0,))]
        g = closure(gens)
        assert {p.images for p in g.elements} == set(
            itertools.permutations(range(n)))


def test_closure_cap():
    gens = [parse_cycles("(0 1)", 5), parse_cycles("(0 1 2 3 4)", 5)]
    with pytest.raises(PreconditionError):
        closure(gens, max_order=100)


def test_builtin_structure():
    # (order, max element order, involution count), frozen from a
    # derivation run double-checked against textbook structure
    facts = {
        "c2": (2, 2, 1), "c3": (3, 3, 0), "c4": (4, 4, 1), "c6": (6, 6, 1),
        "v4": (4, 2, 3), "s3": (6, 3, 3), "s4": (24, 4, 9),
        "d4": (8, 4, 5), "q8": (8, 4, 1),
    }
    for name, (order, max_order, involutions) in facts.items():
        g = named_group(name)
        orders = [p.order() for p in g.elements]
        assert g.order == order, name
        assert max(orders) == max_order, name
        assert sum(1 for o in orders if o == 2) == involutions, name
    assert named_group("s5").order == 120
    assert set(facts) | {"s5"} == set(builtin_group_names())


def test_named_group_unknown():
    with pytest.raises(ValueError):
        named_group("e8")


def pair_closure_subgroups(group):
    """Oracle: distinct closures of all 1- and 2-element subsets.
    Complete exactly when every subgroup is 2-generated."""
    seen = set()
    elems = group.elements
    for i, a in enumerate(elems):
        for b in elems[i:]:
            sub = closure([a, b])
            seen.add(tuple(p.images for p in sub.elements))
    return seen


@pytest.mark.parametrize("name,count", [
    ("c6", 4), ("v4", 5), ("s3", 6), ("d4", 10), ("q8", 6), ("s4", 30),
])
def test_subgroup_counts(name, count):
    g = named_group(name)
    subs = all_subgroups(g)
    assert len(subs) == count
    assert len(pair_closure_subgroups(g)) == count
    # deterministic order, closed under taking the whole group and 1
    assert subs[0].order == 1
    assert subs[-1].order == g.order
    assert [s.order for s in subs] == sorted(s.order for s in subs)


def test_subgroup_count_s5():
    g = named_group("s5")
    subs = all_subgroups(g)
    assert len(subs) == 156
    assert len(pair_closure_subgroups(g)) == 156


def test_all_subgroups_bound():
    with pytest.raises(PreconditionError):
        all_subgroups(named_group("s4"), bound=10)


def test_centralizer_hand_cases():
    s3 = named_group("s3")
    a3 = closure([parse_cycles("(0 1 2)", 3)])
    assert centralizer(s3, a3).order == 3
    c2 = closure([parse_cycles("(0 1)", 3)])
    assert centralizer(s3, c2).order == 2
    triv = closure([Permutation.identity(3)])
    assert centralizer(s3, triv) == s3
    with pytest.raises(NotASubgroupError):
        centralizer(s3, named_group("c4"))


def test_indexed_group_table():
    g = named_group("s3")
    ig = indexed(g)
    elems = g.elements
    for a in range(g.order):
        for b in range(g.order):
            assert elems[ig.table[a][b]] == elems[a] * elems[b]
        assert (elems[a] * elems[ig.inv[a]]).is_identity()


def test_regular_subgroups_counts():
    # both enumeration paths, frozen from the derivation run
    cases = {"s3": 1, "c6": 1, "v4": 1, "s4": 4}
    for name, count in cases.items():
        g = named_group(name)
        found = regular_subgroups(g)
        assert len(found) == count, name
        exhaustive = [h for h in all_subgroups(g) if is_regular(g, h)]
        assert set(found) == set(exhaustive), name
        for u in found:
            assert u.order == g.degree
            assert is_regular(g, u)
    # S_4 on 4 points: three cyclic C_4 and the normal V_4
    regs = regular_subgroups(named_group("s4"))
    cyclic = [u for u in regs if max(p.order() for p in u.elements) == 4]
    assert len(cyclic) == 3


def test_is_regular_negative():
    s3 = named_group("s3")
    c2 = closure([parse_cycles("(0 1)", 3)])
    assert not is_regular(s3, c2)
    assert not is_regular(s3, s3)


def test_group_from_generator_lines():
    g = group_from_generator_lines([
        "# a comment",
        "(0 1)",
        "",
        "(0 1 2)",
    ])
    assert g.order == 6
    assert g.degree == 3


def test_symmetric_group_enumeration_is_lexicographic():
    g = symmetric_group(3)
    assert [p.images for p in g.elements] == sorted(
        itertools.permutations(range(3)))
