import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import (brute_subgroup_sets, closure, naive_centralizer,
                     naive_normalizer)
from sigmagraph.errors import (CrossCheckError, DomainError, GroupInputError,
                               ResourceLimitError)
from sigmagraph.group import (DEFAULT_LIMITS, EngineLimits, PermGroup,
                              all_subgroups, centralizer, centralizer_of_factor,
                              chief_series, core_series_subgroup, frattini,
                              group_from_generators, hall_subgroups, is_normal,
                              maximal_subgroups, normal_subgroups, normalizer,
                              quotient, subgroup, sylow, two_generated_subgroups)
from sigmagraph.perm import Permutation
from sigmagraph.sigma import prime_factors
from sigmagraph.zoo import alternating, build_by_tag, symmetric

ORACLE_TAGS = ("S3", "V4", "D4", "Q8", "A4", "dic3", "D6", "sl23", "S4",
               "f20", "c7_c3", "C30", "D5", "A5")


def sets_of(subs, limits=DEFAULT_LIMITS):
    return {frozenset(s.group.elements(limits)) for s in subs}


def test_basic_group_facts():
    s4 = symmetric(4)
    assert s4.order == 24 and s4.degree == 4
    assert s4.contains(Permutation.from_cycles(4, [(0, 1, 2, 3)]))
    assert not s4.contains(Permutation.from_cycles(5, [(0, 1)]))
    assert len(s4.elements()) == 24
    assert group_from_generators(3, []).is_trivial


def test_constructor_validation():
    with pytest.raises(GroupInputError):
        PermGroup(0, [])
    with pytest.raises(GroupInputError):
        PermGroup(3, [Permutation((1, 0))])
    with pytest.raises(GroupInputError):
        PermGroup(3, ["(0 1)"])


@pytest.mark.parametrize("tag", ORACLE_TAGS)
def test_all_subgroups_match_bruteforce(tag):
    g = build_by_tag(tag)
    assert sets_of(all_subgroups(g)) == brute_subgroup_sets(g)


def test_known_subgroup_counts():
    assert len(all_subgroups(build_by_tag("S4"))) == 30
    assert len(all_subgroups(build_by_tag("A5"))) == 59
    assert len(all_subgroups(build_by_tag("S5"))) == 156
    assert len(all_subgroups(build_by_tag("Q8"))) == 6
    assert len(all_subgroups(build_by_tag("dic3"))) == 8


def test_two_generated_subgroups():
    s4 = build_by_tag("S4")
    # every subgroup of S4 needs at most two generators
    assert sets_of(two_generated_subgroups(s4)) == sets_of(all_subgroups(s4))
    orders = [s.order for s in two_generated_subgroups(s4)]
    assert orders == sorted(orders)


@pytest.mark.parametrize("tag", ("S4", "A4", "dic3", "Q8"))
def test_normal_subgroups_match_bruteforce(tag):
    g = build_by_tag(tag)
    u_sets = sets_of(normal_subgroups(g))
    expected = set()
    for s in brute_subgroup_sets(g):
        if all(x.inverse() * s_el * x in s for s_el in s for x in g.generators):
            expected.add(s)
    assert u_sets == expected


def test_normal_subgroup_orders():
    assert [n.order for n in normal_subgroups(build_by_tag("S4"))] == [1, 4, 12, 24]
    assert [n.order for n in normal_subgroups(build_by_tag("A5"))] == [1, 60]
    assert [n.order for n in normal_subgroups(build_by_tag("Q8"))] == [1, 2, 4, 4, 4, 8]


def test_subgroup_accessors():
    s4 = build_by_tag("S4")
    v4 = subgroup(s4, [Permutation.from_cycles(4, [(0, 1), (2, 3)]),
                       Permutation.from_cycles(4, [(0, 2), (1, 3)])])
    assert v4.order == 4 and v4.index == 6
    assert is_normal(s4, v4)
    a4 = subgroup(s4, [Permutation.from_cycles(4, [(0, 1, 2)]),
                       Permutation.from_cycles(4, [(0, 1), (2, 3)])])
    assert a4.contains_subgroup(v4) and not v4.contains_subgroup(a4)


def test_centralizer_normalizer_match_naive():
    s4 = build_by_tag("S4")
    picks = [subgroup(s4, [Permutation.from_cycles(4, [(0, 1)])]),
             subgroup(s4, [Permutation.from_cycles(4, [(0, 1, 2, 3)])]),
             subgroup(s4, [Permutation.from_cycles(4, [(0, 1, 2)])]),
             subgroup(s4, [Permutation.from_cycles(4, [(0, 1), (2, 3)]),
                           Permutation.from_cycles(4, [(0, 2), (1, 3)])])]
    for s in picks:
        sub_elems = list(s.elements())
        assert frozenset(centralizer(s4, s).elements()) == naive_centralizer(s4, sub_elems)
        assert frozenset(normalizer(s4, s).elements()) == naive_normalizer(s4, sub_elems)


def test_subgroup_membership_validated():
    s4 = build_by_tag("S4")
    s5 = symmetric(5)
    rogue = subgroup(s5, [Permutation.from_cycles(5, [(0, 4)])])
    with pytest.raises(DomainError):
        centralizer(s4, rogue)


def test_centralizer_of_factor():
    s4 = build_by_tag("S4")
    v4 = subgroup(s4, [Permutation.from_cycles(4, [(0, 1), (2, 3)]),
                       Permutation.from_cycles(4, [(0, 2), (1, 3)])])
    a4 = subgroup(s4, [Permutation.from_cycles(4, [(0, 1, 2)]),
                       Permutation.from_cycles(4, [(0, 1), (2, 3)])])
    # [g, A4] <= V4 exactly on A4: the factor A4/V4 has automizer order 2
    c = centralizer_of_factor(s4, a4, v4)
    assert c.order == 12
    with pytest.raises(DomainError):
        centralizer_of_factor(s4, v4, a4)


def test_chief_series_s4():
    series = chief_series(build_by_tag("S4"))
    assert [t.order for t in series.terms] == [1, 4, 12, 24]
    assert [f.order for f in series.factors] == [4, 3, 2]


def test_chief_series_both_preferences():
    c6 = build_by_tag("C6")
    small = chief_series(c6, prefer="smallest")
    large = chief_series(c6, prefer="largest")
    for series in (small, large):
        prod = 1
        for f in series.factors:
            assert len(prime_factors(f.order)) == 1
            prod *= f.order
        assert prod == 6
    assert {small.terms[1].order, large.terms[1].order} == {2, 3}


def test_chief_series_trivial_group():
    with pytest.raises(DomainError):
        chief_series(group_from_generators(2, []))


def test_quotient_s4_by_v4():
    s4 = build_by_tag("S4")
    v4 = subgroup(s4, [Permutation.from_cycles(4, [(0, 1), (2, 3)]),
                       Permutation.from_cycles(4, [(0, 2), (1, 3)])])
    q = quotient(s4, v4)
    assert q.order == 6 and q.kernel.order == 4
    imgs = q.image.elements()
    assert any(a * b != b * a for a in imgs for b in imgs)
    # projection is a homomorphism on every element pair of a sample
    sample = s4.elements()[::5]
    for a in sample:
        for b in sample:
            assert q.project(a * b) == q.project(a) * q.project(b)


def test_quotient_special_cases():
    s4 = build_by_tag("S4")
    whole = subgroup(s4, list(s4.generators))
    assert quotient(s4, whole).image.is_trivial
    trivial = subgroup(s4, [])
    q = quotient(s4, trivial)
    assert q.image is s4
    with pytest.raises(DomainError):
        quotient(s4, subgroup(s4, [Permutation.from_cycles(4, [(0, 1)])]))


def test_quotient_preimage_indices():
    s4 = build_by_tag("S4")
    v4 = subgroup(s4, [Permutation.from_cycles(4, [(0, 1), (2, 3)]),
                       Permutation.from_cycles(4, [(0, 2), (1, 3)])])
    q = quotient(s4, v4)
    u = s4.universe()
    identity_image = frozenset({tuple(range(q.image.degree))})
    pre = q.preimage_indices(u, identity_image)
    assert frozenset(u.perms[i] for i in pre) == frozenset(v4.elements())


def test_wreath_quotient_by_base():
    w = build_by_tag("wreath_c2_s3")
    base = core_series_subgroup(w, [2])
    assert base.order == 64
    q = quotient(w, base)
    assert q.order == 6
    imgs = q.image.elements()
    assert any(a * b != b * a for a in imgs for b in imgs)


def test_sylow():
    s4 = build_by_tag("S4")
    assert sylow(s4, 2).order == 8
    assert sylow(s4, 3).order == 3
    assert sylow(s4, 5).order == 1
    assert sylow(build_by_tag("A5"), 5).order == 5
    with pytest.raises(DomainError):
        sylow(s4, 4)


def test_hall_subgroups():
    a5 = build_by_tag("A5")
    assert [h.order for h in hall_subgroups(a5, (2, 3))] == [12] * 5
    assert hall_subgroups(a5, (3, 5)) == []
    assert hall_subgroups(a5, (2, 5)) == []
    s4 = build_by_tag("S4")
    assert [h.order for h in hall_subgroups(s4, (2,))] == [8, 8, 8]
    assert [h.order for h in hall_subgroups(s4, (5,))] == [1]
    assert [h.order for h in hall_subgroups(build_by_tag("s3xc5"), (2, 5))] == [10, 10, 10]
    with pytest.raises(DomainError):
        hall_subgroups(s4, (4,))


def test_core_series_subgroup():
    s4 = build_by_tag("S4")
    assert core_series_subgroup(s4, [2]).order == 4
    assert core_series_subgroup(s4, [3]).order == 1
    assert core_series_subgroup(s4, [2, 3]).order == 24
    assert core_series_subgroup(build_by_tag("A4"), [2]).order == 4


def test_frattini():
    assert frattini(build_by_tag("Q8")).order == 2
    assert frattini(build_by_tag("S4")).order == 1
    assert frattini(build_by_tag("C12")).order == 2
    assert frattini(build_by_tag("D4")).order == 2


def test_maximal_subgroups_s4():
    orders = sorted(m.order for m in maximal_subgroups(build_by_tag("S4")))
    assert orders == [6, 6, 6, 6, 8, 8, 8, 12]


def test_resource_caps_raise_with_cap_name():
    with pytest.raises(ResourceLimitError, match="max_subgroup_order"):
        all_subgroups(alternating(5), EngineLimits(max_subgroup_order=50))
    with pytest.raises(ResourceLimitError, match="max_element_order"):
        symmetric(5).elements(EngineLimits(max_element_order=100))
    with pytest.raises(ResourceLimitError, match="max_normal_order"):
        normal_subgroups(symmetric(4), EngineLimits(max_normal_order=10))
    with pytest.raises(ResourceLimitError, match="max_subgroup_count"):
        all_subgroups(symmetric(4), EngineLimits(max_subgroup_count=5))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.sampled_from(range(24)), min_size=0, max_size=3))
def test_generated_subgroup_matches_closure(picks):
    s4 = symmetric(4)
    elems = s4.elements()
    gens = [elems[i] for i in picks]
    sub = subgroup(s4, gens)
    assert frozenset(sub.elements()) == closure(4, gens)
    assert 24 % sub.order == 0


def test_deterministic_element_order():
    a = symmetric(4).elements()
    b = symmetric(4).elements()
    assert a == b
    assert list(a) == sorted(a, key=lambda p: p.images)
