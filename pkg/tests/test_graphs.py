import json

import pytest

from oracles import brute_has_circuit, vm_edges_from_candidates
from sigmagraph.errors import DomainError, ResourceLimitError
from sigmagraph.graphs import (SigmaGraph, build_hall, build_hawkes, build_vm,
                               graphs_equal, has_circuit, has_loop,
                               is_subgraph, isolated_vertices, to_dot, to_json,
                               union, weak_components)
from sigmagraph.group import all_subgroups, maximal_subgroups
from sigmagraph.sigma import ATOMIC, SigmaPartition, sigma_of_group
from sigmagraph.zoo import build_by_tag, standard_partitions, symmetric

TWO = SigmaPartition(explicit_classes=(frozenset({2}),))

GRAPH_SAMPLE = ("C2", "C6", "C30", "S3", "S4", "A4", "A5", "D6", "Q8", "sl23",
                "dic3", "c7_c3", "f20", "s3xc5", "wreath_c2_s3")


def tags(edges):
    return sorted((a.tag, b.tag) for a, b in edges)


def test_s3_graphs():
    s3 = build_by_tag("S3")
    for build in (build_hawkes, build_hall, build_vm):
        assert tags(build(s3, ATOMIC).edges) == [("atomic:3", "atomic:2")]


def test_s4_graphs():
    s4 = build_by_tag("S4")
    assert tags(build_hawkes(s4, ATOMIC).edges) == [
        ("atomic:2", "atomic:2"), ("atomic:2", "atomic:3"), ("atomic:3", "atomic:2")]
    assert tags(build_hall(s4, ATOMIC).edges) == [("atomic:3", "atomic:2")]
    assert tags(build_vm(s4, ATOMIC).edges) == [
        ("atomic:2", "atomic:3"), ("atomic:3", "atomic:2")]


def test_a5_graphs():
    a5 = build_by_tag("A5")
    assert len(build_hawkes(a5, ATOMIC).edges) == 9  # complete with loops
    expected = [("atomic:2", "atomic:3"), ("atomic:3", "atomic:2"),
                ("atomic:5", "atomic:2")]
    assert tags(build_hall(a5, ATOMIC).edges) == expected
    assert tags(build_vm(a5, ATOMIC).edges) == expected


def test_s6_graphs():
    s6 = build_by_tag("S6")
    assert len(build_hawkes(s6, ATOMIC).edges) == 9
    assert tags(build_hall(s6, ATOMIC).edges) == [
        ("atomic:3", "atomic:2"), ("atomic:5", "atomic:2")]
    assert tags(build_vm(s6, ATOMIC).edges) == [
        ("atomic:2", "atomic:3"), ("atomic:3", "atomic:2"),
        ("atomic:5", "atomic:2")]


def test_edgeless_for_nilpotent():
    for tag in ("C6", "C30", "Q8", "D4"):
        g = build_by_tag(tag)
        for build in (build_hawkes, build_hall, build_vm):
            graph = build(g, ATOMIC)
            assert graph.edges == frozenset()
            assert isolated_vertices(graph) == graph.vertices


def test_wreath_two_class_strictness():
    """The order-384 witness: hall < vm < hawkes, with a loop on the 2-class
    and no hall edge out of it."""
    w = build_by_tag("wreath_c2_s3")
    hawkes = build_hawkes(w, TWO)
    hall = build_hall(w, TWO)
    vm = build_vm(w, TWO)
    assert tags(hawkes.edges) == [("explicit:0", "explicit:0"),
                                  ("explicit:0", "residual"),
                                  ("residual", "explicit:0")]
    assert tags(vm.edges) == [("explicit:0", "residual"),
                              ("residual", "explicit:0")]
    assert tags(hall.edges) == [("residual", "explicit:0")]
    assert is_subgraph(hall, vm) and is_subgraph(vm, hawkes)
    assert hall.edges < vm.edges < hawkes.edges
    assert has_loop(hawkes) and not has_loop(vm)


def test_vertices_are_group_classes():
    g = build_by_tag("s3xc5")
    graph = build_vm(g, ATOMIC)
    assert {v.tag for v in graph.vertices} == {"atomic:2", "atomic:3", "atomic:5"}
    assert isolated_vertices(graph) == frozenset({ATOMIC.classify(5)})
    assert graph.vertex_primes == ((ATOMIC.classify(2), (2,)),
                                   (ATOMIC.classify(3), (3,)),
                                   (ATOMIC.classify(5), (5,)))


def test_trivial_group_rejected():
    from sigmagraph.group import group_from_generators
    with pytest.raises(DomainError):
        build_hawkes(group_from_generators(2, []), ATOMIC)


@pytest.mark.parametrize("tag", GRAPH_SAMPLE)
def test_circuits_match_bruteforce(tag):
    g = build_by_tag(tag)
    for sigma in standard_partitions():
        for build in (build_hawkes, build_hall, build_vm):
            graph = build(g, sigma)
            assert has_circuit(graph) == brute_has_circuit(graph.vertices,
                                                           graph.edges)


def test_weak_components():
    vm = build_vm(build_by_tag("C30"), ATOMIC)
    assert [len(c) for c in weak_components(vm)] == [1, 1, 1]
    vm6 = build_vm(build_by_tag("S6"), ATOMIC)
    assert [len(c) for c in weak_components(vm6)] == [3]


def test_vm_monotone_in_subgroups():
    """A subgroup's vm graph embeds in the group's."""
    for tag in ("S4", "A5", "sl23"):
        g = build_by_tag(tag)
        whole = build_vm(g, ATOMIC)
        for m in maximal_subgroups(g):
            if m.order == 1:
                continue
            assert is_subgraph(build_vm(m.group, ATOMIC), whole), tag


@pytest.mark.parametrize("tag", ("S4", "A5", "sl23", "dic3", "s3xc5", "f20"))
def test_vm_candidate_pools_agree(tag):
    """Full lattice and two-generated search give the same vm graph."""
    from sigmagraph.group import two_generated_subgroups
    g = build_by_tag(tag)
    for sigma in standard_partitions():
        full = vm_edges_from_candidates(g, sigma, all_subgroups(g))
        two_gen = vm_edges_from_candidates(g, sigma, two_generated_subgroups(g))
        assert full == two_gen
        assert frozenset(full) == build_vm(g, sigma).edges


def test_union_and_subgraph_algebra():
    s4 = build_by_tag("S4")
    s3 = build_by_tag("S3")
    g1 = build_vm(s4, ATOMIC, group_tag="S4")
    g2 = build_vm(s3, ATOMIC, group_tag="S3")
    u = union(g1, g2)
    assert u.vertices == g1.vertices | g2.vertices
    assert u.edges == g1.edges | g2.edges
    assert is_subgraph(g1, u) and is_subgraph(g2, u)
    assert graphs_equal(union(g1, g2), union(g2, g1))
    assert graphs_equal(union(g1, g1), g1)
    assert is_subgraph(g2, g1)  # S3's vm edge lives inside S4's
    other = build_vm(s4, SigmaPartition(explicit_classes=(frozenset({2, 3}),)))
    with pytest.raises(DomainError):
        union(g1, other)
    with pytest.raises(DomainError):
        is_subgraph(g1, other)


def test_union_merges_kind_and_tag():
    s4 = build_by_tag("S4")
    vm = build_vm(s4, ATOMIC, group_tag="S4")
    hawkes = build_hawkes(s4, ATOMIC, group_tag="S4")
    assert union(vm, vm).kind == "vm"
    assert union(vm, hawkes).kind == "union"
    assert union(vm, hawkes).group_tag == "S4"


def test_graph_constructor_rejects_stray_edges():
    s4 = build_by_tag("S4")
    vm = build_vm(s4, ATOMIC)
    stray = ATOMIC.classify(7)
    with pytest.raises(DomainError):
        SigmaGraph("vm", "S4", ATOMIC, vm.vertices,
                   frozenset({(stray, stray)}))


def test_json_shape_and_determinism():
    first = to_json(build_hawkes(symmetric(4), ATOMIC, group_tag="S4"))
    second = to_json(build_hawkes(symmetric(4), ATOMIC, group_tag="S4"))
    assert first == second
    data = json.loads(first)
    assert data == {
        "kind": "hawkes", "group": "S4",
        "vertices": [{"tag": "atomic:2", "primes_in_G": [2]},
                     {"tag": "atomic:3", "primes_in_G": [3]}],
        "edges": [["atomic:2", "atomic:2"], ["atomic:2", "atomic:3"],
                  ["atomic:3", "atomic:2"]],
    }


def test_dot_output():
    dot = to_dot(build_hawkes(build_by_tag("S3"), ATOMIC, group_tag="S3"))
    assert dot == ('digraph "hawkes_S3" {\n'
                   '  "atomic:2";\n'
                   '  "atomic:3";\n'
                   '  "atomic:3" -> "atomic:2";\n'
                   '}\n')


def test_vm_falls_back_above_lattice_caps():
    """wreath_c2_s3 exceeds the subgroup-order cap, so vm must come from the
    two-generated pool and still match the hand-checked edges."""
    w = build_by_tag("wreath_c2_s3")
    with pytest.raises(ResourceLimitError):
        all_subgroups(w)
    assert tags(build_vm(w, ATOMIC).edges) == [
        ("atomic:2", "atomic:3"), ("atomic:3", "atomic:2")]
