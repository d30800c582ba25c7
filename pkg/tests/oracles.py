"""Naive reference implementations, used only by tests.

Everything here trades speed for obviousness: plain multiplicative closure,
whole-group scans, explicit reachability.  The library must agree with these
on every group small enough to brute-force.
"""

from __future__ import annotations

from sigmagraph.group import DEFAULT_LIMITS, is_normal, quotient, sylow
from sigmagraph.perm import Permutation
from sigmagraph.predicates import f_class_subgroup, is_critical
from sigmagraph.sigma import prime_factors, sigma_of_int


def closure(degree: int, elements) -> frozenset:
    """Subgroup generated by the given permutations, as an element set."""
    identity = Permutation(tuple(range(degree)))
    gens = [g for g in elements if not g.is_identity]
    out = {identity}
    frontier = [identity]
    while frontier:
        step = []
        for a in frontier:
            for g in gens:
                b = a * g
                if b not in out:
                    out.add(b)
                    step.append(b)
        frontier = step
    return frozenset(out)


def brute_subgroup_sets(G) -> set[frozenset]:
    """Every subgroup element set, grown one generator at a time."""
    elems = list(G.elements())
    degree = G.degree
    trivial = closure(degree, [])
    found = {trivial}
    frontier = [trivial]
    while frontier:
        step = []
        for s in frontier:
            for g in elems:
                if g in s:
                    continue
                t = closure(degree, set(s) | {g})
                if t not in found:
                    found.add(t)
                    step.append(t)
        frontier = step
    return found


def naive_centralizer(G, sub_elements) -> frozenset:
    subs = list(sub_elements)
    return frozenset(g for g in G.elements()
                     if all(g * s == s * g for s in subs))


def naive_normalizer(G, sub_elements) -> frozenset:
    sset = frozenset(sub_elements)
    return frozenset(g for g in G.elements()
                     if frozenset(g.inverse() * s * g for s in sset) == sset)


def brute_has_circuit(vertices, edges) -> bool:
    succ = {v: set() for v in vertices}
    for a, b in edges:
        succ[a].add(b)
    for start in vertices:
        frontier = set(succ[start])
        seen = set(frontier)
        while frontier:
            if start in frontier:
                return True
            frontier = {w for v in frontier for w in succ[v]} - seen
            seen |= frontier
    return False


def vm_edges_from_candidates(g, sigma, candidates) -> set:
    """Definitional vm edge set over an explicit pool of candidate subgroups."""
    edges = set()
    for s in candidates:
        if len(sigma_of_int(s.order, sigma)) != 2 or not is_critical(s.group, sigma):
            continue
        for ci in sigma_of_int(s.order, sigma):
            f = f_class_subgroup(s.group, ci)
            for cj in sigma_of_int(s.order // f.order, sigma):
                edges.add((ci, cj))
    return edges


def has_sylow_tower(G, limits=DEFAULT_LIMITS) -> bool:
    """Some normal Sylow subgroup whose quotient again has a tower."""
    if G.order == 1:
        return True
    for p, _ in prime_factors(G.order):
        syl = sylow(G, p, limits)
        if is_normal(G, syl, limits):
            if has_sylow_tower(quotient(G, syl, limits).image, limits):
                return True
    return False
