"""Statement verifiers: evaluate hypotheses and conclusions on a concrete
group and produce a structured report.

A report FAILs exactly when every hypothesis holds and some evaluated
conclusion does not.  Unmet hypotheses or fully gated-out conclusions give a
vacuous verdict; vacuity is never counted as evidence.  Conclusions carry an
`evaluated` flag so that per-part gates (which are conditions of the
statement itself, not of the instance) can switch parts off without
pretending they passed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import ResourceLimitError
from .graphs import (SigmaGraph, build_hall, build_hawkes, build_vm, graphs_equal,
                     has_circuit, has_loop, isolated_vertices, is_subgraph, union,
                     weak_components)
from .group import (DEFAULT_LIMITS, EngineLimits, PermGroup, Subgroup,
                    core_series_subgroup, maximal_subgroups, subgroup,
                    two_generated_subgroups)
from .perm import Permutation
from .predicates import (is_pi_closed, is_schmidt, is_sigma_dispersive,
                         is_sigma_nilpotent, is_sigma_soluble, sigma_length)
from .sigma import (PiSet, SigmaPartition, pi_part, sigma_coprime,
                    sigma_of_group)
from .zoo import cyclic, direct_product, symmetric


@dataclass(frozen=True)
class CheckResult:
    name: str
    holds: bool
    witness: str = ""
    evaluated: bool = True  # False: gated out, recorded for the record only


@dataclass(frozen=True)
class VerificationReport:
    statement_id: str
    group_tag: str
    sigma: SigmaPartition
    hypotheses: tuple[CheckResult, ...]
    conclusions: tuple[CheckResult, ...]
    verdict: str  # pass | vacuous | FAIL

    def to_json(self) -> str:
        payload = {
            "statement": self.statement_id,
            "group": self.group_tag,
            "sigma": self.sigma.to_json(),
            "hypotheses": [_check_json(c) for c in self.hypotheses],
            "conclusions": [_check_json(c) for c in self.conclusions],
            "verdict": self.verdict,
        }
        return json.dumps(payload, sort_keys=True)


def _check_json(c: CheckResult) -> dict:
    return {"name": c.name, "holds": c.holds, "witness": c.witness,
            "evaluated": c.evaluated}


def make_report(statement_id: str, group_tag: str, sigma: SigmaPartition,
                hypotheses, conclusions) -> VerificationReport:
    hypotheses = tuple(hypotheses)
    conclusions = tuple(conclusions)
    live = [c for c in conclusions if c.evaluated]
    if not all(h.holds for h in hypotheses if h.evaluated) or not live:
        verdict = "vacuous"
    elif all(c.holds for c in live):
        verdict = "pass"
    else:
        verdict = "FAIL"
    return VerificationReport(statement_id, group_tag, sigma, hypotheses,
                              conclusions, verdict)


def _edge_text(graph: SigmaGraph) -> str:
    return "{" + ", ".join(f"({a.tag},{b.tag})" for a, b in graph.sorted_edges()) + "}"


# ---------------------------------------------------------------------------
# graph-chain statement


def verify_prop_1_2(G: PermGroup, sigma: SigmaPartition,
                    limits: EngineLimits = DEFAULT_LIMITS,
                    group_tag: str = "G") -> VerificationReport:
    """Inclusion chain hall <= vm <= hawkes, and: all three equal <=> hawkes
    loop-free <=> soluble with every class length at most one."""
    hall = build_hall(G, sigma, limits, group_tag)
    vm = build_vm(G, sigma, limits, group_tag)
    hawkes = build_hawkes(G, sigma, limits, group_tag)
    conclusions = [
        CheckResult("hall-inside-vm", is_subgraph(hall, vm),
                    f"hall={_edge_text(hall)} vm={_edge_text(vm)}"),
        CheckResult("vm-inside-hawkes", is_subgraph(vm, hawkes),
                    f"vm={_edge_text(vm)} hawkes={_edge_text(hawkes)}"),
    ]
    no_loops = not has_loop(hawkes)
    soluble = is_sigma_soluble(G, sigma, limits)
    short = soluble and all(
        sigma_length(G, cls, limits).length <= 1 for cls in sigma_of_group(G, sigma))
    conclusions.append(CheckResult(
        "no-loops-iff-soluble-short", no_loops == short,
        f"no_loops={no_loops} soluble={soluble} all_lengths_le_1={short}"))
    all_equal = graphs_equal(hall, vm) and graphs_equal(vm, hawkes)
    conclusions.append(CheckResult(
        "equality-iff-no-loops", all_equal == no_loops,
        f"all_equal={all_equal} no_loops={no_loops}"))
    return make_report("prop-1.2", group_tag, sigma, (), conclusions)


def verify_thm_1_4(G: PermGroup, sigma: SigmaPartition,
                   limits: EngineLimits = DEFAULT_LIMITS,
                   group_tag: str = "G") -> VerificationReport:
    """Dispersive <=> hawkes circuit-free <=> soluble with circuit-free vm."""
    s1 = is_sigma_dispersive(G, sigma, limits)
    s2 = not has_circuit(build_hawkes(G, sigma, limits, group_tag))
    s3 = (is_sigma_soluble(G, sigma, limits)
          and not has_circuit(build_vm(G, sigma, limits, group_tag)))
    witness = f"dispersive={s1} hawkes_acyclic={s2} soluble_and_vm_acyclic={s3}"
    conclusions = [
        CheckResult("dispersive-iff-hawkes-acyclic", s1 == s2, witness),
        CheckResult("hawkes-acyclic-iff-soluble-vm-acyclic", s2 == s3, witness),
    ]
    return make_report("thm-1.4", group_tag, sigma, (), conclusions)


def verify_thm_1_12(G: PermGroup, sigma: SigmaPartition,
                    limits: EngineLimits = DEFAULT_LIMITS,
                    group_tag: str = "G") -> VerificationReport:
    """Nilpotent for sigma <=> hawkes edgeless <=> vm edgeless <=> soluble
    with edgeless hall graph (per-vertex isolation)."""
    hawkes = build_hawkes(G, sigma, limits, group_tag)
    vm = build_vm(G, sigma, limits, group_tag)
    hall = build_hall(G, sigma, limits, group_tag)
    s1 = is_sigma_nilpotent(G, sigma, limits)
    s2 = isolated_vertices(hawkes) == hawkes.vertices
    s3 = isolated_vertices(vm) == vm.vertices
    s4 = (is_sigma_soluble(G, sigma, limits)
          and isolated_vertices(hall) == hall.vertices)
    witness = f"nilpotent={s1} hawkes_isolated={s2} vm_isolated={s3} soluble_hall_isolated={s4}"
    conclusions = [
        CheckResult("nilpotent-iff-hawkes-isolated", s1 == s2, witness),
        CheckResult("hawkes-iff-vm-isolated", s2 == s3, witness),
        CheckResult("vm-iff-soluble-hall-isolated", s3 == s4, witness),
    ]
    return make_report("thm-1.12", group_tag, sigma, (), conclusions)


# ---------------------------------------------------------------------------
# factorization statement


def _product_order(x: Subgroup, y: Subgroup) -> int:
    xs = x.element_set()
    ys = y.element_set()
    return len(xs) * len(ys) // len(xs & ys)


def _vm_or_empty(G: PermGroup, sigma, limits, tag) -> SigmaGraph:
    if G.is_trivial:
        return SigmaGraph("vm", tag, sigma, frozenset(), frozenset())
    return build_vm(G, sigma, limits, tag)


def _hawkes_or_empty(G: PermGroup, sigma, limits, tag) -> SigmaGraph:
    if G.is_trivial:
        return SigmaGraph("hawkes", tag, sigma, frozenset(), frozenset())
    return build_hawkes(G, sigma, limits, tag)


def verify_thm_1_7(G: PermGroup, A: Subgroup, B: Subgroup, C: Subgroup,
                   sigma: SigmaPartition, limits: EngineLimits = DEFAULT_LIMITS,
                   group_tag: str = "G") -> VerificationReport:
    """For a triple factorization by soluble-for-sigma subgroups: the vm
    graph of G is the union of the factors' vm graphs (when G itself is
    soluble for sigma), and likewise for hawkes under pairwise class-coprime
    indices."""
    ab, bc, ac = (_product_order(A, B), _product_order(B, C),
                  _product_order(A, C))
    hypotheses = [
        CheckResult("G=AB=BC=AC", ab == G.order and bc == G.order and ac == G.order,
                    f"|AB|={ab} |BC|={bc} |AC|={ac} |G|={G.order}"),
    ]
    for name, x in (("A", A), ("B", B), ("C", C)):
        hypotheses.append(CheckResult(
            f"{name}-sigma-soluble", is_sigma_soluble(x.group, sigma, limits),
            f"|{name}|={x.order}"))

    conclusions = []
    if is_sigma_soluble(G, sigma, limits):
        got = union(union(_vm_or_empty(A.group, sigma, limits, "A"),
                          _vm_or_empty(B.group, sigma, limits, "B")),
                    _vm_or_empty(C.group, sigma, limits, "C"))
        want = build_vm(G, sigma, limits, group_tag)
        conclusions.append(CheckResult(
            "vm-union-equality",
            got.edges == want.edges and got.vertices == want.vertices,
            f"union={_edge_text(got)} whole={_edge_text(want)}"))
    else:
        conclusions.append(CheckResult(
            "vm-union-equality", True, "gated out: G is not sigma-soluble",
            evaluated=False))
    ia, ib, ic = G.order // A.order, G.order // B.order, G.order // C.order
    coprime = (sigma_coprime(ia, ib, sigma) and sigma_coprime(ib, ic, sigma)
               and sigma_coprime(ia, ic, sigma))
    if coprime:
        got = union(union(_hawkes_or_empty(A.group, sigma, limits, "A"),
                          _hawkes_or_empty(B.group, sigma, limits, "B")),
                    _hawkes_or_empty(C.group, sigma, limits, "C"))
        want = build_hawkes(G, sigma, limits, group_tag)
        conclusions.append(CheckResult(
            "hawkes-union-equality",
            got.edges == want.edges and got.vertices == want.vertices,
            f"union={_edge_text(got)} whole={_edge_text(want)}"))
    else:
        conclusions.append(CheckResult(
            "hawkes-union-equality", True,
            f"gated out: indices {ia},{ib},{ic} are not pairwise class-coprime",
            evaluated=False))
    return make_report("thm-1.7", group_tag, sigma, hypotheses, conclusions)


@dataclass(frozen=True)
class FactorizationFixture:
    tag: str
    group: PermGroup
    a: Subgroup
    b: Subgroup
    c: Subgroup


def factorization_fixtures() -> tuple[FactorizationFixture, ...]:
    """Three shipped triple factorizations; the harness never searches for
    factorizations on its own."""
    s4 = symmetric(4)
    f1 = FactorizationFixture(
        "S4=S3.D4.A4", s4,
        subgroup(s4, [Permutation.from_cycles(4, [(0, 1, 2)]),
                      Permutation.from_cycles(4, [(0, 1)])]),
        subgroup(s4, [Permutation.from_cycles(4, [(0, 1, 2, 3)]),
                      Permutation.from_cycles(4, [(0, 2)])]),
        subgroup(s4, [Permutation.from_cycles(4, [(0, 1, 2)]),
                      Permutation.from_cycles(4, [(0, 1), (2, 3)])]))
    g2 = direct_product(symmetric(3), cyclic(5))
    c5 = Permutation.from_cycles(8, [(3, 4, 5, 6, 7)])
    f2 = FactorizationFixture(
        "S3xC5=S3.C15.C10", g2,
        subgroup(g2, [Permutation.from_cycles(8, [(0, 1, 2)]),
                      Permutation.from_cycles(8, [(0, 1)])]),
        subgroup(g2, [Permutation.from_cycles(8, [(0, 1, 2)]), c5]),
        subgroup(g2, [Permutation.from_cycles(8, [(0, 1)]), c5]))
    s3 = symmetric(3)
    whole = subgroup(s3, list(s3.generators))
    f3 = FactorizationFixture("S3=S3.S3.S3", s3, whole, whole, whole)
    return (f1, f2, f3)


# ---------------------------------------------------------------------------
# closure statements


def _pi_subset(classes, sigma: SigmaPartition) -> PiSet:
    return PiSet(frozenset(classes))


def verify_prop_1_9(G: PermGroup, sigma: SigmaPartition, pi: PiSet,
                    limits: EngineLimits = DEFAULT_LIMITS,
                    group_tag: str = "G") -> VerificationReport:
    """No edge from outside classes into pi-classes forces a normal Hall
    subgroup on the pi part.  Checked on hawkes always, and on vm when G is
    soluble for sigma."""
    vertices = sigma_of_group(G, sigma)
    pi1 = frozenset(c for c in vertices if c in pi)
    pi2 = vertices - pi1
    closed = None

    def closed_value() -> bool:
        nonlocal closed
        if closed is None:
            closed = is_pi_closed(G, _pi_subset(pi1, sigma), limits) if pi1 else True
        return closed

    conclusions = []
    hawkes = build_hawkes(G, sigma, limits, group_tag)
    blocked_h = sorted((a.tag, b.tag) for a, b in hawkes.edges
                       if a in pi2 and b in pi1)
    if not blocked_h:
        conclusions.append(CheckResult(
            "hawkes-edge-absence-implies-pi-closed", closed_value(),
            f"pi1={{{', '.join(sorted(c.tag for c in pi1))}}}"))
    else:
        conclusions.append(CheckResult(
            "hawkes-edge-absence-implies-pi-closed", True,
            f"gated out: edges into pi1 exist: {blocked_h}", evaluated=False))
    if is_sigma_soluble(G, sigma, limits):
        vm = build_vm(G, sigma, limits, group_tag)
        blocked_v = sorted((a.tag, b.tag) for a, b in vm.edges
                           if a in pi2 and b in pi1)
        if not blocked_v:
            conclusions.append(CheckResult(
                "vm-edge-absence-implies-pi-closed", closed_value(),
                f"pi1={{{', '.join(sorted(c.tag for c in pi1))}}}"))
        else:
            conclusions.append(CheckResult(
                "vm-edge-absence-implies-pi-closed", True,
                f"gated out: edges into pi1 exist: {blocked_v}", evaluated=False))
    else:
        conclusions.append(CheckResult(
            "vm-edge-absence-implies-pi-closed", True,
            "gated out: G is not sigma-soluble", evaluated=False))
    return make_report("prop-1.9", group_tag, sigma, (), conclusions)


def _maximals_pi_closed(G: PermGroup, pi: PiSet, limits) -> tuple[bool, str]:
    """Whether every maximal subgroup has a normal Hall pi-part.  Above the
    enumeration caps this is still refutable: the property passes to
    subgroups, so any non-closed proper subgroup convicts the maximal over
    it.  An unrefuted cap is re-raised; certification needs the lattice."""
    try:
        for m in maximal_subgroups(G, limits):
            if not is_pi_closed(m.group, pi, limits):
                return False, f"maximal subgroup of order {m.order} is not pi-closed"
        return True, ""
    except ResourceLimitError:
        for s in two_generated_subgroups(G, limits):
            if s.order < G.order and not is_pi_closed(s.group, pi, limits):
                return False, f"subgroup of order {s.order} is not pi-closed"
        raise


def verify_prop_1_11(sigma: SigmaPartition, pi: PiSet, G: PermGroup,
                     limits: EngineLimits = DEFAULT_LIMITS,
                     group_tag: str = "G") -> VerificationReport:
    """A soluble-for-sigma group that is minimally non-closed for pi (itself
    open, all maximal subgroups closed) is a Schmidt group closed for the
    complementary classes."""
    vertices = sigma_of_group(G, sigma)
    pi1 = frozenset(c for c in vertices if c in pi)
    hypotheses = [CheckResult("sigma-soluble", is_sigma_soluble(G, sigma, limits))]
    if not hypotheses[0].holds:
        hypotheses.append(CheckResult("not-pi-closed", True, "skipped",
                                      evaluated=False))
        hypotheses.append(CheckResult("maximals-pi-closed", True, "skipped",
                                      evaluated=False))
        return make_report("prop-1.11", group_tag, sigma, hypotheses,
                           [CheckResult("schmidt-and-complement-closed", True,
                                        "skipped", evaluated=False)])
    pi_set = _pi_subset(pi1, sigma) if pi1 else _pi_subset(frozenset(), sigma)
    open_for_pi = not is_pi_closed(G, pi_set, limits)
    hypotheses.append(CheckResult("not-pi-closed", open_for_pi,
                                  f"pi-part={pi_part(G.order, pi1)}"))
    if not open_for_pi:
        hypotheses.append(CheckResult("maximals-pi-closed", True, "skipped",
                                      evaluated=False))
        return make_report("prop-1.11", group_tag, sigma, hypotheses,
                           [CheckResult("schmidt-and-complement-closed", True,
                                        "skipped", evaluated=False)])
    maximals_closed, why = _maximals_pi_closed(G, pi_set, limits)
    hypotheses.append(CheckResult("maximals-pi-closed", maximals_closed, why))
    if not maximals_closed:
        return make_report("prop-1.11", group_tag, sigma, hypotheses,
                           [CheckResult("schmidt-and-complement-closed", True,
                                        "skipped", evaluated=False)])
    schmidt = is_schmidt(G, limits)
    complement = vertices - pi1
    closed = is_pi_closed(G, _pi_subset(complement, sigma) if complement
                          else _pi_subset(frozenset(), sigma), limits)
    conclusions = [CheckResult(
        "schmidt-and-complement-closed", schmidt and closed,
        f"schmidt={schmidt} complement_closed={closed}")]
    return make_report("prop-1.11", group_tag, sigma, hypotheses, conclusions)


# ---------------------------------------------------------------------------
# classical specializations used by the acceptance suite


def component_decomposition_holds(G: PermGroup,
                                  limits: EngineLimits = DEFAULT_LIMITS) -> bool:
    """Under the finest partition: with the vm components as prime blocks,
    G must be the direct product of its block cores (order product check and
    pairwise trivial intersections)."""
    if G.is_trivial:
        return True
    vm = build_vm(G, SigmaPartition(atomic=True), limits)
    blocks = []
    for comp in weak_components(vm):
        primes = sorted(p for cls, ps in vm.vertex_primes if cls in comp for p in ps)
        blocks.append(core_series_subgroup(G, primes, limits))
    product = 1
    for b in blocks:
        product *= b.order
    if product != G.order:
        return False
    for i, x in enumerate(blocks):
        for y in blocks[i + 1:]:
            if len(x.element_set() & y.element_set()) != 1:
                return False
    return True


# ---------------------------------------------------------------------------
# sweep driver


_PER_GROUP_STATEMENTS = ("1.2", "1.4", "1.12", "1.9", "1.11")
ALL_STATEMENTS = ("1.2", "1.4", "1.7", "1.9", "1.11", "1.12")


def _pi_subsets(vertices) -> list[frozenset]:
    classes = sorted(vertices, key=lambda c: c.sort_key)
    out = []
    for mask in range(1 << len(classes)):
        out.append(frozenset(classes[k] for k in range(len(classes))
                             if mask >> k & 1))
    out.sort(key=lambda s: (len(s), tuple(sorted(c.tag for c in s))))
    return out


def run_corpus_sweep(groups, partitions, statements=ALL_STATEMENTS,
                     limits: EngineLimits = DEFAULT_LIMITS):
    """Deterministic report stream over (group, partition, statement) and,
    for the factorization statement, the shipped fixtures per partition."""
    for tag, G in groups:
        for sigma in partitions:
            if "1.2" in statements:
                yield verify_prop_1_2(G, sigma, limits, tag)
            if "1.4" in statements:
                yield verify_thm_1_4(G, sigma, limits, tag)
            if "1.12" in statements:
                yield verify_thm_1_12(G, sigma, limits, tag)
            subsets = None
            if "1.9" in statements or "1.11" in statements:
                subsets = _pi_subsets(sigma_of_group(G, sigma))
            if "1.9" in statements:
                for s in subsets:
                    yield verify_prop_1_9(G, sigma, PiSet(s), limits, tag)
            if "1.11" in statements:
                for s in subsets:
                    yield verify_prop_1_11(sigma, PiSet(s), G, limits, tag)
    if "1.7" in statements:
        for sigma in partitions:
            for fx in factorization_fixtures():
                yield verify_thm_1_7(fx.group, fx.a, fx.b, fx.c, sigma, limits,
                                     fx.tag)
