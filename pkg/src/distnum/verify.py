"""The theorem-verification suite behind ``distnum verify``.

Each check re-derives a published-style fact from scratch (exact numbers for
the named fixtures, property sweeps over random actions and trees, oracle
equivalence for the solver) and reports pass/fail per item.  The defaults
are the acceptance-grade parameters; the whole suite runs in a few minutes.
"""

from __future__ import annotations

import heapq
import itertools
import math
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from . import documents
from .catalog import (
    all_s3_homomorphism_actions,
    conjugacy_class_points,
    conjugation_action,
    cycle_type,
    cyclic_group,
    natural_action,
    s4_case_analysis,
    s4_inverse_pair_action,
    standard_actions,
    symmetric_group,
    translation_action,
    trivial_action,
    verify_full_orbit_characterization,
)
from .construction import (
    extract_witness_chain,
    run_construction,
    verify_lower_bound,
)
from .graphs import (
    TREE_ELEMENT_CAP,
    Graph,
    check_complete_graph_characterization,
    graph_action,
    graph_distinguishing_number,
    make_complete,
    make_cycle,
    make_empty,
    make_figure2_graphs,
    make_figure4_graph,
    make_figure7_tree,
    make_star_path_tree,
    tree_distinguishing_labelling,
)
from .labelling import (
    Labelling,
    brute_force_distinguishing_number,
    combine_orbit_labellings,
    exact_distinguishing_number,
    factorial_bound,
    is_distinguishing,
    relatively_prime_orbit_labelling,
)
from .perms import (
    GroupAction,
    Perm,
    action_from_element_map,
    enumerate_group,
    orbit_partition,
    pointwise_stabilizer,
    restrict_action,
)

__all__ = ["CheckResult", "CHECKS", "available_checks", "run_checks"]

_CONSTRUCTION_SEED = 0x5EED01
_ORACLE_SEED = 0x5EED02
_TREE_SEED = 0x5EED03
_GRAPH_SEED = 0x5EED04


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


# ---------------------------------------------------------------------------
# random instance generators (seeded, deterministic)


@lru_cache(maxsize=None)
def _sym(m: int):
    return symmetric_group(m)


def _random_subgroup(rng: random.Random, max_degree: int):
    m = rng.randint(2, max_degree)
    sym = _sym(m)
    gens = [sym.elements[rng.randrange(sym.order)] for _ in range(rng.randint(1, 2))]
    return enumerate_group(m, gens)


def _coset_action(group, sub) -> GroupAction:
    """Left multiplication on the left cosets of ``sub`` in ``group``."""
    index = {g.image: i for i, g in enumerate(group.elements)}
    coset_of: dict[int, int] = {}
    reps: list[int] = []
    for i, g in enumerate(group.elements):
        if i in coset_of:
            continue
        cid = len(reps)
        reps.append(i)
        for h in sub.elements:
            coset_of[index[(g * h).image]] = cid

    def image_of(g: Perm) -> Perm:
        return Perm(tuple(coset_of[index[(g * group.elements[r]).image]] for r in reps))

    return action_from_element_map(group, len(reps), image_of)


def _direct_sum(actions: Sequence[GroupAction]) -> GroupAction:
    group = actions[0].group
    total = sum(a.domain_size for a in actions)

    def image_of(g: Perm) -> Perm:
        img: list[int] = []
        offset = 0
        for a in actions:
            p = a.image_of(g)
            img.extend(offset + p.image[x] for x in range(a.domain_size))
            offset += a.domain_size
        return Perm(tuple(img))

    return action_from_element_map(group, total, image_of)


def random_action(rng: random.Random, max_degree: int = 6, max_domain: int = 10) -> GroupAction:
    """A random subgroup of a small symmetric group acting on few points.

    The domain is a disjoint union of coset actions over randomly generated
    subgroups, so the sample mixes transitive, intransitive, faithful and
    unfaithful actions.
    """
    group = _random_subgroup(rng, max_degree)
    parts: list[GroupAction] = []
    total = 0
    for _ in range(rng.randint(1, 3)):
        for _attempt in range(8):
            gens = [group.elements[rng.randrange(group.order)] for _ in range(rng.randint(0, 2))]
            sub = enumerate_group(group.degree, gens)
            size = group.order // sub.order
            if total + size <= max_domain:
                parts.append(_coset_action(group, sub))
                total += size
                break
    if not parts:
        parts.append(trivial_action(group, 1))
    return _direct_sum(parts)


def _tree_from_pruefer(seq: Sequence[int], n: int) -> Graph:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, edges)


def random_tree(rng: random.Random, min_vertices: int = 11, max_vertices: int = 12) -> Graph:
    """A uniform labelled tree; degrees above 9 are resampled (group-size cap)."""
    n = rng.randint(min_vertices, max_vertices)
    while True:
        seq = [rng.randrange(n) for _ in range(n - 2)]
        tree = _tree_from_pruefer(seq, n)
        if tree.max_degree() <= 9:
            return tree


def free_trees(n: int) -> list[Graph]:
    """All trees on n vertices up to isomorphism."""
    if n == 1:
        return [Graph(1, [])]
    if n == 2:
        return [Graph(2, [(0, 1)])]
    import networkx as nx

    return [Graph(n, [tuple(e) for e in t.edges()]) for t in nx.nonisomorphic_trees(n)]


def _random_graph(rng: random.Random, n: int) -> Graph:
    p = rng.uniform(0.2, 0.8)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# checks


def check_cycles() -> list[CheckResult]:
    """Cycle graphs need three labels up to five vertices and two beyond."""
    out = []
    for n in range(3, 13):
        want = 3 if n <= 5 else 2
        got, _ = graph_distinguishing_number(make_cycle(n))
        out.append(CheckResult(f"cycles:c{n}", got == want, f"D(C_{n}) = {got}, expected {want}"))
    return out


def check_figure2() -> list[CheckResult]:
    """Three graphs with the same order-72 automorphism group and numbers 4, 3, 2."""
    out = []
    for i, (graph, want) in enumerate(zip(make_figure2_graphs(), (4, 3, 2)), start=1):
        aut_order = graph_action(graph, vertex_limit=14).group.order
        number, _ = graph_distinguishing_number(graph, vertex_limit=14)
        out.append(
            CheckResult(
                f"figure2:g{i}",
                aut_order == 72 and number == want,
                f"|Aut| = {aut_order} (want 72), D = {number} (want {want})",
            )
        )
    return out


def _cycle_type_count(n: int, t: tuple[int, ...]) -> int:
    counts: dict[int, int] = {}
    for part in t:
        counts[part] = counts.get(part, 0) + 1
    denom = 1
    for j, mj in counts.items():
        denom *= (j**mj) * math.factorial(mj)
    return math.factorial(n) // denom


def check_conjugation() -> list[CheckResult]:
    """Symmetric groups on themselves by conjugation: two labels suffice.

    Exact search confirms D = 2 for n = 3, 4; for n = 5, 6 the two-label
    witness implied by the coprime-stabilizer argument is verified directly.
    Class sizes are checked against cycle-type counting throughout.
    """
    out = []
    for n in (3, 4, 5, 6):
        action = conjugation_action(n)
        part = orbit_partition(action)
        sizes = {}
        for block in part.blocks:
            sizes[cycle_type(action.group.elements[block[0]])] = len(block)
        counting_ok = sum(part.sizes()) == math.factorial(n) and all(
            _cycle_type_count(n, t) == size for t, size in sizes.items()
        )
        out.append(
            CheckResult(
                f"conjugation:s{n}-classes",
                counting_ok,
                f"{len(part.blocks)} classes, sizes match cycle-type counting",
            )
        )
        long_pt = conjugacy_class_points(action, (n,))[0]
        near_pt = conjugacy_class_points(action, (1, n - 1))[0]
        long_orbit = part.block_of(long_pt)
        near_orbit = part.block_of(near_pt)
        long_stab = pointwise_stabilizer(action, [long_pt]).order
        near_stab = pointwise_stabilizer(action, [near_pt]).order
        formulas_ok = (
            len(long_orbit) == math.factorial(n - 1)
            and len(near_orbit) == n * math.factorial(n - 2)
            and long_stab == n
            and near_stab == n - 1
        )
        out.append(
            CheckResult(
                f"conjugation:s{n}-orbit-sizes",
                formulas_ok,
                f"n-cycles: {len(long_orbit)}/stab {long_stab}; near-cycles: {len(near_orbit)}/stab {near_stab}",
            )
        )
        if n <= 4:
            number = exact_distinguishing_number(action).number
            out.append(CheckResult(f"conjugation:s{n}-exact", number == 2, f"D = {number}, expected 2"))
        else:
            phi = relatively_prime_orbit_labelling(action, long_orbit, near_orbit)
            nontrivial = not action.is_trivial
            out.append(
                CheckResult(
                    f"conjugation:s{n}-two-labels",
                    nontrivial and phi.label_count == 2,
                    "two-label witness verified on a nontrivial action",
                )
            )
    return out


# The six 4-cycles of S_4 with the labels drawn in the inverse-pair figure.
_FIGURE5_LABELS = {
    (1, 2, 3, 0): 2,
    (3, 0, 1, 2): 1,
    (1, 3, 0, 2): 3,
    (2, 0, 3, 1): 2,
    (2, 3, 1, 0): 1,
    (3, 2, 0, 1): 3,
}


def figure5_labelling(action: GroupAction) -> Labelling:
    conj = conjugation_action(4)
    points = conjugacy_class_points(conj, (4,))
    assert action.domain_size == len(points)
    labels = tuple(_FIGURE5_LABELS[conj.group.elements[p].image] for p in points)
    return Labelling(labels, 3)


def check_s4() -> list[CheckResult]:
    """Faithful S_4 actions realize distinguishing numbers 2, 3 and 4."""
    out = []
    report = s4_case_analysis()
    out.append(
        CheckResult(
            "s4:numbers",
            report.numbers == (1, 2, 3, 4),
            f"witness numbers {report.numbers}, expected (1, 2, 3, 4)",
        )
    )
    out.append(
        CheckResult(
            "s4:faithful",
            report.faithful_numbers == frozenset({2, 3, 4}),
            f"faithful witnesses realize {sorted(report.faithful_numbers)}",
        )
    )
    bound = factorial_bound(24)
    out.append(
        CheckResult(
            "s4:factorial-bound",
            bound == 4 and all(x <= bound for x in report.numbers),
            f"all numbers within the bound {bound}",
        )
    )
    action = s4_inverse_pair_action()
    out.append(CheckResult("s4:inverse-pairs-faithful", action.is_faithful, "kernel is trivial"))
    cert = is_distinguishing(action, figure5_labelling(action))
    out.append(CheckResult("s4:figure5-labelling", cert.distinguishing, "drawn 3-labelling distinguishes"))
    two_label_failures = sum(
        1
        for labels in itertools.product((1, 2), repeat=6)
        if is_distinguishing(action, Labelling(labels, 2)).distinguishing
    )
    out.append(
        CheckResult(
            "s4:no-two-labelling",
            two_label_failures == 0,
            f"all {2**6} two-labellings fail ({two_label_failures} unexpected successes)",
        )
    )
    return out


def check_translation() -> list[CheckResult]:
    """Groups on themselves by left multiplication need exactly two labels."""
    out = []
    cases = [
        ("z2", cyclic_group(2)),
        ("z4", cyclic_group(4)),
        ("s3", symmetric_group(3)),
        ("s4", symmetric_group(4)),
    ]
    for name, group in cases:
        action = translation_action(group)
        number = exact_distinguishing_number(action).number
        single = Labelling(tuple(2 if i == 0 else 1 for i in range(group.order)), 2)
        marked = is_distinguishing(action, single).distinguishing
        out.append(
            CheckResult(
                f"translation:{name}",
                number == 2 and marked,
                f"D = {number} and the one-marked-element witness verifies",
            )
        )
    degenerate = translation_action(enumerate_group(1, []))
    number = exact_distinguishing_number(degenerate).number
    out.append(CheckResult("translation:trivial-group", number == 1, f"trivial group needs {number} label"))
    return out


def check_trivial_action() -> list[CheckResult]:
    """One label suffices exactly for actions whose kernel is everything."""
    out = []
    bad = []
    for entry in standard_actions():
        number = exact_distinguishing_number(entry.action).number
        if (number == 1) != entry.action.is_trivial:
            bad.append(entry.name)
    for extra, action in [
        ("one-point", trivial_action(symmetric_group(4), 1)),
        ("five-points", trivial_action(symmetric_group(3), 5)),
    ]:
        if exact_distinguishing_number(action).number != 1:
            bad.append(extra)
    out.append(
        CheckResult(
            "trivial-action:iff",
            not bad,
            "D = 1 exactly on trivial actions" if not bad else f"failed on {bad}",
        )
    )
    return out


def check_orbit_combine() -> list[CheckResult]:
    """Gluing per-orbit labellings that each distinguish their part."""
    out = []
    action = conjugation_action(3)
    part = orbit_partition(action)
    transpositions = part.block_of(1)
    rest = [x for x in range(6) if x not in transpositions]
    phi1 = {x: i + 1 for i, x in enumerate(transpositions)}
    phi2 = {x: 1 for x in rest}
    phi2[2] = 2  # mark one 3-cycle
    glued = combine_orbit_labellings(action, transpositions, phi1, phi2)
    out.append(
        CheckResult(
            "orbit-combine:s3-conjugation",
            glued.label_count == 3,
            f"glued labelling distinguishes with {glued.label_count} labels",
        )
    )
    padded = natural_action(4, 1)
    singleton = (4,)
    phi1 = {4: 1}
    phi2 = {x: x + 1 for x in range(4)}
    glued = combine_orbit_labellings(padded, singleton, phi1, phi2)
    out.append(
        CheckResult(
            "orbit-combine:singleton",
            glued.label_count == 4,
            "singleton orbit glued onto an all-distinct labelling distinguishes",
        )
    )
    return out


def check_relatively_prime() -> list[CheckResult]:
    """Two orbits with coprime stabilizer orders force a two-label witness."""
    out = []
    for n in (3, 4):
        action = conjugation_action(n)
        part = orbit_partition(action)
        long_orbit = part.block_of(conjugacy_class_points(action, (n,))[0])
        near_orbit = part.block_of(conjugacy_class_points(action, (1, n - 1))[0])
        phi = relatively_prime_orbit_labelling(action, long_orbit, near_orbit)
        ok = phi.label_count == 2
        if n == 3:
            ok = ok and phi.labels == (1, 2, 2, 1, 1, 1)  # the drawn labelling
        out.append(
            CheckResult(
                f"relatively-prime:s{n}",
                ok,
                "coprime-orbit witness verified",
            )
        )
    return out


def _named_graph_actions() -> list[tuple[str, GroupAction]]:
    out = []
    for n in range(3, 13):
        out.append((f"c{n}", graph_action(make_cycle(n))))
    for n in (4, 5):
        out.append((f"k{n}", graph_action(make_complete(n))))
    for i, graph in enumerate(make_figure2_graphs(), start=1):
        out.append((f"figure2-g{i}", graph_action(graph, vertex_limit=14)))
    out.append(("figure4", graph_action(make_figure4_graph())))
    out.append(("figure7", graph_action(make_figure7_tree())))
    return out


def check_orbit_stabilizer() -> list[CheckResult]:
    """Order = orbit size times stabilizer order, at every point of every action."""
    bad = []
    actions = [(e.name, e.action) for e in standard_actions()] + _named_graph_actions()
    for name, action in actions:
        action.validate()
        order = action.group.order
        part = orbit_partition(action)
        for x in range(action.domain_size):
            stab = pointwise_stabilizer(action, [x])
            if order != len(part.block_of(x)) * stab.order:
                bad.append((name, x))
        if order % max(action.kernel().order, 1) != 0:
            bad.append((name, "kernel"))
    return [
        CheckResult(
            "orbit-stabilizer:sweep",
            not bad,
            f"verified over {len(actions)} actions" if not bad else f"failures: {bad[:5]}",
        )
    ]


def check_factorial_bound() -> list[CheckResult]:
    cases = {1: 1, 2: 2, 6: 3, 7: 4, 24: 4, 25: 5, 120: 5, 720: 6, 721: 7}
    ok = all(factorial_bound(order) == want for order, want in cases.items())
    tight = all(
        math.factorial(factorial_bound(order)) >= order
        and (factorial_bound(order) == 1 or math.factorial(factorial_bound(order) - 1) < order)
        for order in range(1, 200)
    )
    return [CheckResult("factorial-bound:least-k", ok and tight, "least k with k! >= order on 1..199")]


def _construction_cases(random_count: int, seed: int) -> list[tuple[str, GroupAction]]:
    cases = [(e.name, e.action) for e in standard_actions()] + _named_graph_actions()
    rng = random.Random(seed)
    cases += [(f"random-{i}", random_action(rng)) for i in range(random_count)]
    return cases


def check_construction(random_count: int = 200, seed: int = _CONSTRUCTION_SEED) -> list[CheckResult]:
    """The recursive labelling distinguishes, stays within the factorial
    bound, and its witness chain certifies the order inequality, on every
    fixture and on a batch of random actions."""
    bad = []
    orbit_bad = []
    cases = _construction_cases(random_count, seed)
    for name, action in cases:
        phi, trace = run_construction(action)
        trace.validate()
        order = action.group.order
        chain = extract_witness_chain(trace)
        report = verify_lower_bound(trace, chain)
        chain_ok = len(chain) == (0 if trace.label_count == 1 else trace.label_count)
        # k labels force k! <= |G| (hence k within the factorial bound)
        factorial_ok = math.factorial(phi.label_count) <= order or phi.label_count == 1
        if not (phi.label_count <= factorial_bound(order) and factorial_ok and chain_ok and report.ok):
            bad.append(name)
        for block in orbit_partition(action).blocks:
            restricted, _ = restrict_action(action, block)
            orbit_phi, _ = run_construction(restricted)
            if orbit_phi.label_count > factorial_bound(order):
                orbit_bad.append((name, block[0]))
    return [
        CheckResult(
            "construction:properties",
            not bad,
            f"trace, chain and bound product verified on {len(cases)} actions"
            if not bad
            else f"failures: {bad[:5]}",
        ),
        CheckResult(
            "construction:per-orbit-bound",
            not orbit_bad,
            "single-orbit restrictions stay within the factorial bound"
            if not orbit_bad
            else f"failures: {orbit_bad[:5]}",
        ),
    ]


def _oracle_cases(random_count: int, seed: int) -> list[tuple[str, GroupAction]]:
    cases: list[tuple[str, GroupAction]] = []
    for entry in standard_actions():
        if entry.action.domain_size <= 8 and entry.action.group.order <= 120:
            cases.append((entry.name, entry.action))
    cases.append(("natural-s5-padded", natural_action(5, 3)))
    for name, action in _named_graph_actions():
        if action.domain_size <= 8 and action.group.order <= 120:
            cases.append((name, action))
    rng = random.Random(seed)
    cases += [(f"random-{i}", random_action(rng, max_degree=5, max_domain=8)) for i in range(random_count)]
    return cases


def check_oracle(random_count: int = 100, seed: int = _ORACLE_SEED) -> list[CheckResult]:
    """Exact solver equals the unpruned brute-force oracle on small actions."""
    bad = []
    cases = _oracle_cases(random_count, seed)
    for name, action in cases:
        fast = exact_distinguishing_number(action).number
        slow = brute_force_distinguishing_number(action)
        if fast != slow:
            bad.append((name, fast, slow))
    return [
        CheckResult(
            "oracle:equivalence",
            not bad,
            f"solver matches brute force on {len(cases)} actions" if not bad else f"mismatches: {bad[:5]}",
        )
    ]


def check_full_orbit() -> list[CheckResult]:
    """Order-n! actions have number n exactly when one orbit carries all
    permutations of n points and everything else is fixed; exhausted over
    all S_3 actions on up to five points."""
    total = 0
    holds = 0
    bad = []
    for m in range(1, 6):
        for action in all_s3_homomorphism_actions(m):
            chk = verify_full_orbit_characterization(action)
            total += 1
            if chk.verdict == "violated" or (chk.dist_number == 3) != chk.structure_present:
                bad.append((m, chk.verdict, chk.dist_number))
            if chk.verdict == "holds":
                holds += 1
    detail = f"{total} homomorphisms checked, {holds} with the maximal number"
    return [CheckResult("full-orbit:s3-homomorphisms", not bad, detail if not bad else f"failures: {bad[:5]}")]


def _tree_ok(tree: Graph) -> bool:
    n = tree.vertex_count
    bound = 1 if n == 1 else max(tree.max_degree(), 2)
    number, _ = graph_distinguishing_number(tree, element_cap=TREE_ELEMENT_CAP, vertex_limit=n)
    phi = tree_distinguishing_labelling(tree)
    return number <= bound and phi.label_count <= bound


def check_trees(max_exhaustive: int = 10, random_count: int = 100, seed: int = _TREE_SEED) -> list[CheckResult]:
    """Trees are distinguished within their maximum degree.

    Exhaustive over all free trees up to ``max_exhaustive`` vertices plus a
    random sample up to 12; the star-with-paths family shows the bound is
    sharp.
    """
    out = []
    bad = []
    count = 0
    for n in range(1, max_exhaustive + 1):
        for i, tree in enumerate(free_trees(n)):
            count += 1
            if not _tree_ok(tree):
                bad.append(f"free-{n}-{i}")
    out.append(
        CheckResult(
            "trees:exhaustive",
            not bad,
            f"{count} free trees on <= {max_exhaustive} vertices" if not bad else f"failures: {bad[:5]}",
        )
    )
    rng = random.Random(seed)
    bad = []
    for i in range(random_count):
        if not _tree_ok(random_tree(rng)):
            bad.append(i)
    out.append(
        CheckResult(
            "trees:random",
            not bad,
            f"{random_count} random trees on <= 12 vertices" if not bad else f"failures: {bad[:5]}",
        )
    )
    for i in (2, 3, 4):
        tree = make_star_path_tree(i, (2, 3))
        number, _ = graph_distinguishing_number(tree, vertex_limit=tree.vertex_count)
        out.append(
            CheckResult(f"trees:star-path-{i}", number == i, f"D = {number}, expected {i} (sharpness)")
        )
    figure7 = make_figure7_tree()
    number, _ = graph_distinguishing_number(figure7, vertex_limit=figure7.vertex_count)
    phi = tree_distinguishing_labelling(figure7)
    out.append(
        CheckResult(
            "trees:figure7",
            number == 3 and phi.label_count <= 5,
            f"D = {number} (want 3), constructive labelling uses {phi.label_count} <= 5 labels",
        )
    )
    return out


def check_complete_graph(random_count: int = 40, seed: int = _GRAPH_SEED) -> list[CheckResult]:
    """Graphs of maximal number: one orbit is complete or empty, the rest fixed."""
    out = []
    bad = []
    for n in range(2, 6):
        complete = make_complete(n)
        plus_isolated = Graph(n + 1, complete.edge_list())
        for name, graph in [
            (f"k{n}", complete),
            (f"k{n}+isolated", plus_isolated),
            (f"empty{n}", make_empty(n)),
        ]:
            chk = check_complete_graph_characterization(graph)
            if chk.verdict != "holds":
                bad.append((name, chk.verdict, chk.detail))
    out.append(
        CheckResult(
            "complete-graph:named",
            not bad,
            "complete and empty orbits plus isolated vertices all hold" if not bad else f"failures: {bad[:3]}",
        )
    )
    rng = random.Random(seed)
    violations = []
    hypothesis_met = 0
    for i in range(random_count):
        graph = _random_graph(rng, rng.randint(2, 8))
        chk = check_complete_graph_characterization(graph)
        if chk.verdict == "violated":
            violations.append(i)
        elif chk.verdict == "holds":
            hypothesis_met += 1
    out.append(
        CheckResult(
            "complete-graph:random",
            not violations,
            f"{random_count} random graphs, {hypothesis_met} met the hypothesis, none violated"
            if not violations
            else f"violations at samples {violations}",
        )
    )
    return out


def check_fixtures() -> list[CheckResult]:
    """Regressions for the drawn fixtures plus registry round-trips."""
    out = []
    c5_phi = Labelling((1, 2, 2, 3, 1), 3)
    c5_ok = is_distinguishing(graph_action(make_cycle(5)), c5_phi).distinguishing
    c6_phi = Labelling((1, 2, 1, 1, 2, 2), 2)
    c6_ok = is_distinguishing(graph_action(make_cycle(6)), c6_phi).distinguishing
    out.append(CheckResult("fixtures:cycle-labellings", c5_ok and c6_ok, "drawn C5/C6 labellings distinguish"))

    conj3 = conjugation_action(3)
    drawn = Labelling((1, 2, 2, 1, 1, 1), 2)  # marks the first transposition and 3-cycle
    cert = is_distinguishing(conj3, drawn)
    out.append(CheckResult("fixtures:s3-conjugation-labelling", cert.distinguishing, "drawn 2-labelling distinguishes"))

    action = graph_action(make_figure4_graph())
    phi, trace = run_construction(action)
    chain = extract_witness_chain(trace)
    report = verify_lower_bound(trace, chain)
    ok = trace.iteration_count == 3 and phi.label_count == 4 and report.ok
    out.append(
        CheckResult(
            "fixtures:figure4-construction",
            ok,
            f"{trace.iteration_count} rounds, {phi.label_count} labels, product {report.product} <= {report.group_order}",
        )
    )

    stable = True
    parse_ok = True
    for name in documents.fixture_names():
        kind, doc = documents.build_fixture(name)
        _, again = documents.build_fixture(name)
        if doc != again:
            stable = False
        try:
            if kind == "action":
                documents.parse_action_document(doc)
            else:
                documents.parse_graph_document(doc)
        except documents.DocumentError:
            parse_ok = False
    out.append(
        CheckResult(
            "fixtures:registry",
            stable and parse_ok,
            f"{len(documents.fixture_names())} fixtures build deterministically and re-parse",
        )
    )
    return out


CHECKS: dict[str, Callable[[], list[CheckResult]]] = {
    "orbit-stabilizer": check_orbit_stabilizer,
    "trivial-action": check_trivial_action,
    "translation": check_translation,
    "orbit-combine": check_orbit_combine,
    "relatively-prime": check_relatively_prime,
    "conjugation": check_conjugation,
    "factorial-bound": check_factorial_bound,
    "construction": check_construction,
    "oracle": check_oracle,
    "full-orbit": check_full_orbit,
    "s4": check_s4,
    "cycles": check_cycles,
    "figure2": check_figure2,
    "trees": check_trees,
    "complete-graph": check_complete_graph,
    "fixtures": check_fixtures,
}


def available_checks() -> tuple[str, ...]:
    return tuple(CHECKS)


def run_checks(names: Iterable[str]) -> list[CheckResult]:
    results = []
    for name in names:
        results.extend(CHECKS[name]())
    return results
