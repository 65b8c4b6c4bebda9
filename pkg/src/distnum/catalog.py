"""Named group actions with known distinguishing numbers, and the structural
characterization of actions whose distinguishing number is maximal."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .labelling import exact_distinguishing_number, factorial_bound
from .perms import (
    DEFAULT_ELEMENT_CAP,
    GroupAction,
    Perm,
    PermGroup,
    PreconditionError,
    action_from_element_map,
    action_from_generator_images,
    enumerate_group,
    orbit_partition,
    restrict_action,
)

__all__ = [
    "NamedAction",
    "FullOrbitCheck",
    "S4CaseReport",
    "symmetric_group",
    "cyclic_group",
    "trivial_action",
    "translation_action",
    "conjugation_action",
    "natural_action",
    "s4_inverse_pair_action",
    "s4_inverse_pair_components",
    "cycle_type",
    "conjugacy_class_points",
    "full_orbit_blocks",
    "verify_full_orbit_characterization",
    "all_s3_homomorphism_actions",
    "s4_case_analysis",
    "standard_actions",
]


@dataclass(frozen=True)
class NamedAction:
    """A catalog entry: an action with its expected distinguishing number.

    ``expected_number`` is None when no value is pinned; expectations are
    enforced by the test suite, not at construction time.
    """

    name: str
    action: GroupAction
    expected_number: int | None
    description: str


def symmetric_group(n: int, element_cap: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    """S_n on points 0..n-1, generated by a transposition and an n-cycle."""
    if n < 1:
        raise PreconditionError("n must be at least 1")
    if n == 1:
        return enumerate_group(1, [], element_cap)
    gens = [Perm.from_cycles(n, [(0, 1)])]
    if n > 2:
        gens.append(Perm.from_cycles(n, [tuple(range(n))]))
    return enumerate_group(n, gens, element_cap)


def cyclic_group(n: int) -> PermGroup:
    if n < 1:
        raise PreconditionError("n must be at least 1")
    if n == 1:
        return enumerate_group(1, [])
    return enumerate_group(n, [Perm.from_cycles(n, [tuple(range(n))])])


def trivial_action(group: PermGroup, domain_size: int = 1) -> GroupAction:
    """Every element fixes every point."""
    identity = Perm.identity(domain_size)
    return action_from_element_map(group, domain_size, lambda g: identity)


def translation_action(group: PermGroup) -> GroupAction:
    """The group acting on its own elements by left multiplication.

    Free, hence two labels suffice (one marked element pins everything);
    degenerate for the trivial group, where the number is 1.
    """
    index = {g.image: i for i, g in enumerate(group.elements)}
    order = group.order

    def image_of(g: Perm) -> Perm:
        return Perm(tuple(index[(g * h).image] for h in group.elements))

    return action_from_element_map(group, order, image_of)


def conjugation_action(n: int, element_cap: int = DEFAULT_ELEMENT_CAP) -> GroupAction:
    """S_n acting on its own elements by conjugation; orbits are the
    conjugacy classes.

    Restricted to 3 <= n <= 6 (the domain has n! points).  The two class
    sizes used by the two-label argument are asserted: n-cycles number
    (n-1)!, and permutations with one fixed point and one (n-1)-cycle number
    n * (n-2)!.
    """
    if not 3 <= n <= 6:
        raise PreconditionError("conjugation self-action is supported for 3 <= n <= 6")
    group = symmetric_group(n, element_cap)
    index = {g.image: i for i, g in enumerate(group.elements)}

    def image_of(g: Perm) -> Perm:
        gi = ~g
        return Perm(tuple(index[(g * h * gi).image] for h in group.elements))

    action = action_from_element_map(group, group.order, image_of)
    sizes = _class_sizes_by_type(group)
    n_cycle_type = (n,)
    near_cycle_type = (1, n - 1)
    assert sizes[n_cycle_type] == math.factorial(n - 1)
    assert sizes[near_cycle_type] == n * math.factorial(n - 2)
    return action


def cycle_type(p: Perm) -> tuple[int, ...]:
    moved = sorted(len(c) for c in p.cycles())
    fixed = p.degree - sum(moved)
    return tuple([1] * fixed + moved)


def _class_sizes_by_type(group: PermGroup) -> dict[tuple[int, ...], int]:
    sizes: dict[tuple[int, ...], int] = {}
    for g in group.elements:
        t = cycle_type(g)
        sizes[t] = sizes.get(t, 0) + 1
    return sizes


def conjugacy_class_points(action: GroupAction, target_type: tuple[int, ...]) -> tuple[int, ...]:
    """Domain points of a conjugation self-action whose element has the given type."""
    return tuple(
        i for i, g in enumerate(action.group.elements) if cycle_type(g) == target_type
    )


def natural_action(n: int, fixed_points: int = 0) -> GroupAction:
    """S_n permuting n points, padded with extra fixed points.

    The distinguishing number is n: every point of the moved orbit needs its
    own label.
    """
    if n < 1 or fixed_points < 0:
        raise PreconditionError("need n >= 1 and a nonnegative number of fixed points")
    group = symmetric_group(n)
    m = n + fixed_points

    def image_of(g: Perm) -> Perm:
        return Perm(tuple(g.image) + tuple(range(n, m)))

    return action_from_element_map(group, m, image_of)


def s4_inverse_pair_action() -> GroupAction:
    """S_4 conjugating its six 4-cycles.

    The domain splits into three inverse pairs which every element permutes
    as blocks (conjugation preserves inverses); the action is faithful and
    its distinguishing number is 3.
    """
    conj = conjugation_action(4)
    points = conjugacy_class_points(conj, (4,))
    action, _ = restrict_action(conj, points)
    assert action.is_faithful, "the 4-cycle conjugation action must be faithful"
    components = s4_inverse_pair_components(action)
    for img in action.element_images:
        mapped = {frozenset(img.image[p] for p in pair) for pair in components}
        assert mapped == set(components), "inverse pairs must be permuted as blocks"
    return action


def s4_inverse_pair_components(action: GroupAction) -> tuple[frozenset[int], ...]:
    """The three inverse pairs of the 4-cycle domain, as point sets."""
    conj = conjugation_action(4)
    points = conjugacy_class_points(conj, (4,))
    cycles = [conj.group.elements[p] for p in points]
    position = {c.image: i for i, c in enumerate(cycles)}
    pairs = {frozenset((i, position[(~c).image])) for i, c in enumerate(cycles)}
    assert len(pairs) == 3
    return tuple(sorted(pairs, key=min))


def full_orbit_blocks(action: GroupAction, n: int) -> tuple[tuple[int, ...], ...]:
    """Orbits of exactly n points on which the action induces all n! permutations."""
    out = []
    for block in orbit_partition(action).blocks:
        if len(block) != n:
            continue
        position = {p: i for i, p in enumerate(block)}
        restrictions = {tuple(position[img.image[p]] for p in block) for img in action.element_images}
        if len(restrictions) == math.factorial(n):
            out.append(block)
    return tuple(out)


@dataclass(frozen=True)
class FullOrbitCheck:
    """Verdict for the structural characterization of maximal actions.

    For a group of order n!, the distinguishing number is n exactly when one
    orbit of n points carries all n! permutations and every other orbit is a
    single point.  ``holds`` certifies both directions on this action;
    ``violated`` flags a counterexample to either; ``hypothesis-not-met``
    covers group orders that are not n! (or n < 2), and actions where both
    the number and the structure fall short together.
    """

    verdict: str
    n: int | None
    dist_number: int | None
    structure_present: bool
    detail: str


def verify_full_orbit_characterization(action: GroupAction, k_max: int | None = None) -> FullOrbitCheck:
    order = action.group.order
    fact = 1
    n = 1
    while fact < order:
        n += 1
        fact *= n
    if fact != order or n < 2:
        return FullOrbitCheck(
            "hypothesis-not-met", None, None, False, f"group order {order} is not n! for any n >= 2"
        )
    result = exact_distinguishing_number(action, k_max)
    number = result.number
    part = orbit_partition(action)
    fulls = full_orbit_blocks(action, n)
    structure = len(fulls) == 1 and all(
        len(b) == 1 for b in part.blocks if b not in fulls
    )
    if number == n and structure:
        return FullOrbitCheck("holds", n, number, True, "maximal number with one full orbit plus fixed points")
    if number != n and structure:
        return FullOrbitCheck("violated", n, number, True, f"full orbit present but number is {number}")
    if number == n and not structure:
        # The characterization starts at n = 3: an involution acting on two
        # 2-point orbits already has number 2 without the orbit structure
        # (breaking it needs a second label either way).
        if n == 2:
            return FullOrbitCheck(
                "hypothesis-not-met", n, number, False, "two-label case is outside the characterization"
            )
        return FullOrbitCheck("violated", n, number, False, f"number is {n} but the orbit structure is absent")
    return FullOrbitCheck(
        "hypothesis-not-met", n, number, False, f"number {number} below {n}, structure absent (consistent)"
    )


def all_s3_homomorphism_actions(domain_size: int) -> list[GroupAction]:
    """Every action of S_3 on the given domain, one per homomorphism into Sym(domain).

    Enumerates images (a, b) of the generating transposition and 3-cycle and
    keeps the pairs satisfying the defining relations a^2 = b^3 = (ab)^2 = id;
    each surviving pair extends uniquely to a homomorphism, which is
    certified again while the action table is built.
    """
    if not 1 <= domain_size <= 5:
        raise PreconditionError("domain size is limited to 1..5")
    s3 = symmetric_group(3)
    gens = list(s3.generators)
    assert len(gens) == 2 and cycle_type(gens[0]) == (1, 2)
    sym = symmetric_group(domain_size)
    identity = Perm.identity(domain_size)
    involutions = [a for a in sym.elements if a * a == identity]
    order3 = [b for b in sym.elements if b * b * b == identity]
    actions = []
    for a in involutions:
        for b in order3:
            ab = a * b
            if ab * ab != identity:
                continue
            actions.append(
                action_from_generator_images(3, gens, domain_size, [a, b], element_cap=6)
            )
    return actions


@dataclass(frozen=True)
class S4CaseReport:
    """Distinguishing numbers of the four standard S_4 witnesses."""

    entries: tuple[tuple[str, int, bool], ...]  # (name, number, faithful)

    @property
    def numbers(self) -> tuple[int, ...]:
        return tuple(number for _, number, _ in self.entries)

    @property
    def faithful_numbers(self) -> frozenset[int]:
        return frozenset(number for _, number, faithful in self.entries if faithful)


def s4_case_analysis() -> S4CaseReport:
    """Realize every possible distinguishing number of an S_4 action.

    The one-point action, the translation action, the inverse-pair action
    and the natural action have numbers 1, 2, 3 and 4; the faithful three
    realize {2, 3, 4}.  All stay within the factorial bound for order 24.
    """
    s4 = symmetric_group(4)
    witnesses = [
        ("one-point", trivial_action(s4, 1)),
        ("translation", translation_action(s4)),
        ("inverse-pairs", s4_inverse_pair_action()),
        ("natural", natural_action(4)),
    ]
    bound = factorial_bound(s4.order)
    entries = []
    for name, action in witnesses:
        result = exact_distinguishing_number(action)
        assert result.number is not None and result.number <= bound
        entries.append((name, result.number, action.is_faithful))
    return S4CaseReport(tuple(entries))


def standard_actions() -> tuple[NamedAction, ...]:
    """The catalog used by the invariant sweeps and the CLI fixtures."""
    s3 = symmetric_group(3)
    s4 = symmetric_group(4)
    z2 = cyclic_group(2)
    z4 = cyclic_group(4)
    return (
        NamedAction("trivial", trivial_action(s4, 1), 1, "S_4 fixing a single point"),
        NamedAction("z2-translation", translation_action(z2), 2, "order-2 group on itself by left multiplication"),
        NamedAction("z4-translation", translation_action(z4), 2, "order-4 group on itself by left multiplication"),
        NamedAction("s3-translation", translation_action(s3), 2, "S_3 on itself by left multiplication"),
        NamedAction("s4-translation", translation_action(s4), 2, "S_4 on itself by left multiplication"),
        NamedAction("s3-conjugation", conjugation_action(3), 2, "S_3 on itself by conjugation"),
        NamedAction("s4-conjugation", conjugation_action(4), 2, "S_4 on itself by conjugation"),
        NamedAction("natural-s3", natural_action(3), 3, "S_3 permuting three points"),
        NamedAction("natural-s4", natural_action(4), 4, "S_4 permuting four points"),
        NamedAction("natural-s4-padded", natural_action(4, 3), 4, "S_4 permuting four points plus three fixed"),
        NamedAction("s4-inverse-pairs", s4_inverse_pair_action(), 3, "S_4 conjugating its six 4-cycles"),
    )
