"""Labellings of a group-acted set, the distinguishing test, and exact solvers.

A labelling distinguishes an action when the only group elements preserving
it are those acting trivially on the whole domain (the kernel).  The exact
solver searches canonical labellings only and is cross-checked against a
deliberately naive brute-force oracle.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from .perms import (
    GroupAction,
    Perm,
    PermGroup,
    PreconditionError,
    ResourceLimitError,
    orbit,
)

__all__ = [
    "Labelling",
    "DistinguishingCertificate",
    "DistinguishingNumberResult",
    "canonical_form",
    "is_preserved_by",
    "preserving_subgroup",
    "is_distinguishing",
    "factorial_bound",
    "exact_distinguishing_number",
    "brute_force_distinguishing_number",
    "distinguishes_subset",
    "combine_orbit_labellings",
    "relatively_prime_orbit_labelling",
]

# Upper bound on k^|X| for the unpruned oracle.
BRUTE_FORCE_GUARD = 10**8


@dataclass(frozen=True)
class Labelling:
    """A map from domain points to labels ``1..label_count``."""

    labels: tuple[int, ...]
    label_count: int

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if self.label_count < 1:
            raise PreconditionError("label_count must be at least 1")
        if not self.labels:
            raise PreconditionError("labelling must cover at least one point")
        for v in self.labels:
            if not isinstance(v, int) or not 1 <= v <= self.label_count:
                raise PreconditionError(f"label {v} outside 1..{self.label_count}")

    @classmethod
    def from_labels(cls, labels: Iterable[int]) -> "Labelling":
        labels = tuple(labels)
        if not labels:
            raise PreconditionError("labelling must cover at least one point")
        return cls(labels, max(labels))

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def used_labels(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.labels)))

    @property
    def is_canonical(self) -> bool:
        """Restricted-growth form with no unused trailing labels."""
        return self.labels == canonical_form(self.labels) and self.label_count == max(self.labels)

    def relabel(self, mapping: Mapping[int, int]) -> "Labelling":
        """Apply a bijection on ``1..label_count`` to every label."""
        if sorted(mapping) != list(range(1, self.label_count + 1)) or sorted(
            mapping.values()
        ) != list(range(1, self.label_count + 1)):
            raise PreconditionError("relabelling must be a bijection on 1..label_count")
        return Labelling(tuple(mapping[v] for v in self.labels), self.label_count)


def canonical_form(labels: Iterable[int]) -> tuple[int, ...]:
    """Rename labels to restricted-growth form (label j first appears before j+1)."""
    rename: dict[int, int] = {}
    out = []
    for v in labels:
        if v not in rename:
            rename[v] = len(rename) + 1
        out.append(rename[v])
    return tuple(out)


@dataclass(frozen=True)
class DistinguishingCertificate:
    """Outcome of the distinguishing test for one labelling."""

    labelling: Labelling
    preserving_order: int
    kernel_order: int

    @property
    def distinguishing(self) -> bool:
        return self.preserving_order == self.kernel_order


def _check_length(action: GroupAction, phi: Labelling) -> None:
    if len(phi) != action.domain_size:
        raise PreconditionError(
            f"labelling covers {len(phi)} points but the domain has {action.domain_size}"
        )


def is_preserved_by(action: GroupAction, phi: Labelling, g: Perm) -> bool:
    """True iff ``phi(g.x) == phi(x)`` for every domain point ``x``."""
    _check_length(action, phi)
    img = action.image_of(g).image
    labels = phi.labels
    return all(labels[img[x]] == labels[x] for x in range(action.domain_size))


def preserving_subgroup(action: GroupAction, phi: Labelling) -> PermGroup:
    """All group elements preserving the labelling (always a subgroup)."""
    _check_length(action, phi)
    labels = phi.labels
    n = action.domain_size
    members = [
        g
        for g, p in zip(action.group.elements, action.element_images)
        if all(labels[p.image[x]] == labels[x] for x in range(n))
    ]
    group = PermGroup.from_elements(action.group.degree, members)
    _assert_subgroup(group, action.group)
    return group


def _assert_subgroup(sub: PermGroup, parent: PermGroup) -> None:
    # O(s^2) closure check only at small sizes; cheap necessary conditions otherwise.
    assert sub.identity() in sub
    assert parent.order % max(sub.order, 1) == 0, "order does not divide the group order"
    members = sub.image_set()
    for g in sub.elements:
        assert (~g).image in members, "not closed under inverse"
    if sub.order <= 48:
        for g in sub.elements:
            for h in sub.elements:
                assert (g * h).image in members, "not closed under composition"


def is_distinguishing(action: GroupAction, phi: Labelling) -> DistinguishingCertificate:
    """Certificate comparing the preserving subgroup against the action kernel."""
    sub = preserving_subgroup(action, phi)
    return DistinguishingCertificate(phi, sub.order, action.kernel().order)


def factorial_bound(gamma_order: int) -> int:
    """The least ``k`` with ``k! >= gamma_order``.

    Any action of a group of this order admits a distinguishing labelling
    with at most ``k`` labels, so solvers use it as their default budget.
    """
    if gamma_order < 1:
        raise PreconditionError("group order must be positive")
    k = 1
    fact = 1
    while fact < gamma_order:
        k += 1
        fact *= k
    return k


@dataclass(frozen=True)
class DistinguishingNumberResult:
    """Solver outcome: the minimum label count and a verified witness.

    ``number`` is None when no labelling with at most ``k_max`` labels
    distinguishes the action.
    """

    number: int | None
    witness: Labelling | None
    k_max: int

    @property
    def exceeded(self) -> bool:
        return self.number is None


def exact_distinguishing_number(action: GroupAction, k_max: int | None = None) -> DistinguishingNumberResult:
    """The minimum number of labels that distinguishes the action.

    Iterates k = 1, 2, ... upward (distinguishability is monotone in k, and
    the minimum witness falls out naturally).  At each level the search
    enumerates labellings in restricted-growth form only, which is lossless
    because distinguishing status is invariant under relabelling.  A branch
    is abandoned when some non-kernel element preserves all assigned labels
    and fixes every unassigned point: any completion of the branch would be
    preserved by that element.  The prune is sound but not complete;
    completeness comes from the full-depth enumeration.
    """
    if k_max is None:
        k_max = factorial_bound(action.group.order)
    if k_max < 1:
        raise PreconditionError("k_max must be at least 1")
    n = action.domain_size
    imgs = action.image_tuples()
    invs = action.inverse_image_tuples()
    # Largest moved point per element; -1 marks kernel elements.
    support_max = tuple(
        max((x for x in range(n) if im[x] != x), default=-1) for im in imgs
    )
    for k in range(1, k_max + 1):
        found = _search_with_k_labels(n, imgs, invs, support_max, k)
        if found is not None:
            phi = Labelling(tuple(found), k)
            cert = is_distinguishing(action, phi)
            assert cert.distinguishing, "solver returned a non-distinguishing witness"
            return DistinguishingNumberResult(k, phi, k_max)
    return DistinguishingNumberResult(None, None, k_max)


def _search_with_k_labels(n, imgs, invs, support_max, k):
    """Depth-first search over restricted-growth labellings with <= k labels.

    ``alive`` carries the element indices that preserve every label pair
    assigned so far; reaching full depth with only kernel elements alive is
    exactly the distinguishing condition.
    """
    phi = [0] * n

    def dfs(pos: int, max_used: int, alive: list[int]) -> bool:
        if pos == n:
            return True
        for label in range(1, min(max_used + 1, k) + 1):
            phi[pos] = label
            survivors: list[int] = []
            blocked = False
            for g in alive:
                t = imgs[g][pos]
                if t < pos and phi[t] != label:
                    continue
                t = invs[g][pos]
                if t < pos and phi[t] != label:
                    continue
                s = support_max[g]
                if s != -1 and s <= pos:
                    blocked = True  # preserves everything assigned, fixes the rest
                    break
                survivors.append(g)
            if blocked:
                continue
            if dfs(pos + 1, max(max_used, label), survivors):
                return True
        phi[pos] = 0
        return False

    if dfs(0, 0, list(range(len(imgs)))):
        return list(phi)
    return None


def brute_force_distinguishing_number(action: GroupAction, k_max: int | None = None) -> int | None:
    """Independent oracle: unpruned enumeration of all k^|X| labellings.

    Deliberately naive (no canonical forms, no pruning) so it shares nothing
    with the exact solver.  Guarded to keep the enumeration feasible.
    """
    if k_max is None:
        k_max = factorial_bound(action.group.order)
    if k_max < 1:
        raise PreconditionError("k_max must be at least 1")
    n = action.domain_size
    if k_max**n > BRUTE_FORCE_GUARD:
        raise ResourceLimitError(
            f"{k_max}^{n} labellings exceed the brute-force guard of {BRUTE_FORCE_GUARD}",
            BRUTE_FORCE_GUARD,
        )
    points = range(n)
    non_kernel = [im.image for im in action.element_images if not im.is_identity()]
    for k in range(1, k_max + 1):
        for labels in itertools.product(range(1, k + 1), repeat=n):
            if not any(all(labels[im[x]] == labels[x] for x in points) for im in non_kernel):
                return k
    return None


def _subset_label_check(action: GroupAction, labels: Mapping[int, int], subset: frozenset[int]) -> tuple[int, int]:
    """(#elements preserving the labels on subset, #elements fixing subset pointwise)."""
    preserving = 0
    fixing = 0
    for im in action.element_images:
        img = im.image
        if any(img[x] not in labels for x in subset):
            raise PreconditionError("subset is not invariant under the action")
        if all(labels[img[x]] == labels[x] for x in subset):
            preserving += 1
        if all(img[x] == x for x in subset):
            fixing += 1
    return preserving, fixing


def distinguishes_subset(action: GroupAction, labels: Mapping[int, int], subset: Iterable[int]) -> bool:
    """True iff only elements fixing ``subset`` pointwise preserve its labels.

    ``subset`` must be invariant under the action (e.g. a union of orbits).
    """
    subset = frozenset(subset)
    preserving, fixing = _subset_label_check(action, labels, subset)
    return preserving == fixing


def combine_orbit_labellings(
    action: GroupAction,
    block: Iterable[int],
    phi1: Mapping[int, int],
    phi2: Mapping[int, int],
) -> Labelling:
    """Glue a labelling of one orbit with a labelling of the rest.

    Both pieces must distinguish their own part under the full group (this is
    verified, not assumed).  The glued labelling then distinguishes the whole
    domain with max(k1, k2) labels, which is asserted on the way out.
    """
    block = frozenset(block)
    if not block:
        raise PreconditionError("orbit block must be nonempty")
    if block != orbit(action, min(block)):
        raise PreconditionError("block is not an orbit of the action")
    rest = frozenset(range(action.domain_size)) - block
    if set(phi1) != set(block):
        raise PreconditionError("phi1 must label exactly the orbit block")
    if set(phi2) != set(rest):
        raise PreconditionError("phi2 must label exactly the complement of the block")
    if not distinguishes_subset(action, phi1, block):
        raise PreconditionError("phi1 does not distinguish the orbit under the action")
    if rest and not distinguishes_subset(action, phi2, rest):
        raise PreconditionError("phi2 does not distinguish the complement under the action")
    merged = dict(phi1)
    merged.update(phi2)
    labels = tuple(merged[x] for x in range(action.domain_size))
    k = max(max(phi1.values()), max(phi2.values(), default=1))
    result = Labelling(labels, k)
    cert = is_distinguishing(action, result)
    assert cert.distinguishing, "glued labelling failed the distinguishing test"
    return result


def relatively_prime_orbit_labelling(action: GroupAction, block1: Iterable[int], block2: Iterable[int]) -> Labelling:
    """Two labels suffice when two orbits have coprime stabilizer orders.

    Labels the minimal point of each orbit 2 and everything else 1; by the
    orbit-stabilizer relation the only elements preserving this lie in the
    intersection of two stabilizers of coprime order.
    """
    block1 = frozenset(block1)
    block2 = frozenset(block2)
    for block in (block1, block2):
        if not block or block != orbit(action, min(block)):
            raise PreconditionError("both blocks must be orbits of the action")
    if block1 & block2:
        raise PreconditionError("orbits must be disjoint")
    order = action.group.order
    s1, r1 = divmod(order, len(block1))
    s2, r2 = divmod(order, len(block2))
    assert r1 == 0 and r2 == 0, "orbit sizes must divide the group order"
    if math.gcd(s1, s2) != 1:
        raise PreconditionError(
            f"stabilizer orders {s1} and {s2} are not relatively prime"
        )
    labels = [1] * action.domain_size
    labels[min(block1)] = 2
    labels[min(block2)] = 2
    result = Labelling(tuple(labels), 2)
    cert = is_distinguishing(action, result)
    assert cert.distinguishing, "coprime-orbit labelling failed the distinguishing test"
    return result
