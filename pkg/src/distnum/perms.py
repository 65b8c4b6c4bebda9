"""Permutations, enumerated finite groups, and group actions on finite sets.

Points are 0-based everywhere; 1-based cycle notation appears only in
human-readable output.  Groups are materialized as explicit element lists
(breadth-first closure of their generators) because every downstream check
quantifies over all group elements.  The intended scale is a few hundred
thousand elements at most; there are no stabilizer chains or strong
generating sets here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

__all__ = [
    "DEFAULT_ELEMENT_CAP",
    "PreconditionError",
    "ResourceLimitError",
    "Perm",
    "PermGroup",
    "GroupAction",
    "OrbitPartition",
    "compose",
    "enumerate_group",
    "tautological_action",
    "action_from_generator_images",
    "action_from_element_map",
    "subgroup_action",
    "restrict_action",
    "orbit",
    "orbit_partition",
    "pointwise_stabilizer",
    "action_kernel",
]

# Covers S_8 (order 40,320) with headroom; callers raise it explicitly when
# they knowingly build something bigger.
DEFAULT_ELEMENT_CAP = 50_000


class PreconditionError(ValueError):
    """An argument violates an operation's contract."""


class ResourceLimitError(RuntimeError):
    """A configured enumeration or search cap was exceeded."""

    def __init__(self, message: str, cap: int):
        super().__init__(message)
        self.cap = cap


class Perm:
    """A bijection on {0..degree-1}, stored as its image tuple.

    ``image[i]`` is the point that ``i`` maps to.  Immutable and hashable.
    """

    __slots__ = ("image", "_hash")

    def __init__(self, image: Iterable[int]):
        image = tuple(image)
        n = len(image)
        seen = [False] * n
        for v in image:
            if not isinstance(v, int) or not 0 <= v < n or seen[v]:
                raise PreconditionError(f"not a permutation of 0..{n - 1}: {image}")
            seen[v] = True
        self.image = image
        self._hash = hash(image)

    @property
    def degree(self) -> int:
        return len(self.image)

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Iterable[int]], one_based: bool = False) -> "Perm":
        """Build a permutation from disjoint cycles, e.g. ``[(0, 1, 2)]``."""
        image = list(range(degree))
        offset = 1 if one_based else 0
        touched = set()
        for cycle in cycles:
            cycle = [c - offset for c in cycle]
            for c in cycle:
                if not 0 <= c < degree:
                    raise PreconditionError(f"cycle point {c + offset} out of range for degree {degree}")
                if c in touched:
                    raise PreconditionError(f"cycles are not disjoint at point {c + offset}")
                touched.add(c)
            for i, c in enumerate(cycle):
                image[c] = cycle[(i + 1) % len(cycle)]
        return cls(image)

    def __call__(self, point: int) -> int:
        return self.image[point]

    def __mul__(self, other: "Perm") -> "Perm":
        """``(p * q)(x) == p(q(x))``: apply ``q`` first, then ``p``."""
        if not isinstance(other, Perm):
            return NotImplemented
        if self.degree != other.degree:
            raise PreconditionError(f"degree mismatch: {self.degree} vs {other.degree}")
        mine = self.image
        return Perm(tuple(mine[j] for j in other.image))

    def __invert__(self) -> "Perm":
        inv = [0] * len(self.image)
        for i, j in enumerate(self.image):
            inv[j] = i
        return Perm(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.image))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its minimum point, sorted."""
        out = []
        done = set()
        for start in range(len(self.image)):
            if start in done or self.image[start] == start:
                continue
            cycle = [start]
            done.add(start)
            point = self.image[start]
            while point != start:
                cycle.append(point)
                done.add(point)
                point = self.image[point]
            out.append(tuple(cycle))
        return out

    def cycle_string(self, one_based: bool = True) -> str:
        offset = 1 if one_based else 0
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(p + offset) for p in c) + ")" for c in cycles)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Perm):
            return NotImplemented
        return self.image == other.image

    def __lt__(self, other: "Perm") -> bool:
        return self.image < other.image

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return self.cycle_string()

    def __repr__(self) -> str:
        return f"Perm({list(self.image)})"


def compose(p: Perm, q: Perm) -> Perm:
    """Composition ``p after q``: the result maps ``i`` to ``p.image[q.image[i]]``."""
    return p * q


def _closure(
    degree: int,
    generators: Sequence[Perm],
    images: Sequence[Perm] | None,
    domain_size: int,
    element_cap: int,
) -> tuple[list[Perm], list[Perm] | None]:
    """Breadth-first closure of ``generators`` under right multiplication.

    Discovery order is deterministic: generators are visited in sorted order
    and the frontier is a FIFO queue seeded with the identity.  When
    ``images`` is given, each discovered word is mirrored on the image side
    and rediscoveries are checked for consistency, so a successful run
    certifies that the generator images extend to a homomorphism.
    """
    if element_cap < 1:
        raise PreconditionError("element_cap must be at least 1")
    track = images is not None
    if track:
        pairs = sorted(zip(generators, images), key=lambda gi: gi[0].image)
        deduped: list[tuple[Perm, Perm]] = []
        for g, a in pairs:
            if deduped and deduped[-1][0] == g:
                if deduped[-1][1] != a:
                    raise PreconditionError(f"generator {g} listed twice with different images")
                continue
            deduped.append((g, a))
        gen_pairs = deduped
    else:
        gen_pairs = [(g, g) for g in sorted(set(generators), key=lambda p: p.image)]

    elements: list[Perm] = [Perm.identity(degree)]
    mirror: list[Perm] = [Perm.identity(domain_size)] if track else []
    index = {elements[0].image: 0}
    i = 0
    while i < len(elements):
        e = elements[i]
        a = mirror[i] if track else None
        for g, b in gen_pairs:
            p = e * g
            at = index.get(p.image)
            if at is None:
                if len(elements) >= element_cap:
                    raise ResourceLimitError(
                        f"group closure exceeds element cap of {element_cap}", element_cap
                    )
                index[p.image] = len(elements)
                elements.append(p)
                if track:
                    mirror.append(a * b)
            elif track:
                if mirror[at] != a * b:
                    raise PreconditionError(
                        "generator images are not a homomorphism: "
                        f"element {p} was reached with two different images"
                    )
        i += 1
    return elements, (mirror if track else None)


class PermGroup:
    """A fully enumerated group of permutations of {0..degree-1}."""

    __slots__ = ("degree", "generators", "elements", "_index")

    def __init__(self, degree: int, generators: Sequence[Perm], elements: Sequence[Perm]):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self._index: dict[tuple[int, ...], int] | None = None

    @classmethod
    def from_elements(cls, degree: int, elements: Sequence[Perm], generators: Sequence[Perm] | None = None) -> "PermGroup":
        """Wrap an already-closed element list (e.g. a filtered subgroup).

        The generator list defaults to the full element list, which keeps
        orbit computations correct without hunting for a small generating set.
        """
        elements = tuple(elements)
        if generators is None:
            generators = elements
        return cls(degree, generators, elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def _index_map(self) -> dict[tuple[int, ...], int]:
        if self._index is None:
            self._index = {p.image: i for i, p in enumerate(self.elements)}
        return self._index

    def index(self, perm: Perm) -> int:
        try:
            return self._index_map()[perm.image]
        except KeyError:
            raise PreconditionError(f"{perm} is not an element of this group") from None

    def __contains__(self, perm: Perm) -> bool:
        return perm.image in self._index_map()

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def image_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(p.image for p in self.elements)

    def validate(self) -> None:
        """Check the group axioms by brute force (intended for small groups)."""
        assert self.identity() in self, "identity missing"
        for g in self.generators:
            assert g in self, f"generator {g} missing from elements"
        for p in self.elements:
            assert ~p in self, f"inverse of {p} missing"
            for q in self.elements:
                assert p * q in self, f"product {p}*{q} escapes the element list"

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order})"


def enumerate_group(degree: int, generators: Sequence[Perm], element_cap: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    """The group generated by ``generators``, fully enumerated.

    Elements come back in breadth-first discovery order starting from the
    identity, with generators visited in sorted order, so the element
    numbering is reproducible across runs.
    """
    for g in generators:
        if g.degree != degree:
            raise PreconditionError(f"generator degree {g.degree} does not match {degree}")
    elements, _ = _closure(degree, generators, None, degree, element_cap)
    gens = tuple(sorted(set(generators), key=lambda p: p.image))
    return PermGroup(degree, gens, elements)


class GroupAction:
    """A group acting on {0..domain_size-1}, one image permutation per element.

    ``element_images[i]`` is how ``group.elements[i]`` acts on the domain.
    The constructor checks shapes and that the identity acts trivially; the
    homomorphism property itself is certified by :meth:`validate`.
    """

    __slots__ = ("group", "domain_size", "element_images", "_kernel", "_img_tuples", "_inv_tuples")

    def __init__(self, group: PermGroup, domain_size: int, element_images: Sequence[Perm]):
        if domain_size < 1:
            raise PreconditionError("domain must have at least one point")
        element_images = tuple(element_images)
        if len(element_images) != group.order:
            raise PreconditionError(
                f"need one image per group element: {len(element_images)} images for order {group.order}"
            )
        for p in element_images:
            if p.degree != domain_size:
                raise PreconditionError(f"image degree {p.degree} does not match domain size {domain_size}")
        if not element_images[group.index(group.identity())].is_identity():
            raise PreconditionError("the identity element must act trivially")
        self.group = group
        self.domain_size = domain_size
        self.element_images = element_images
        self._kernel: PermGroup | None = None
        self._img_tuples: tuple[tuple[int, ...], ...] | None = None
        self._inv_tuples: tuple[tuple[int, ...], ...] | None = None

    def image_of(self, g: Perm) -> Perm:
        return self.element_images[self.group.index(g)]

    def apply(self, g: Perm, point: int) -> int:
        return self.image_of(g).image[point]

    def generator_images(self) -> tuple[Perm, ...]:
        return tuple(self.image_of(g) for g in self.group.generators)

    def image_tuples(self) -> tuple[tuple[int, ...], ...]:
        if self._img_tuples is None:
            self._img_tuples = tuple(p.image for p in self.element_images)
        return self._img_tuples

    def inverse_image_tuples(self) -> tuple[tuple[int, ...], ...]:
        if self._inv_tuples is None:
            self._inv_tuples = tuple((~p).image for p in self.element_images)
        return self._inv_tuples

    def kernel(self) -> PermGroup:
        """The subgroup acting as the identity on every domain point."""
        if self._kernel is None:
            members = [g for g, p in zip(self.group.elements, self.element_images) if p.is_identity()]
            self._kernel = PermGroup.from_elements(self.group.degree, members)
        return self._kernel

    @property
    def is_trivial(self) -> bool:
        return self.kernel().order == self.group.order

    @property
    def is_faithful(self) -> bool:
        return self.kernel().order == 1

    def validate(self) -> None:
        """Certify the homomorphism property.

        Rebuilds the action from the generator images by lockstep closure
        (which checks that every rediscovered element carries a consistent
        image) and compares against the stored table.  This is a complete
        check: agreement on ``x * g`` for every element ``x`` and generator
        ``g`` forces agreement on all products.
        """
        rebuilt = action_from_generator_images(
            self.group.degree,
            list(self.group.generators),
            self.domain_size,
            list(self.generator_images()),
            element_cap=max(self.group.order, 1),
        )
        assert rebuilt.group.image_set() == self.group.image_set(), "group mismatch on rebuild"
        for g, p in zip(self.group.elements, self.element_images):
            assert rebuilt.image_of(g) == p, f"image of {g} is not generated by the generator images"

    def __repr__(self) -> str:
        return f"GroupAction(order={self.group.order}, domain={self.domain_size})"


def tautological_action(group: PermGroup) -> GroupAction:
    """A permutation group acting on its own points."""
    return GroupAction(group, group.degree, group.elements)


def action_from_generator_images(
    degree: int,
    generators: Sequence[Perm],
    domain_size: int,
    generator_images: Sequence[Perm],
    element_cap: int = DEFAULT_ELEMENT_CAP,
) -> GroupAction:
    """Extend generator images to the whole generated group.

    Raises :class:`PreconditionError` if the images do not define a
    homomorphism (some group element would be sent to two different
    permutations of the domain).
    """
    if len(generators) != len(generator_images):
        raise PreconditionError("need exactly one image per generator")
    for g in generators:
        if g.degree != degree:
            raise PreconditionError(f"generator degree {g.degree} does not match {degree}")
    for a in generator_images:
        if a.degree != domain_size:
            raise PreconditionError(f"generator image degree {a.degree} does not match domain size {domain_size}")
    elements, images = _closure(degree, generators, generator_images, domain_size, element_cap)
    gens = tuple(sorted(set(generators), key=lambda p: p.image))
    group = PermGroup(degree, gens, elements)
    assert images is not None
    return GroupAction(group, domain_size, images)


def action_from_element_map(group: PermGroup, domain_size: int, image_of: Callable[[Perm], Sequence[int]]) -> GroupAction:
    """Build an action from an explicit per-element rule."""
    images = []
    for g in group.elements:
        img = image_of(g)
        images.append(img if isinstance(img, Perm) else Perm(img))
    return GroupAction(group, domain_size, images)


def subgroup_action(action: GroupAction, subgroup: PermGroup) -> GroupAction:
    """Restrict an action to a subgroup of its group (same domain)."""
    if subgroup.degree != action.group.degree:
        raise PreconditionError("subgroup degree does not match the acting group")
    images = [action.image_of(g) for g in subgroup.elements]
    return GroupAction(subgroup, action.domain_size, images)


def restrict_action(action: GroupAction, points: Iterable[int]) -> tuple[GroupAction, dict[int, int]]:
    """Restrict an action to an invariant subset of the domain.

    Returns the restricted action (domain reindexed to 0..len-1 in sorted
    point order) together with the old-point -> new-point map.
    """
    points = sorted(set(points))
    if not points:
        raise PreconditionError("cannot restrict to an empty point set")
    position = {p: i for i, p in enumerate(points)}
    for p in points:
        if not 0 <= p < action.domain_size:
            raise PreconditionError(f"point {p} is outside the domain")
    images = []
    for img in action.element_images:
        try:
            images.append(Perm(tuple(position[img.image[p]] for p in points)))
        except KeyError:
            raise PreconditionError("point set is not invariant under the action") from None
    return GroupAction(action.group, len(points), images), position


def orbit(action: GroupAction, x: int) -> frozenset[int]:
    """The orbit of ``x``: closure of {x} under the generator images."""
    if not 0 <= x < action.domain_size:
        raise PreconditionError(f"point {x} is outside the domain of size {action.domain_size}")
    gens = [p.image for p in action.generator_images()]
    seen = {x}
    frontier = [x]
    while frontier:
        new = []
        for p in frontier:
            for img in gens:
                q = img[p]
                if q not in seen:
                    seen.add(q)
                    new.append(q)
        frontier = new
    return frozenset(seen)


@dataclass(frozen=True)
class OrbitPartition:
    """The orbits of an action, as disjoint sorted blocks covering the domain.

    Blocks are ordered by their representative (minimum point).
    """

    domain_size: int
    blocks: tuple[tuple[int, ...], ...]

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(b[0] for b in self.blocks)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def block_of(self, x: int) -> tuple[int, ...]:
        for b in self.blocks:
            if x in b:
                return b
        raise PreconditionError(f"point {x} is outside the domain")


def orbit_partition(action: GroupAction) -> OrbitPartition:
    """All orbits of the action, blocks keyed by minimal representative."""
    seen: set[int] = set()
    blocks = []
    for x in range(action.domain_size):
        if x in seen:
            continue
        block = orbit(action, x)
        seen |= block
        blocks.append(tuple(sorted(block)))
    return OrbitPartition(action.domain_size, tuple(blocks))


def pointwise_stabilizer(action: GroupAction, points: Iterable[int]) -> PermGroup:
    """The subgroup fixing every point of ``points`` individually.

    Returned fully enumerated, with the element list doubling as the
    generator list (downstream checks iterate all elements anyway).
    """
    points = sorted(set(points))
    for p in points:
        if not 0 <= p < action.domain_size:
            raise PreconditionError(f"point {p} is outside the domain")
    members = [
        g
        for g, img in zip(action.group.elements, action.element_images)
        if all(img.image[p] == p for p in points)
    ]
    return PermGroup.from_elements(action.group.degree, members)


def action_kernel(action: GroupAction) -> PermGroup:
    """The pointwise stabilizer of the whole domain."""
    return action.kernel()
