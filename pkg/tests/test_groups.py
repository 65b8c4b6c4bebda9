"""Actions, orbits, stabilizers and kernels."""

import pytest

from distnum.catalog import (
    conjugation_action,
    cycle_type,
    natural_action,
    standard_actions,
    symmetric_group,
    trivial_action,
)
from distnum.perms import (
    Perm,
    PreconditionError,
    action_from_element_map,
    action_from_generator_images,
    action_kernel,
    orbit,
    orbit_partition,
    pointwise_stabilizer,
    restrict_action,
    subgroup_action,
    tautological_action,
)


def test_s3_conjugation_orbit_of_a_transposition():
    action = conjugation_action(3)
    transpositions = {
        i for i, g in enumerate(action.group.elements) if cycle_type(g) == (1, 2)
    }
    first = min(transpositions)
    assert orbit(action, first) == frozenset(transpositions)
    assert len(transpositions) == 3


def test_trivial_action_orbits_are_singletons():
    action = trivial_action(symmetric_group(3), 5)
    for x in range(5):
        assert orbit(action, x) == frozenset({x})
    assert orbit_partition(action).sizes() == (1, 1, 1, 1, 1)


def test_natural_action_is_transitive():
    action = natural_action(4)
    assert orbit(action, 0) == frozenset(range(4))


def test_orbit_bounds_check():
    with pytest.raises(PreconditionError):
        orbit(natural_action(3), 7)


def test_s3_conjugation_partition():
    part = orbit_partition(conjugation_action(3))
    assert part.sizes() == (1, 3, 2)


def test_s4_conjugation_partition_matches_brute_force():
    action = conjugation_action(4)
    elements = action.group.elements
    # independent derivation: conjugacy classes computed directly
    classes = []
    seen = set()
    for g in elements:
        if g.image in seen:
            continue
        cls = {(h * g * ~h).image for h in elements}
        seen |= cls
        classes.append(cls)
    sizes = sorted(len(c) for c in classes)
    assert sizes == [1, 3, 6, 6, 8]
    assert sorted(orbit_partition(action).sizes()) == sizes


def test_pointwise_stabilizer_examples():
    action = conjugation_action(3)
    transposition = action.group.index(Perm((1, 0, 2)))
    three_cycle = action.group.index(Perm((1, 2, 0)))
    assert pointwise_stabilizer(action, [transposition]).order == 2
    assert pointwise_stabilizer(action, [three_cycle]).order == 3
    assert pointwise_stabilizer(action, []).order == action.group.order


def test_kernel_of_faithful_action_is_trivial():
    assert action_kernel(natural_action(4)).order == 1


def test_kernel_of_trivial_action_is_everything():
    action = trivial_action(symmetric_group(3), 2)
    assert action_kernel(action).order == 6


def pair_partition_action():
    """S_4 on the three ways of splitting {0,1,2,3} into two pairs."""
    s4 = symmetric_group(4)
    partitions = [
        frozenset({frozenset({0, 1}), frozenset({2, 3})}),
        frozenset({frozenset({0, 2}), frozenset({1, 3})}),
        frozenset({frozenset({0, 3}), frozenset({1, 2})}),
    ]

    def image_of(g):
        moved = [
            frozenset(frozenset(g(x) for x in pair) for pair in part)
            for part in partitions
        ]
        return [partitions.index(m) for m in moved]

    return action_from_element_map(s4, 3, image_of)


def test_pair_partition_kernel_is_klein_four():
    action = pair_partition_action()
    kernel = action_kernel(action)
    assert kernel.order == 4
    # brute force the same subgroup: elements fixing all three partitions
    expected = {
        g.image
        for g, img in zip(action.group.elements, action.element_images)
        if img.is_identity()
    }
    assert kernel.image_set() == expected
    assert {cycle_type(g) for g in kernel.elements} == {(1, 1, 1, 1), (2, 2)}


def test_orbit_stabilizer_relation_everywhere():
    for entry in standard_actions():
        action = entry.action
        order = action.group.order
        part = orbit_partition(action)
        for x in range(action.domain_size):
            stab = pointwise_stabilizer(action, [x])
            assert order == len(part.block_of(x)) * stab.order


def test_homomorphism_property_exhaustively_small():
    for entry in standard_actions():
        action = entry.action
        action.validate()
        if action.group.order > 24:
            continue
        index = {g.image: i for i, g in enumerate(action.group.elements)}
        for i, g in enumerate(action.group.elements):
            for j, h in enumerate(action.group.elements):
                k = index[(g * h).image]
                assert action.element_images[k] == action.element_images[i] * action.element_images[j]


def test_blocks_invariant_under_generators():
    for entry in standard_actions():
        action = entry.action
        part = orbit_partition(action)
        for img in action.generator_images():
            for block in part.blocks:
                assert {img.image[x] for x in block} == set(block)


def test_subgroup_action_and_restrict():
    action = natural_action(4)
    stab = pointwise_stabilizer(action, [0])
    sub = subgroup_action(action, stab)
    assert sub.group.order == 6
    assert orbit(sub, 0) == frozenset({0})
    assert orbit(sub, 1) == frozenset({1, 2, 3})

    restricted, position = restrict_action(sub, [1, 2, 3])
    assert restricted.domain_size == 3
    assert position == {1: 0, 2: 1, 3: 2}
    with pytest.raises(PreconditionError):
        restrict_action(natural_action(3), [0, 1])  # not invariant


def test_inconsistent_generator_images_rejected():
    # send both generators of S_3 to the swap on two points: the 3-cycle
    # relation forces the identity to act as the swap, which is caught
    gens = [Perm((1, 0, 2)), Perm((1, 2, 0))]
    swap = Perm((1, 0))
    with pytest.raises(PreconditionError):
        action_from_generator_images(3, gens, 2, [swap, swap])


def test_tautological_action_identity_check():
    group = symmetric_group(3)
    action = tautological_action(group)
    assert action.image_of(group.elements[1]) == group.elements[1]
    assert action.is_faithful
