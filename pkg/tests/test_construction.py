import random

import pytest

from distnum.catalog import (
    conjugation_action,
    natural_action,
    symmetric_group,
    translation_action,
    trivial_action,
)
from distnum.construction import (
    WitnessChain,
    extract_witness_chain,
    factorial_bound,
    run_construction,
    verify_lower_bound,
)
from distnum.graphs import graph_action, make_figure4_graph
from distnum.labelling import exact_distinguishing_number, is_distinguishing
from distnum.perms import (
    Perm,
    PreconditionError,
    enumerate_group,
    orbit_partition,
    restrict_action,
    tautological_action,
)
from distnum.verify import random_action


def test_trivial_action_needs_no_iterations():
    phi, trace = run_construction(trivial_action(symmetric_group(3), 4))
    assert trace.iteration_count == 0
    assert phi.label_count == 1
    assert extract_witness_chain(trace) == WitnessChain(())
    report = verify_lower_bound(trace, WitnessChain(()))
    assert report.ok and report.product is None


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_natural_action_strips_one_point_per_round(n):
    phi, trace = run_construction(natural_action(n))
    trace.validate()
    assert trace.iteration_count == n - 1
    assert sorted(phi.labels) == list(range(1, n + 1))


def test_natural_s4_chain_product_is_tight():
    _, trace = run_construction(natural_action(4))
    chain = extract_witness_chain(trace)
    assert [trace.labelling.labels[p] for p in chain.points] == [1, 2, 3, 4]
    report = verify_lower_bound(trace, chain)
    assert report.product == 24 == report.group_order
    assert report.orbit_sizes == (4, 3, 2)
    assert report.ok


def test_figure4_graph_uses_four_labels_in_three_rounds():
    action = graph_action(make_figure4_graph())
    phi, trace = run_construction(action)
    trace.validate()
    assert trace.iteration_count == 3
    assert phi.label_count == 4
    assert is_distinguishing(action, phi).distinguishing
    chain = extract_witness_chain(trace)
    report = verify_lower_bound(trace, chain)
    assert report.ok and report.product <= 72
    # the construction is not minimal here: the exact number is 3
    assert exact_distinguishing_number(action).number == 3


def test_single_orbit_rotation_action():
    rotations = enumerate_group(6, [Perm((1, 2, 3, 4, 5, 0))])
    action = tautological_action(rotations)
    phi, trace = run_construction(action)
    assert trace.label_count == 2
    chain = extract_witness_chain(trace)
    assert len(chain) == trace.label_count
    assert verify_lower_bound(trace, chain).ok


def test_s3_conjugation_chain_product_bounded():
    action = conjugation_action(3)
    _, trace = run_construction(action)
    chain = extract_witness_chain(trace)
    report = verify_lower_bound(trace, chain)
    assert report.ok and report.product <= 6


def test_stabilizer_chain_shrinks_strictly():
    for make in (lambda: natural_action(5), lambda: conjugation_action(4),
                  lambda: translation_action(symmetric_group(3))):
        _, trace = run_construction(make())
        orders = [s.group.order for s in trace.stages]
        assert all(a > b for a, b in zip(orders, orders[1:]))


def test_chain_trace_mismatch_is_rejected():
    _, trace = run_construction(natural_action(4))
    chain = extract_witness_chain(trace)
    tampered = WitnessChain(tuple(reversed(chain.points)))
    with pytest.raises(PreconditionError):
        verify_lower_bound(trace, tampered)


def test_factorial_bound_reexported_values():
    assert factorial_bound(24) == 4
    assert factorial_bound(1) == 1
    assert factorial_bound(720) == 6


def test_exact_number_never_exceeds_construction():
    cases = [
        natural_action(4),
        natural_action(3, 2),
        conjugation_action(3),
        conjugation_action(4),
        translation_action(symmetric_group(4)),
        graph_action(make_figure4_graph()),
    ]
    for action in cases:
        phi, _ = run_construction(action)
        assert exact_distinguishing_number(action).number <= phi.label_count


def test_construction_properties_on_random_actions():
    rng = random.Random(7)
    for _ in range(40):
        action = random_action(rng)
        phi, trace = run_construction(action)
        trace.validate()
        bound = factorial_bound(action.group.order)
        assert phi.label_count <= bound
        chain = extract_witness_chain(trace)
        assert len(chain) == (0 if trace.label_count == 1 else trace.label_count)
        assert verify_lower_bound(trace, chain).ok


def test_per_orbit_construction_stays_within_bound():
    action = conjugation_action(4)
    bound = factorial_bound(action.group.order)
    for block in orbit_partition(action).blocks:
        restricted, _ = restrict_action(action, block)
        phi, _ = run_construction(restricted)
        assert phi.label_count <= bound
