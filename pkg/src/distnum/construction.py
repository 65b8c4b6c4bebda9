"""The orbit-by-orbit labelling construction and its certificates.

Starting from the whole group, each round labels one fresh point per
nontrivial orbit with the next label and descends to the pointwise
stabilizer of the chosen points.  The run leaves behind a trace (the
stabilizer chain and the chosen sets), from which a witness chain of one
point per label can be extracted; the chain certifies a product inequality
against the group order that bounds how many labels the construction can
ever use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .labelling import Labelling, factorial_bound, is_distinguishing
from .perms import (
    GroupAction,
    PermGroup,
    PreconditionError,
    orbit,
    orbit_partition,
    pointwise_stabilizer,
    subgroup_action,
)

__all__ = [
    "ConstructionStage",
    "ConstructionTrace",
    "WitnessChain",
    "LowerBoundReport",
    "run_construction",
    "extract_witness_chain",
    "verify_lower_bound",
    "factorial_bound",
]


@dataclass(frozen=True)
class ConstructionStage:
    """One level of the stabilizer chain.

    ``group`` acts with ``active`` still unlabelled beyond the base label;
    ``chosen`` is the set picked this round (one point per nontrivial orbit),
    or None on the final, closed stage.
    """

    group: PermGroup
    active: tuple[int, ...]
    chosen: tuple[int, ...] | None


@dataclass(frozen=True)
class ConstructionTrace:
    action: GroupAction
    stages: tuple[ConstructionStage, ...]
    labelling: Labelling

    @property
    def iteration_count(self) -> int:
        return len(self.stages) - 1

    @property
    def label_count(self) -> int:
        return len(self.stages)

    def stage_action(self, i: int) -> GroupAction:
        return subgroup_action(self.action, self.stages[i].group)

    def validate(self) -> None:
        """Re-check every structural invariant of the recorded run."""
        stages = self.stages
        assert stages, "trace must have at least one stage"
        assert stages[0].group.image_set() == self.action.group.image_set()
        assert stages[0].active == tuple(range(self.action.domain_size))
        for i, stage in enumerate(stages):
            last = i == len(stages) - 1
            sub = self.stage_action(i)
            part = orbit_partition(sub)
            active = set(stage.active)
            nontrivial = [b for b in part.blocks if len(b) > 1 and b[0] in active]
            if last:
                assert stage.chosen is None
                assert not nontrivial, "final stage still moves an active point"
                continue
            chosen = stage.chosen
            assert chosen is not None and chosen
            chosen_set = set(chosen)
            assert chosen_set <= active
            # one point from each nontrivial orbit, none from trivial ones
            assert len(nontrivial) == len(chosen)
            for b in nontrivial:
                assert len(chosen_set & set(b)) == 1
            nxt = stages[i + 1]
            assert set(nxt.active) == active - chosen_set
            stab = pointwise_stabilizer(sub, chosen)
            assert nxt.group.image_set() == stab.image_set()
            assert nxt.group.order < stage.group.order, "stabilizer chain must shrink strictly"
            for x in chosen:
                assert self.labelling.labels[x] == i + 2
        base = {x for s in stages if s.chosen for x in s.chosen}
        for x in range(self.action.domain_size):
            if x not in base:
                assert self.labelling.labels[x] == 1


@dataclass(frozen=True)
class WitnessChain:
    """One point per label, linked through nested stabilizer orbits.

    The points are specific to the trace they were extracted from (a
    different choice rule may yield a different chain).
    """

    points: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.points)


def run_construction(action: GroupAction) -> tuple[Labelling, ConstructionTrace]:
    """Run the recursive labelling; returns the labelling and its trace.

    Choice rule: each round takes the minimal-index point of every
    nontrivial orbit of the current stabilizer among the still-active
    points, so traces are reproducible.  The result always distinguishes
    the action, but need not be minimal.
    """
    n = action.domain_size
    labels = [1] * n
    stages: list[ConstructionStage] = []
    group = action.group
    sub = action
    active = tuple(range(n))
    label = 1
    while True:
        part = orbit_partition(sub)
        active_set = set(active)
        nontrivial = [b for b in part.blocks if len(b) > 1 and b[0] in active_set]
        if not nontrivial:
            stages.append(ConstructionStage(group, active, None))
            break
        label += 1
        chosen = tuple(b[0] for b in nontrivial)
        for x in chosen:
            labels[x] = label
        stages.append(ConstructionStage(group, active, chosen))
        remaining = tuple(x for x in active if x not in set(chosen))
        assert len(remaining) < len(active), "active set must shrink every round"
        group = pointwise_stabilizer(sub, chosen)
        sub = subgroup_action(action, group)
        active = remaining
    phi = Labelling(tuple(labels), len(stages))
    trace = ConstructionTrace(action, tuple(stages), phi)
    cert = is_distinguishing(action, phi)
    assert cert.distinguishing, "construction produced a non-distinguishing labelling"
    return phi, trace


def extract_witness_chain(trace: ConstructionTrace) -> WitnessChain:
    """Pull one point per label out of a trace, back to front.

    Start from a point of the final active set whose orbit under the
    second-to-last stabilizer is nontrivial (minimal such index); that orbit
    meets the last chosen set in a unique point, and walking the chosen sets
    downward through ever larger stabilizers produces the rest.  Runs with
    zero iterations yield the empty chain.
    """
    k = trace.label_count
    if k == 1:
        return WitnessChain(())
    stages = trace.stages
    labels = trace.labelling.labels
    prev = trace.stage_action(k - 2)  # second-to-last stabilizer
    final_active = stages[k - 1].active
    y1 = None
    for x in final_active:
        if len(orbit(prev, x)) >= 2:
            y1 = x
            break
    assert y1 is not None, "final stage must contain a point still moved one level up"
    top_orbit = orbit(prev, y1)
    meet = top_orbit & set(stages[k - 2].chosen or ())
    assert len(meet) == 1, "orbit must meet the chosen set in a unique point"
    points = {1: y1, k: min(meet)}
    y = points[k]
    for i in range(k, 2, -1):
        sub = trace.stage_action(i - 3)
        orb = orbit(sub, y)
        meet = orb & set(stages[i - 3].chosen or ())
        assert len(meet) == 1, "orbit must meet the chosen set in a unique point"
        y = min(meet)
        points[i - 1] = y
    chain = WitnessChain(tuple(points[i] for i in range(1, k + 1)))
    for i, p in enumerate(chain.points, start=1):
        assert labels[p] == i, "chain labels must run 1..k in order"
    for i in range(2, k):
        gamma = trace.stage_action(i - 2)
        assert chain.points[i] in orbit(gamma, chain.points[i - 1]), "chain links must share orbits"
    assert chain.points[0] in orbit(trace.stage_action(k - 2), chain.points[k - 1])
    return chain


@dataclass(frozen=True)
class LowerBoundReport:
    """The certified product of nested orbit sizes against the group order."""

    group_order: int
    orbit_sizes: tuple[int, ...]
    closing_orbit_size: int | None
    closing_stabilizer_order: int | None
    product: int | None

    @property
    def product_ok(self) -> bool:
        return self.product is None or self.product <= self.group_order

    @property
    def orbit_size_bounds_ok(self) -> bool:
        j = len(self.orbit_sizes) + 1
        return all(size >= j - i + 2 for i, size in zip(range(2, j + 1), self.orbit_sizes))

    @property
    def ok(self) -> bool:
        return self.product_ok and self.orbit_size_bounds_ok


def verify_lower_bound(trace: ConstructionTrace, chain: WitnessChain) -> LowerBoundReport:
    """Check the order inequality certified by a witness chain.

    Computes ``|G_1.y_2| * ... * |G_{j-1}.y_j| * |G_j.y_1| * |Stab_{G_j}(y_1)|``
    and confirms it is at most the group order, and that the i-th orbit in
    the chain has at least ``j - i + 2`` points.  An empty chain is
    vacuously fine.
    """
    j = len(chain)
    order = trace.stages[0].group.order
    if j == 0:
        return LowerBoundReport(order, (), None, None, None)
    if j > trace.label_count:
        raise PreconditionError("chain is longer than the trace has labels")
    labels = trace.labelling.labels
    pts = chain.points
    for i, p in enumerate(pts, start=1):
        if not 0 <= p < trace.action.domain_size or labels[p] != i:
            raise PreconditionError(f"chain point {p} does not carry label {i}")
    orbit_sizes = []
    for i in range(2, j + 1):
        gamma = trace.stage_action(i - 2)
        orbit_sizes.append(len(orbit(gamma, pts[i - 1])))
    # link conditions: y_{i+1} in G_{i-1}.y_i for 2 <= i <= j-1, and y_1 in G_{j-1}.y_j
    for i in range(2, j):
        if pts[i] not in orbit(trace.stage_action(i - 2), pts[i - 1]):
            raise PreconditionError("chain points do not share the required orbits")
    closing_gamma = trace.stage_action(j - 1)
    if j >= 2 and pts[0] not in orbit(trace.stage_action(j - 2), pts[j - 1]):
        raise PreconditionError("chain is not closed through the last stabilizer orbit")
    closing_orbit = orbit(closing_gamma, pts[0])
    closing_stab = pointwise_stabilizer(closing_gamma, [pts[0]])
    product = math.prod(orbit_sizes) * len(closing_orbit) * closing_stab.order
    return LowerBoundReport(order, tuple(orbit_sizes), len(closing_orbit), closing_stab.order, product)
