"""Distinguishing numbers of finite group actions and graphs.

A labelling of a set acted on by a group is distinguishing when the only
group elements preserving it act trivially on the whole set.  This package
computes the minimum number of labels needed (exactly, with an independent
brute-force oracle), implements the recursive orbit-by-orbit construction
with its certificate chain and order bounds, handles graphs through their
automorphism groups (including the constructive bound for trees), and ships
a catalog of named actions plus a verification suite for the supporting
theory.
"""

from .catalog import (
    NamedAction,
    all_s3_homomorphism_actions,
    conjugation_action,
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
    ConstructionStage,
    ConstructionTrace,
    LowerBoundReport,
    WitnessChain,
    extract_witness_chain,
    run_construction,
    verify_lower_bound,
)
from .graphs import (
    Graph,
    TreeDecoration,
    automorphism_group,
    check_complete_graph_characterization,
    graph_action,
    graph_distinguishing_number,
    make_complete,
    make_cycle,
    make_empty,
    make_figure2_graphs,
    make_figure4_graph,
    make_figure7_tree,
    make_path,
    make_star_path_tree,
    tree_decoration,
    tree_distinguishing_labelling,
)
from .labelling import (
    DistinguishingCertificate,
    DistinguishingNumberResult,
    Labelling,
    brute_force_distinguishing_number,
    canonical_form,
    combine_orbit_labellings,
    distinguishes_subset,
    exact_distinguishing_number,
    factorial_bound,
    is_distinguishing,
    is_preserved_by,
    preserving_subgroup,
    relatively_prime_orbit_labelling,
)
from .perms import (
    GroupAction,
    OrbitPartition,
    Perm,
    PermGroup,
    PreconditionError,
    ResourceLimitError,
    action_from_element_map,
    action_from_generator_images,
    action_kernel,
    compose,
    enumerate_group,
    orbit,
    orbit_partition,
    pointwise_stabilizer,
    restrict_action,
    subgroup_action,
    tautological_action,
)

__version__ = "0.1.0"
