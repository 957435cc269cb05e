"""Workbench for r-regular multigraphs: cuts, colorings, constructions.

The package decides r-graph and edge-chromatic class membership, searches
for colorings of one graph by another, builds the standard constructions
(matching powers of the Petersen graph, lifting, vertex expansion, edge
replacement), generates small families exhaustively, and wraps everything
in reproducible experiments.
"""

from .construct import (
    add_one_factor,
    class1_coloring,
    lift,
    lift_to_rgraph,
    meredith_expand_all,
    meredith_extension,
    meredith_natural_coloring,
    p_power,
    petersen,
    petersen_pms,
    replace_all,
    replace_edge,
    simple_class2,
)
from .core import (
    Multigraph,
    boundary,
    contract,
    delete_vertices,
    disjoint_union,
    induced,
    is_connected,
    load_mgf,
    mask_of,
    parse_graph6,
    parse_mgf,
    save_mgf,
    write_mgf,
)
from .cuts import (
    OddCutCertificate,
    TightCut,
    is_r_graph,
    min_odd_cut,
    min_odd_cut_bruteforce,
    min_odd_cut_flow,
    tight_cuts,
)
from .experiments import (
    ExperimentReport,
    experiment_one_factor_sweep,
    experiment_petersen_rigidity,
    experiment_pm_power_census,
    experiment_pm_transitivity,
    experiment_properties,
    run_experiment,
)
from .factors import (
    has_pm_avoiding,
    is_class1,
    is_class2,
    is_regularizable,
    perfect_2_matching,
    perfect_matchings,
    pi,
    regularizable_lp,
    two_matching_deleted_everywhere,
)
from .generate import GenSpec, all_simple_graphs, brute_regular_multigraphs, generate
from .hcoloring import (
    HColoring,
    check_structure_transport,
    find_hcoloring,
    image_subgraph,
    unused_vertices,
    verify_hcoloring,
)
from .iso import (
    are_isomorphic,
    automorphisms,
    canonical_form,
    edge_permutation,
    pm_action,
    vertex_orbits,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
