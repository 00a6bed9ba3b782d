"""Toolkit for worst-case efficient domination in oriented permutation
digraphs: family constructors, predicate checks with re-checkable
certificates, chain-level verification, and Hamilton search.
"""

__version__ = "0.1.0"

from .perms import (
    Word,
    all_words,
    apply_star_gen,
    embed_orientation,
    even_words,
    insert_embed,
    inversion_count,
    is_even,
    lehmer_rank,
    lehmer_unrank,
    parity,
    shift_symbol,
    word_from_text,
    word_to_text,
)
from .digraph import (
    MapClassification,
    OrientedGraph,
    boundary_sets,
    canonical_double_cover,
    classify_vertex_map,
    directed_triangles,
    directify_path,
    enumerate_induced_copies,
    export_graph,
    is_pm_stable,
    is_stable,
    isomorphic,
    parse_graph,
    strongly_connected,
    weak_components,
)
from .families import (
    EmbeddingDescriptor,
    FamilySpec,
    GuardStar,
    binary_star_digraph,
    build_family,
    embedded_copy,
    guard_star,
    pancake_crossed,
    pancake_digraph,
    star_digraph,
    star_graph,
    ternary_cube_oriented,
)
from .domination import (
    CuneiformCertificate,
    DominationCertificate,
    check_pm_dominating,
    enumerate_wced,
    is_cuneiform,
    is_e_set_undirected,
    is_wced,
    min_wced_search,
    sphere_packing_check,
)
from .chains import (
    chain_report,
    copy_counts,
    segment_rows,
    verify_dense,
    verify_inclusive,
    verify_neighborly,
    verify_segmental,
)
from .hamilton import (
    encode_step_type,
    enumerate_hamilton_paths,
    hamilton_search,
    traceability_report,
)
