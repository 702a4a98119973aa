"""Exact Kronecker coefficients via lattice-point counts in column-row polytopes."""

from .characters import (
    centralizer_order,
    character_value,
    class_size,
    g_oracle,
    lr_oracle,
    perm_character_value,
)
from .kronecker import (
    JTPairTerm,
    JTTerm,
    cr_count,
    face_F_minus,
    face_F_plus,
    face_term_breakdown,
    jt_expansion,
    jt_pair_expansion,
    kron_via_cr,
    kron_via_faces,
    normalize_triple,
    phi_ell,
    z_matrix,
)
from .partitions import (
    Composition,
    NotWeaklyDecreasing,
    Partition,
    SizeMismatch,
    conjugate,
    dominance_geq,
    intersection,
    parse_composition,
    parse_partition,
    partition,
    partitions_of,
)
from .polytope import (
    ColTight,
    CRSystem,
    DiagZero,
    EntryZero,
    FaceUnion,
    NotDiagConstant,
    RowTight,
    Tensor3,
    affine_rank,
    build_hypercube_point,
    col_ineq_slack,
    cone_dim,
    count_points,
    diag_values,
    enumerate_points,
    flatten_col,
    flatten_row,
    free_cone_coordinates,
    hypercube_sample,
    in_cone,
    is_member,
    marginals,
    polytope_dim_bound,
    row_ineq_slack,
)
from .tableaux import (
    LRMultitableau,
    SkewTableau,
    canonical_tableau,
    count_lr_pairs,
    insertion_tableau,
    is_reverse_lattice,
    kostka,
    main_lemma_conditions,
    rsk,
    straight_tableau,
    theorem41_map,
)

__all__ = [name for name in dir() if not name.startswith("_")]
