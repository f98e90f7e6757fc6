"""Exact computations on 2x2 integer matrix classes, Conway's big picture
and extensions of Q by Z.

Matrix classes are canonical triples (a, b, d) standing for [[a, b], [0, d]].
Vertices of the big picture, supernatural numbers and Moebius matrices are
passed as the same text literals the command line tool accepts.
"""

from ._bigpic import (
    DomainError,
    axpb_count,
    ball_dot,
    ball_json,
    classify,
    count_classes_by_det,
    count_primitive_by_det,
    delta,
    delta_direct,
    divides,
    downward_neighbors,
    embed,
    equiv_decide,
    ext_member,
    goormaghtigh_search,
    hnf,
    hnf_literal,
    hyper_distance,
    is_extension,
    join,
    level,
    localize,
    meet,
    moebius_apply,
    neighbor_census,
    niveau,
    normalize_supernatural,
    primitive_decompose,
    psi_coeffs,
    sigma_coeffs,
    unembed,
    upward_neighbors,
)

__version__ = "0.1.0"
