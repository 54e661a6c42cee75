"""Steiner triple systems, their surfaces and (k,2)-colorings."""

from ._core import (
    Complex,
    Error,
    affine_sts,
    analyze_transversal,
    ball_b15,
    bose,
    chromatic_number,
    classify,
    color,
    cyclic_polytope_boundary,
    embed,
    f_vector,
    find_isomorphism,
    format_facets,
    parse_facets,
    projective_sts,
    rp2_6,
    sphere167,
    steiner_surface,
    torus_7,
    verify_coloring,
)

__all__ = [
    "Complex",
    "Error",
    "affine_sts",
    "analyze_transversal",
    "ball_b15",
    "bose",
    "chromatic_number",
    "classify",
    "color",
    "cyclic_polytope_boundary",
    "embed",
    "f_vector",
    "find_isomorphism",
    "format_facets",
    "parse_facets",
    "projective_sts",
    "rp2_6",
    "sphere167",
    "steiner_surface",
    "torus_7",
    "verify_coloring",
]
