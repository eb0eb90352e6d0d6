"""Exact quasi-monomial valuations, their infima, and the tree they form.

Everything is rational arithmetic end to end: polynomial values, dilatation
programs, canonical forms, rank-2 refinements, and the parametrized rooted
tree with its reciprocal-difference metric.
"""

from __future__ import annotations

from .rationals import INF, ExtRat, Infinity, is_inf, parse_extrat, format_extrat
from .poly import (
    BivarPoly,
    IDENTITY_FRAME,
    LinearFrame,
    PolyParseError,
    poly_parse,
    weighted_order,
)
from .valuation import (
    CanonicalForm,
    Comparison,
    Curve,
    Divisorial,
    INF_POINT,
    M_ADIC,
    ProjPoint,
    QuasiMonomialVal,
    canonicalize,
    common_minimizer,
    compare,
    dilatation_length,
    dilate,
    equal_valuations,
    evaluate,
    from_canonical,
    infimum,
    is_normalized,
    m_value,
    meet,
    monomial,
    multiplicity_stream,
    normalize,
    residue_direction,
    sim_pairs,
)
from .krull import (
    KrullRank2,
    KrullSameRank1,
    Rank2Val,
    krull_lift,
    rank1_section,
    rank2_eval,
)
from .tree import (
    PathParam,
    RootedTree,
    TangentRef,
    TreePoint,
    build_star,
    chain_infimum,
    class_member,
    fi_infimum,
    star_witness,
    t_dpsi,
    t_inf_set,
    t_leq,
    t_meet,
    t_tangent_equiv,
)
from .jsonio import (
    FormatError,
    canonical_from_json,
    canonical_to_json,
    tree_from_json,
    tree_to_json,
    valuation_from_json,
    valuation_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "BivarPoly",
    "CanonicalForm",
    "Comparison",
    "Curve",
    "Divisorial",
    "ExtRat",
    "FormatError",
    "IDENTITY_FRAME",
    "INF",
    "INF_POINT",
    "Infinity",
    "KrullRank2",
    "KrullSameRank1",
    "LinearFrame",
    "M_ADIC",
    "PathParam",
    "PolyParseError",
    "ProjPoint",
    "QuasiMonomialVal",
    "Rank2Val",
    "RootedTree",
    "TangentRef",
    "TreePoint",
    "build_star",
    "canonical_from_json",
    "canonical_to_json",
    "canonicalize",
    "chain_infimum",
    "class_member",
    "common_minimizer",
    "compare",
    "dilatation_length",
    "dilate",
    "equal_valuations",
    "evaluate",
    "fi_infimum",
    "format_extrat",
    "from_canonical",
    "infimum",
    "is_inf",
    "is_normalized",
    "krull_lift",
    "m_value",
    "meet",
    "monomial",
    "multiplicity_stream",
    "normalize",
    "parse_extrat",
    "poly_parse",
    "rank1_section",
    "rank2_eval",
    "residue_direction",
    "sim_pairs",
    "star_witness",
    "t_dpsi",
    "t_inf_set",
    "t_leq",
    "t_meet",
    "t_tangent_equiv",
    "tree_from_json",
    "tree_to_json",
    "valuation_from_json",
    "valuation_to_json",
    "weighted_order",
]
