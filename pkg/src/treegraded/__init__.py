"""Exact-arithmetic universal tree-graded spaces.

Core objects: piece families (`pieces`), step sequences (`pgeodesic`),
points of the glued space with their exact metric and explicit geodesics
(`universal`), first-class pieces with projections (`structure`),
distance-distorting piece replacement (`stretch`), and an exhaustive
verifier for finite metric graphs (`verifier`). A FastAPI service
(`treegraded.service`) exposes every operation over JSON; the `treegraded`
command line is a thin client for it.
"""

from __future__ import annotations

from .errors import (
    AdmissibilityError,
    CapExceededError,
    FamilyMismatchError,
    OutOfRangeError,
    ShapeError,
    TreeGradedError,
)
from .pieces import (
    BilipschitzMap,
    Piece,
    PieceFamily,
    Scalar,
    coords,
    make_family,
    word,
)
from .pgeodesic import (
    PGeodesic,
    PStep,
    is_admissible,
    pgeodesic,
    restrict_closed,
    restrict_open,
    reverse,
    same_initial_pattern,
    same_pattern_until,
)
from .structure import PieceRef, check_axioms, embed, member, project
from .stretch import StretchContext, identity_context, psi, psi_point, stretch_function
from .universal import (
    ExplicitGeodesic,
    SeparationData,
    UPoint,
    USegment,
    basepoint,
    concat,
    dist,
    explicit_geodesic,
    leq,
    realize_class,
    separation,
    single,
    urestrict,
    validate,
)
from .verifier import MetricGraph, PieceCover, Verdict, all_geodesics, verify

__all__ = [
    "AdmissibilityError",
    "BilipschitzMap",
    "CapExceededError",
    "ExplicitGeodesic",
    "FamilyMismatchError",
    "MetricGraph",
    "OutOfRangeError",
    "PGeodesic",
    "PStep",
    "Piece",
    "PieceCover",
    "PieceFamily",
    "PieceRef",
    "Scalar",
    "SeparationData",
    "ShapeError",
    "StretchContext",
    "TreeGradedError",
    "UPoint",
    "USegment",
    "Verdict",
    "all_geodesics",
    "basepoint",
    "check_axioms",
    "concat",
    "coords",
    "dist",
    "embed",
    "explicit_geodesic",
    "identity_context",
    "is_admissible",
    "leq",
    "make_family",
    "member",
    "pgeodesic",
    "project",
    "psi",
    "psi_point",
    "realize_class",
    "restrict_closed",
    "restrict_open",
    "reverse",
    "same_initial_pattern",
    "same_pattern_until",
    "separation",
    "single",
    "stretch_function",
    "urestrict",
    "validate",
    "verify",
    "word",
]

__version__ = "0.1.0"
