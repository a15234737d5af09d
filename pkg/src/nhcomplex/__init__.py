"""Minimal non-homogeneous balls and spheres via iterated Alexander duals."""

from .core import (
    ComplexError,
    FaceNotPresent,
    GroundViolation,
    InvalidArgument,
    JoinOverlap,
    NotPure,
    SimplicialComplex,
    VoidComplex,
    boundary_simplex,
    canonical_form,
    deletion,
    elementary_starring,
    empty_face_complex,
    full_simplex,
    is_isomorphic,
    join,
    link,
    make_complex,
    nerve,
    star,
    void_complex,
)
from .dual import DualTrace, Terminal, alexander_dual, dual_rel_simplex, iterate_duals, minimal_nonfaces
from .classify import Classification, Verdict, classify
from .homology import check_alexander_duality, reduced_homology, smith_normal_form
from .census import census_balls, census_spheres, brute_force_census
from .formats import ParseError, parse_complex, serialize

__version__ = "0.1.0"
