"""Deciding minimal NH-spheres and minimal NH-balls from the iterated duals.

A complex is a minimal NH-sphere exactly when its iterated duals reach the
boundary of a simplex, and a minimal NH-ball exactly when they reach a
simplex.  Anything else falls into a cycle (up to isomorphism).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

from .core import (
    SimplicialComplex,
    NotPure,
    VoidComplex,
    boundary_simplex,
    fresh_vertices,
    full_simplex,
    intersection,
    is_pure,
    is_strongly_connected,
    join,
    make_complex,
    pure_boundary,
    same_faces,
    union,
)
from .dual import DualTrace, Terminal, iterate_duals


class Verdict(enum.Enum):
    MINIMAL_NH_SPHERE = "minimal_nh_sphere"
    MINIMAL_NH_BALL = "minimal_nh_ball"
    NOT_MINIMAL = "not_minimal"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    trace: DualTrace
    dim: int | None = None
    homotopy_dim: int | None = None
    cycle_entry: int | None = None
    cycle_period: int | None = None

    @property
    def steps_to_terminal(self) -> int:
        return self.trace.steps_to_terminal

    @property
    def is_minimal(self) -> bool:
        return self.verdict is not Verdict.NOT_MINIMAL

    def describe(self) -> str:
        if self.verdict is Verdict.MINIMAL_NH_SPHERE:
            return f"minimal NH-sphere d={self.dim} k={self.homotopy_dim}"
        if self.verdict is Verdict.MINIMAL_NH_BALL:
            return f"minimal NH-ball d={self.dim}"
        if self.trace.terminal is Terminal.CYCLE:
            return f"not minimal (cycle entry={self.cycle_entry} period={self.cycle_period})"
        return "not minimal (step cap reached)"


def classify(K: SimplicialComplex, max_steps: int | None = None) -> Classification:
    if K.void:
        raise VoidComplex("cannot classify the void complex")
    trace = iterate_duals(K, max_steps)
    if trace.terminal is Terminal.FULL_SIMPLEX:
        return Classification(Verdict.MINIMAL_NH_BALL, trace, dim=K.dim)
    if trace.terminal is Terminal.BOUNDARY_SIMPLEX:
        return Classification(Verdict.MINIMAL_NH_SPHERE, trace, dim=K.dim, homotopy_dim=K.m - 2)
    return Classification(Verdict.NOT_MINIMAL, trace,
                          cycle_entry=trace.cycle_entry, cycle_period=trace.cycle_period)


def homotopy_dim_from_trace(trace: DualTrace) -> int:
    """Unwind ``dim_h(K) = |V_K| - 3 - dim_h(K*)`` back from a sphere terminal."""
    if trace.terminal is not Terminal.BOUNDARY_SIMPLEX:
        raise ValueError("trace does not end at the boundary of a simplex")
    h = len(trace.last.support) - 2
    for step in reversed(trace.steps[:-1]):
        h = len(step.support) - 3 - h
    return h


@dataclass
class Report:
    """Named pass/fail checks plus free-form notes."""

    checks: dict[str, bool] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    witness: object = None

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def _top_generated(sub: SimplicialComplex, K: SimplicialComplex) -> bool:
    facets = {frozenset(f) for f in K.facet_sets()}
    return all(frozenset(f) in facets for f in sub.facet_sets())


def verify_decomposition(S: SimplicialComplex, B: SimplicialComplex, L: SimplicialComplex) -> Report:
    """Necessary conditions for ``S = B + L`` with ``B ∩ L = ∂L``.

    Does not certify that ``L`` is a combinatorial ball or ``B`` an NH-ball.
    """
    rep = Report()
    if S.void or B.void or L.void:
        rep.checks["non_void"] = False
        return rep
    rep.checks["b_top_generated"] = _top_generated(B, S)
    rep.checks["l_top_generated"] = _top_generated(L, S)
    rep.checks["union"] = same_faces(union(B, L), S)
    pure = is_pure(L)
    rep.checks["l_pure"] = pure
    rep.checks["l_strongly_connected"] = is_strongly_connected(L)
    if pure:
        cap = intersection(B, L)
        bd = pure_boundary(L)
        rep.checks["intersection_is_boundary"] = same_faces(cap, bd)
        if bd.m == 1 and bd.facets == (0,):
            rep.notes.append("∂L = {∅} for a 0-dimensional L; B ∩ L = {∅} counts as a match")
    else:
        rep.checks["intersection_is_boundary"] = False
    return rep


def vertex_minimal_ball_equivalences(B: SimplicialComplex) -> Report:
    """Evaluate the three vertex-minimal ball conditions on a pure complex.

    ``vertex_count``: ``|V_B| <= d + 2``.
    ``starring``: ``B`` equals ``∂τ ∗ Δ(rest)`` for some split of its vertices
    (a full simplex counts, as the starring of a vertex).
    ``complement``: the remaining facets of ``∂Δ^{d+1}`` on ``V_B`` (padded by
    a fresh vertex if needed) form ``L`` with ``B + L = ∂Δ^{d+1}`` and
    ``B ∩ L = ∂L``.
    """
    if B.void:
        raise VoidComplex("void input")
    if not is_pure(B):
        raise NotPure("the ball equivalences need a pure complex")
    d = B.dim
    vs = B.support
    rep = Report()
    rep.checks["vertex_count"] = len(vs) <= d + 2

    witness = None
    if len(B.facets) == 1:
        witness = (vs[0],) if vs else ()
    else:
        for r in range(2, min(d + 1, len(vs)) + 1):
            for tau in itertools.combinations(vs, r):
                rest = [v for v in vs if v not in tau]
                if same_faces(B, join(boundary_simplex(tau), full_simplex(rest))):
                    witness = tau
                    break
            if witness is not None:
                break
    rep.checks["starring"] = witness is not None
    rep.witness = witness

    ok = False
    if len(vs) <= d + 2:
        W = list(vs) + fresh_vertices(vs, d + 2 - len(vs), prefix="w")
        sphere = boundary_simplex(W)
        b_facets = {frozenset(f) for f in B.facet_sets()}
        s_facets = {frozenset(f) for f in sphere.facet_sets()}
        rest = [f for f in s_facets if f not in b_facets]
        if b_facets <= s_facets and rest:
            L = make_complex(None, [tuple(f) for f in rest])
            ok = same_faces(union(B, L), sphere) and same_faces(intersection(B, L), pure_boundary(L))
    rep.checks["complement"] = ok
    return rep
