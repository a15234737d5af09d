"""Alexander duals relative to a ground set, and the iterated-dual sequence."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .core import (
    SimplicialComplex,
    InvalidArgument,
    VoidComplex,
    GroundViolation,
    Vertex,
    bits,
    boundary_simplex,
    canonical_form,
    cheap_invariant,
    full_simplex,
    is_boundary_of_simplex,
    is_empty_face_complex,
    is_full_simplex,
    join,
    reground,
    sort_vertices,
    union,
    void_complex,
)


def _minimal(masks: Iterable[int]) -> list[int]:
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda x: x.bit_count()):
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    return kept


def minimal_transversals(edges: Iterable[int]) -> list[int]:
    """Berge's incremental dualization of a hypergraph given as bitmasks."""
    trans = [0]
    for e in sorted(set(edges), key=lambda x: x.bit_count()):
        if e == 0:
            return []
        hit = [t for t in trans if t & e]
        grow = [t | (1 << i) for t in trans if not t & e for i in bits(e)]
        trans = _minimal(hit + grow)
    return trans


def _check_ground(K: SimplicialComplex, V) -> SimplicialComplex:
    if K.void:
        raise VoidComplex("the void complex has no Alexander dual here")
    if V is None:
        return reground(K)
    V = sort_vertices(V)
    if not set(K.support) <= set(V):
        raise GroundViolation("ground set must contain the support")
    return reground(K, V)


def minimal_nonfaces(K: SimplicialComplex, V: Iterable[Vertex] | None = None,
                     brute_force: bool = False) -> list[tuple]:
    """Inclusion-minimal subsets of ``V`` that are not faces of ``K``.

    A set is a non-face exactly when it meets the complement of every facet,
    so these are the minimal transversals of the complement hypergraph.
    ``brute_force`` scans every subset of ``V`` instead.
    """
    K = _check_ground(K, V)
    n = len(K.ground)
    full = (1 << n) - 1
    if brute_force:
        found = _minimal(s for s in range(1 << n) if not K.contains_mask(s))
    else:
        found = minimal_transversals(full & ~f for f in K.facets)
    return [K.labels(s) for s in sorted(found, key=lambda x: (x.bit_count(), bits(x)))]


def alexander_dual(K: SimplicialComplex, V: Iterable[Vertex] | None = None) -> SimplicialComplex:
    """``K^{*V} = {σ ⊆ V : V − σ ∉ K}``; ``V`` defaults to the support of ``K``.

    The result lives over ground ``V`` and is void exactly when ``K = Δ(V)``.
    """
    K = _check_ground(K, V)
    full = (1 << len(K.ground)) - 1
    nonfaces = minimal_transversals(full & ~f for f in K.facets)
    if not nonfaces:
        return void_complex(K.ground)
    return SimplicialComplex._from_masks(K.ground, [full & ~s for s in nonfaces])


def alexander_dual_bruteforce(K: SimplicialComplex, V: Iterable[Vertex] | None = None) -> SimplicialComplex:
    """Literal subset scan of the dual's definition (test oracle)."""
    K = _check_ground(K, V)
    n = len(K.ground)
    full = (1 << n) - 1
    faces = [s for s in range(1 << n) if not K.contains_mask(full & ~s)]
    if not faces:
        return void_complex(K.ground)
    return SimplicialComplex._from_masks(K.ground, faces)


def dual_rel_simplex(K: SimplicialComplex, tau: Iterable[Vertex] = (), method: str = "direct") -> SimplicialComplex:
    """``K^τ``: the dual of ``K`` relative to ``V_K ∪ τ``.

    ``method="formula"`` assembles ``∂τ ∗ Δ_K + τ ∗ K*`` instead of dualizing
    over the extended ground; both give the same complex.
    """
    if K.void:
        raise VoidComplex("the void complex has no Alexander dual here")
    tau = sort_vertices(tau)
    if set(tau) & set(K.support):
        raise InvalidArgument("τ must be disjoint from the complex")
    if method == "direct":
        return alexander_dual(K, K.support + tau)
    if method != "formula":
        raise InvalidArgument(f"unknown method {method!r}")
    star = alexander_dual(K)
    if not tau:
        return star
    res = union(join(boundary_simplex(tau), full_simplex(K.support)), join(full_simplex(tau), star))
    return reground(res, K.support + tau)


class Terminal(enum.Enum):
    FULL_SIMPLEX = "full_simplex"
    BOUNDARY_SIMPLEX = "boundary_simplex"
    CYCLE = "cycle"
    STEP_CAP = "step_cap"


@dataclass(frozen=True)
class DualTrace:
    """``K = K^{*(0)}, K^{*(1)}, …`` with the reason the sequence stopped.

    ``simplex_dim`` is ``d`` for a ``Δ^d`` or ``∂Δ^d`` terminal (``{∅}`` counts
    as ``∂Δ^0``).  ``cycle_entry``/``cycle_period`` describe a recurrence up
    to isomorphism.
    """

    steps: tuple[SimplicialComplex, ...]
    terminal: Terminal
    simplex_dim: int | None = None
    cycle_entry: int | None = None
    cycle_period: int | None = None

    @property
    def converged(self) -> bool:
        return self.terminal in (Terminal.FULL_SIMPLEX, Terminal.BOUNDARY_SIMPLEX)

    @property
    def steps_to_terminal(self) -> int:
        return len(self.steps) - 1

    @property
    def last(self) -> SimplicialComplex:
        return self.steps[-1]


def _terminal_of(K: SimplicialComplex) -> tuple[Terminal, int] | None:
    # {∅} is ∂Δ^0 here, never Δ(∅)
    if is_empty_face_complex(K):
        return Terminal.BOUNDARY_SIMPLEX, 0
    if is_full_simplex(K):
        return Terminal.FULL_SIMPLEX, K.dim
    if is_boundary_of_simplex(K):
        return Terminal.BOUNDARY_SIMPLEX, K.dim + 1
    return None


def iterate_duals(K: SimplicialComplex, max_steps: int | None = None) -> DualTrace:
    """Dualize repeatedly, each time relative to the current support."""
    if K.void:
        raise VoidComplex("cannot iterate duals of the void complex")
    if max_steps is None:
        max_steps = len(K.support) + 2
    steps = [K]
    invariants = [cheap_invariant(K)]
    forms: dict[int, tuple] = {}

    def form(i: int) -> tuple:
        if i not in forms:
            forms[i] = canonical_form(steps[i])
        return forms[i]

    while True:
        cur = steps[-1]
        hit = _terminal_of(cur)
        if hit is not None:
            return DualTrace(tuple(steps), hit[0], simplex_dim=hit[1])
        last = len(steps) - 1
        for i in range(last):
            if invariants[i] == invariants[last] and form(i) == form(last):
                return DualTrace(tuple(steps), Terminal.CYCLE, cycle_entry=i, cycle_period=last - i)
        if last >= max_steps:
            return DualTrace(tuple(steps), Terminal.STEP_CAP)
        nxt = alexander_dual(cur, cur.support)
        steps.append(nxt)
        invariants.append(cheap_invariant(nxt))
