"""Exhaustive lists of minimal NH-spheres and minimal NH-balls per dimension.

The recursive census inverts the bijection ``S -> S*``: every minimal
object of dimension ``d`` that is not a simplex (or ``∂Δ^{d+1}``) is
``S̃^τ`` for a smaller minimal object ``S̃`` and a fresh simplex ``τ``
bringing the vertex count up to ``d + 2``.

``brute_force_census`` is the independent check: it enumerates every complex
on a bounded number of vertices up to isomorphism and classifies each one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .classify import Verdict, classify
from .core import (
    CanonicalForm,
    ComplexError,
    InvalidArgument,
    SimplicialComplex,
    bits,
    boundary_simplex,
    canonical_complex,
    canonical_form,
    fresh_vertices,
    full_simplex,
)
from .dual import dual_rel_simplex

MAX_BRUTE_FORCE_VERTICES = 6


class ResourceCap(ComplexError):
    pass


@dataclass(frozen=True)
class CensusEntry:
    complex: SimplicialComplex
    kind: str
    d: int
    k: int | None
    construction: str

    @property
    def form(self) -> CanonicalForm:
        return canonical_form(self.complex)


def _base(K: SimplicialComplex) -> SimplicialComplex:
    return canonical_complex(K)


@lru_cache(maxsize=None)
def _spheres(d: int, k: int) -> tuple[CensusEntry, ...]:
    if k == d:
        K = _base(boundary_simplex(range(d + 2)))
        return (CensusEntry(K, "sphere", d, k, f"boundary of the {d + 1}-simplex"),)
    found: dict[CanonicalForm, CensusEntry] = {}
    h = d - k - 1
    for j in range(h, d):
        for src in _spheres(j, h):
            tau = fresh_vertices(src.complex.support, d - j)
            K = dual_rel_simplex(src.complex, tau)
            form = canonical_form(K)
            if form not in found:
                how = f"dual of sphere(d={j},k={h}) {_brief(src.complex)} rel. {d - j}-vertex simplex"
                found[form] = CensusEntry(canonical_complex(K), "sphere", d, k, how)
    return tuple(found[f] for f in sorted(found))


@lru_cache(maxsize=None)
def _balls(d: int) -> tuple[CensusEntry, ...]:
    found: dict[CanonicalForm, CensusEntry] = {}
    simplex = _base(full_simplex(range(d + 1)))
    found[canonical_form(simplex)] = CensusEntry(simplex, "ball", d, None, f"the {d}-simplex")
    for i in range(d):
        for src in _balls(i):
            size = d + 2 - len(src.complex.support)
            tau = fresh_vertices(src.complex.support, size)
            K = dual_rel_simplex(src.complex, tau)
            form = canonical_form(K)
            if form not in found:
                how = f"dual of ball(d={i}) {_brief(src.complex)} rel. {size}-vertex simplex"
                found[form] = CensusEntry(canonical_complex(K), "ball", d, None, how)
    return tuple(found[f] for f in sorted(found))


def _brief(K: SimplicialComplex) -> str:
    return "[" + " ".join("{" + ",".join(map(str, f)) + "}" for f in K.facet_sets()) + "]"


def census_spheres(d: int, k: int) -> list[CensusEntry]:
    """All minimal NH-spheres of dimension ``d`` and homotopy dimension ``k``, up to isomorphism."""
    if d < 0 or k < 0 or k > d:
        raise InvalidArgument(f"need 0 <= k <= d, got d={d}, k={k}")
    return list(_spheres(d, k))


def census_balls(d: int) -> list[CensusEntry]:
    """All minimal NH-balls of dimension ``d``, up to isomorphism."""
    if d < 0:
        raise InvalidArgument(f"need d >= 0, got {d}")
    return list(_balls(d))


# brute force ---------------------------------------------------------------

def _perm_weights(n: int) -> np.ndarray:
    """Row per vertex permutation: weight of each permuted facet code.

    Codes are the non-empty subsets of ``range(n)``; code ``c`` (1-based mask)
    carries the bit ``1 << (U - c)`` so smaller codes are more significant.
    """
    U = (1 << n) - 1
    perms = list(itertools.permutations(range(n)))
    T = np.zeros((len(perms), U + 1), dtype=np.uint64)
    for r, perm in enumerate(perms):
        for c in range(1, U + 1):
            img = 0
            for i in bits(c):
                img |= 1 << perm[i]
            T[r, c] = np.uint64(1) << np.uint64(U - img)
    return T


def enumerate_antichains(n: int):
    """Yield one facet antichain (as masks) per isomorphism class on ``n`` vertices.

    Orderly generation: a family is canonical when its code set is maximal
    (smaller codes first) over all vertex permutations, and removing the
    largest code of a canonical family leaves a canonical family, so each
    class is reached exactly once by appending codes in increasing order.
    The empty family (the complex ``{∅}``) comes first.
    """
    if n > MAX_BRUTE_FORCE_VERTICES:
        raise ResourceCap(f"brute force limited to {MAX_BRUTE_FORCE_VERTICES} vertices")
    U = (1 << n) - 1
    T = _perm_weights(n)
    stack = [((), np.zeros(T.shape[0], dtype=np.uint64), 0)]
    while stack:
        family, keys, last = stack.pop()
        yield family
        for c in range(last + 1, U + 1):
            if any((a & c) in (a, c) for a in family):
                continue
            child = keys | T[:, c]
            if child.max() == child[0]:
                stack.append((family + (c,), child, c))


def brute_force_census(n_max: int) -> dict[tuple, list[CanonicalForm]]:
    """Classify every complex with at most ``n_max`` vertices.

    Keys are ``("sphere", d, k)`` and ``("ball", d, None)``; values are the
    sorted canonical forms found.
    """
    if n_max > MAX_BRUTE_FORCE_VERTICES:
        raise ResourceCap(f"brute force limited to {MAX_BRUTE_FORCE_VERTICES} vertices")
    if n_max < 0:
        raise InvalidArgument("n_max must be non-negative")
    out: dict[tuple, set] = {}
    for family in enumerate_antichains(n_max):
        K = SimplicialComplex._from_masks(tuple(range(n_max)), family)
        c = classify(K)
        if c.verdict is Verdict.MINIMAL_NH_SPHERE:
            key = ("sphere", c.dim, c.homotopy_dim)
        elif c.verdict is Verdict.MINIMAL_NH_BALL:
            key = ("ball", c.dim, None)
        else:
            continue
        out.setdefault(key, set()).add(canonical_form(K))
    return {k: sorted(v) for k, v in sorted(out.items(), key=lambda kv: (kv[0][0], kv[0][1], kv[0][2] or 0))}
