"""Facet-based simplicial complexes and their elementary operations.

A complex is stored as a sorted ground set of vertex labels plus an antichain
of facets.  Each facet is an integer bitmask over the ground set (bit ``i`` is
``ground[i]``), which keeps subset tests cheap.

Two degenerate values are kept apart on purpose:

* the *void* complex, which has no faces at all (``void=True``, no facets);
* ``{∅}``, the complex whose only face is the empty simplex (one facet ``0``).

Every non-void complex contains the empty face.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Iterator, Sequence

Vertex = Hashable
Simplex = tuple
CanonicalForm = tuple


class ComplexError(Exception):
    """Base class for domain errors raised by this package."""


class GroundViolation(ComplexError, ValueError):
    pass


class InvalidArgument(ComplexError, ValueError):
    pass


class JoinOverlap(InvalidArgument):
    pass


class FaceNotPresent(InvalidArgument):
    pass


class NotPure(ComplexError, ValueError):
    pass


class VoidComplex(ComplexError, ValueError):
    pass


def vertex_key(v: Vertex):
    """Total order on vertex labels: numbers (and digit strings) first, numerically."""
    if isinstance(v, bool):
        return (2, str(v), "")
    if isinstance(v, int):
        return (0, v, "")
    s = str(v)
    if s.isdigit():
        return (0, int(s), s)
    return (1, 0, s)


def sort_vertices(vs: Iterable[Vertex]) -> tuple:
    return tuple(sorted(set(vs), key=vertex_key))


def bits(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def maximal_masks(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal elements of a family of bitmasks (duplicates dropped)."""
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda x: -x.bit_count()):
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return kept


@dataclass(frozen=True)
class SimplicialComplex:
    """A finite abstract simplicial complex over an explicit ground set.

    Build instances with :func:`make_complex` (or the helpers below); the raw
    constructor trusts its arguments.
    """

    ground: tuple
    facets: tuple[int, ...]
    void: bool = False

    @classmethod
    def _from_masks(cls, ground: tuple, masks: Iterable[int], void: bool = False) -> "SimplicialComplex":
        if void:
            return cls(ground, (), True)
        masks = maximal_masks(masks)
        if not masks:
            masks = [0]
        return cls(ground, tuple(sorted(masks, key=bits)), False)

    @cached_property
    def index(self) -> dict:
        return {v: i for i, v in enumerate(self.ground)}

    def mask(self, face: Iterable[Vertex]) -> int:
        m = 0
        idx = self.index
        for v in face:
            try:
                m |= 1 << idx[v]
            except KeyError:
                raise GroundViolation(f"vertex {v!r} is not in the ground set") from None
        return m

    def labels(self, mask: int) -> tuple:
        return tuple(self.ground[i] for i in bits(mask))

    def facet_sets(self) -> tuple[tuple, ...]:
        return tuple(self.labels(f) for f in self.facets)

    @cached_property
    def support_mask(self) -> int:
        m = 0
        for f in self.facets:
            m |= f
        return m

    @property
    def support(self) -> tuple:
        return self.labels(self.support_mask)

    @property
    def dim(self) -> int | None:
        if self.void:
            return None
        return max(f.bit_count() for f in self.facets) - 1

    @property
    def m(self) -> int:
        return len(self.facets)

    def contains_mask(self, mask: int) -> bool:
        return any(mask & ~f == 0 for f in self.facets)

    def __contains__(self, face) -> bool:
        face = tuple(face)
        if any(v not in self.index for v in face):
            return False
        return self.contains_mask(self.mask(face))

    def face_masks(self) -> set[int]:
        """Every face (including ∅ for non-void complexes) as a bitmask."""
        out: set[int] = set()
        for f in self.facets:
            if f in out:
                continue
            fb = bits(f)
            for r in range(len(fb) + 1):
                for combo in itertools.combinations(fb, r):
                    out.add(sum(1 << i for i in combo))
        return out

    def faces(self) -> Iterator[tuple]:
        for m in sorted(self.face_masks(), key=lambda x: (x.bit_count(), bits(x))):
            yield self.labels(m)

    def __repr__(self) -> str:
        if self.void:
            return "SimplicialComplex(void)"
        body = ", ".join("{" + ",".join(map(str, f)) + "}" for f in self.facet_sets())
        return f"SimplicialComplex([{body}])"


# construction -------------------------------------------------------------

def make_complex(ground: Iterable[Vertex] | None, faces: Iterable[Iterable[Vertex]],
                 void: bool = False) -> SimplicialComplex:
    """Complex generated by ``faces``, reduced to its facet antichain.

    ``ground=None`` uses the union of the faces.  An empty face list yields
    ``{∅}`` unless ``void`` is requested.
    """
    faces = [tuple(f) for f in faces]
    if ground is None:
        ground = sort_vertices(v for f in faces for v in f)
    else:
        ground = sort_vertices(ground)
    if void:
        if faces:
            raise InvalidArgument("a void complex has no faces")
        return SimplicialComplex(ground, (), True)
    probe = SimplicialComplex(ground, (0,))
    masks = []
    for f in faces:
        if len(set(f)) != len(f):
            raise InvalidArgument(f"face {f!r} repeats a vertex")
        masks.append(probe.mask(f))
    return SimplicialComplex._from_masks(ground, masks)


def void_complex(ground: Iterable[Vertex] = ()) -> SimplicialComplex:
    return SimplicialComplex(sort_vertices(ground), (), True)


def empty_face_complex(ground: Iterable[Vertex] = ()) -> SimplicialComplex:
    """The complex ``{∅}``."""
    return SimplicialComplex(sort_vertices(ground), (0,))


def full_simplex(vertices: Iterable[Vertex]) -> SimplicialComplex:
    vs = sort_vertices(vertices)
    return SimplicialComplex(vs, ((1 << len(vs)) - 1,))


def boundary_simplex(vertices: Iterable[Vertex]) -> SimplicialComplex:
    vs = sort_vertices(vertices)
    if not vs:
        raise InvalidArgument("the empty simplex has no boundary complex")
    full = (1 << len(vs)) - 1
    return SimplicialComplex._from_masks(vs, [full ^ (1 << i) for i in range(len(vs))])


def reground(K: SimplicialComplex, ground: Iterable[Vertex] | None = None) -> SimplicialComplex:
    """Same faces over a new ground set (default: the support)."""
    if ground is None:
        ground = K.support
    ground = sort_vertices(ground)
    if ground == K.ground:
        return K
    new_index = {v: i for i, v in enumerate(ground)}
    missing = [v for v in K.support if v not in new_index]
    if missing:
        raise GroundViolation(f"ground set misses support vertices {missing!r}")
    if K.void:
        return SimplicialComplex(ground, (), True)
    remap = {i: new_index[v] for i, v in enumerate(K.ground) if v in new_index}
    masks = [sum(1 << remap[i] for i in bits(f)) for f in K.facets]
    return SimplicialComplex(ground, tuple(sorted(masks, key=bits)), False)


def relabel(K: SimplicialComplex, mapping: dict) -> SimplicialComplex:
    """Apply an injective vertex relabeling (unmapped vertices keep their label)."""
    new_ground = [mapping.get(v, v) for v in K.ground]
    if len(set(new_ground)) != len(new_ground):
        raise InvalidArgument("relabeling is not injective on the ground set")
    return make_complex(new_ground, [[mapping.get(v, v) for v in f] for f in K.facet_sets()], void=K.void)


def _label_sets(K: SimplicialComplex) -> list[frozenset]:
    return [frozenset(f) for f in K.facet_sets()]


def _from_sets(ground: Iterable[Vertex], sets: Iterable[Iterable[Vertex]]) -> SimplicialComplex:
    ground = sort_vertices(ground)
    idx = {v: i for i, v in enumerate(ground)}
    return SimplicialComplex._from_masks(ground, [sum(1 << idx[v] for v in s) for s in sets])


def same_faces(K: SimplicialComplex, L: SimplicialComplex) -> bool:
    """Equality of face sets, ignoring ground-set padding."""
    if K.void or L.void:
        return K.void and L.void
    return set(_label_sets(K)) == set(_label_sets(L))


# basic predicates -----------------------------------------------------------

def dim(K: SimplicialComplex) -> int | None:
    return K.dim


def facet_count(K: SimplicialComplex) -> int:
    return K.m


def support(K: SimplicialComplex) -> tuple:
    return K.support


def is_pure(K: SimplicialComplex) -> bool:
    if K.void:
        return True
    return len({f.bit_count() for f in K.facets}) == 1


def is_empty_face_complex(K: SimplicialComplex) -> bool:
    return not K.void and K.facets == (0,)


def is_full_simplex(K: SimplicialComplex) -> bool:
    return not K.void and len(K.facets) == 1


def is_boundary_of_simplex(K: SimplicialComplex) -> bool:
    if K.void:
        return False
    s = K.support_mask
    n = s.bit_count()
    if n == 0:
        return True
    return len(K.facets) == n and all(f.bit_count() == n - 1 for f in K.facets)


# combinations ---------------------------------------------------------------

def union(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """``K + L``; the void complex is the identity."""
    ground = sort_vertices(K.ground + L.ground)
    if K.void and L.void:
        return void_complex(ground)
    sets = [] if K.void else _label_sets(K)
    sets += [] if L.void else _label_sets(L)
    return _from_sets(ground, sets)


def intersection(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    ground = sort_vertices(K.ground + L.ground)
    if K.void or L.void:
        return void_complex(ground)
    return _from_sets(ground, [a & b for a in _label_sets(K) for b in _label_sets(L)])


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """``K ∗ L`` for complexes with disjoint supports."""
    overlap = set(K.support) & set(L.support)
    if overlap:
        raise JoinOverlap(f"supports share vertices {sorted(overlap, key=vertex_key)!r}")
    ground = sort_vertices(K.ground + L.ground)
    if K.void or L.void:
        return void_complex(ground)
    return _from_sets(ground, [a | b for a in _label_sets(K) for b in _label_sets(L)])


def _require_face(K: SimplicialComplex, sigma: Iterable[Vertex]) -> int:
    sigma = tuple(sigma)
    if K.void or any(v not in K.index for v in sigma):
        raise FaceNotPresent(f"{sigma!r} is not a face of the complex")
    m = K.mask(sigma)
    if not K.contains_mask(m):
        raise FaceNotPresent(f"{sigma!r} is not a face of the complex")
    return m


def link(K: SimplicialComplex, sigma: Iterable[Vertex]) -> SimplicialComplex:
    s = _require_face(K, sigma)
    masks = maximal_masks(f & ~s for f in K.facets if s & ~f == 0)
    return reground(SimplicialComplex._from_masks(K.ground, masks))


def star(K: SimplicialComplex, sigma: Iterable[Vertex]) -> SimplicialComplex:
    s = _require_face(K, sigma)
    return reground(SimplicialComplex._from_masks(K.ground, [f for f in K.facets if s & ~f == 0]))


def deletion(K: SimplicialComplex, v: Vertex) -> SimplicialComplex:
    """``K - v``: all faces avoiding ``v``."""
    if K.void or v not in K.index or not (K.support_mask >> K.index[v]) & 1:
        raise FaceNotPresent(f"{v!r} is not a vertex of the complex")
    b = 1 << K.index[v]
    return reground(SimplicialComplex._from_masks(K.ground, [f & ~b for f in K.facets]))


def nerve(K: SimplicialComplex) -> SimplicialComplex:
    """Simplicial nerve; vertex ``i`` stands for ``K.facets[i]``.

    ``{∅}`` is sent to a single vertex so the nerve always has ``m(K)`` vertices.
    """
    if K.void:
        raise VoidComplex("the void complex has no nerve")
    m = len(K.facets)
    groups = []
    for i in bits(K.support_mask):
        groups.append(sum(1 << j for j, f in enumerate(K.facets) if (f >> i) & 1))
    # isolated nerve vertices only arise from ∅ itself
    groups += [1 << j for j, f in enumerate(K.facets) if f == 0]
    return SimplicialComplex._from_masks(tuple(range(m)), groups)


def elementary_starring(K: SimplicialComplex, tau: Iterable[Vertex], a: Vertex) -> SimplicialComplex:
    """``(τ, a)K``: replace ``st(τ, K)`` by ``a ∗ ∂τ ∗ lk(τ, K)``."""
    tau = tuple(tau)
    if not tau:
        raise InvalidArgument("starring needs a non-empty simplex")
    try:
        t = _require_face(K, tau)
    except FaceNotPresent as exc:
        raise InvalidArgument(str(exc)) from None
    if a in K.support:
        raise InvalidArgument(f"new vertex {a!r} already belongs to the complex")
    ground = sort_vertices(K.ground + (a,))
    labels = frozenset(K.labels(t))
    out = []
    for f in _label_sets(K):
        if labels <= f:
            rest = f - labels
            out.extend((labels - {x}) | rest | {a} for x in labels)
        else:
            out.append(f)
    return _from_sets(ground, out)


def pure_boundary(K: SimplicialComplex) -> SimplicialComplex:
    """Complex generated by the ridges lying in exactly one facet (void if none)."""
    if K.void:
        raise VoidComplex("the void complex has no boundary")
    if not is_pure(K):
        raise NotPure("boundary is only defined for pure complexes")
    counts: dict[int, int] = {}
    for f in K.facets:
        for i in bits(f):
            r = f & ~(1 << i)
            counts[r] = counts.get(r, 0) + 1
    ridges = [r for r, c in counts.items() if c == 1]
    if not ridges:
        return void_complex(K.support)
    return reground(SimplicialComplex._from_masks(K.ground, ridges), K.support)


def is_strongly_connected(K: SimplicialComplex) -> bool:
    if K.void:
        raise VoidComplex("strong connectivity is undefined for the void complex")
    fs = K.facets
    n = len(fs)
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j in seen:
                continue
            common = (fs[i] & fs[j]).bit_count()
            if common == fs[i].bit_count() - 1 or common == fs[j].bit_count() - 1:
                seen.add(j)
                stack.append(j)
    return len(seen) == n


def vertex_minimal_extension(K: SimplicialComplex, u: Vertex) -> SimplicialComplex:
    """``Δ_K + u ∗ K``."""
    if K.void:
        raise VoidComplex("extension of the void complex")
    if u in K.support:
        raise InvalidArgument(f"{u!r} already belongs to the complex")
    cone = join(full_simplex([u]), K)
    return union(full_simplex(K.support), cone)


def eta_extension(eta: Iterable[Vertex], V: Iterable[Vertex], K: SimplicialComplex) -> SimplicialComplex:
    """``∂η ∗ Δ(V) + η ∗ K``."""
    eta = sort_vertices(eta)
    V = sort_vertices(V)
    if K.void:
        raise InvalidArgument("extension of the void complex")
    if not eta:
        raise InvalidArgument("η must be non-empty")
    if not set(K.support) <= set(V):
        raise InvalidArgument("V must contain the support of K")
    if set(eta) & set(V):
        raise InvalidArgument("η must be disjoint from V")
    return union(join(boundary_simplex(eta), full_simplex(V)), join(full_simplex(eta), K))


# canonical forms ------------------------------------------------------------

def _refine(colors: list[int], incidence: list[list[int]], facets: list[tuple[int, ...]]) -> list[int]:
    while True:
        fsig = [tuple(sorted(colors[v] for v in f)) for f in facets]
        sigs = [(colors[v], tuple(sorted(fsig[j] for j in incidence[v]))) for v in range(len(colors))]
        ranks = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colors)):
            return new
        colors = new


def _twin_classes(n: int, masks: list[int]) -> list[int]:
    """Representative of each vertex under 'transposition is an automorphism'."""
    rep = list(range(n))
    fset = set(masks)
    for u in range(n):
        if rep[u] != u:
            continue
        bu = 1 << u
        for v in range(u + 1, n):
            if rep[v] != v:
                continue
            bv = 1 << v
            swap = bu | bv
            if all((f ^ swap if (f & swap) in (bu, bv) else f) in fset for f in masks):
                rep[v] = u
    return rep


def canonical_form(K: SimplicialComplex) -> CanonicalForm:
    """Relabeling-invariant facet list over vertices ``0..n-1`` of the support.

    Individualization/refinement search; transpositions that are automorphisms
    prune sibling branches.  ``()`` is the void complex and ``((),)`` is ``{∅}``.
    """
    if K.void:
        return ()
    verts = bits(K.support_mask)
    n = len(verts)
    if n == 0:
        return ((),)
    pos = {v: i for i, v in enumerate(verts)}
    facets = [tuple(pos[i] for i in bits(f)) for f in K.facets]
    masks = [sum(1 << i for i in f) for f in facets]
    incidence: list[list[int]] = [[] for _ in range(n)]
    for j, f in enumerate(facets):
        for v in f:
            incidence[v].append(j)
    twins = _twin_classes(n, masks)
    best: list = [None]

    def search(colors: list[int]) -> None:
        colors = _refine(colors, incidence, facets)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        if len(cells) == n:
            cert = tuple(sorted(tuple(sorted(colors[v] for v in f)) for f in facets))
            if best[0] is None or cert < best[0]:
                best[0] = cert
            return
        target = min((c for c, vs in cells.items() if len(vs) > 1), key=lambda c: (len(cells[c]), c))
        tried = set()
        for v in cells[target]:
            if twins[v] in tried:
                continue
            tried.add(twins[v])
            nc = [2 * c for c in colors]
            nc[v] -= 1
            search(nc)

    search([0] * n)
    return best[0]


def canonical_complex(K: SimplicialComplex) -> SimplicialComplex:
    """``K`` relabeled onto integer vertices following its canonical form."""
    form = canonical_form(K)
    if not form:
        return void_complex()
    n = max((max(f) + 1 for f in form if f), default=0)
    return SimplicialComplex._from_masks(tuple(range(n)), [sum(1 << i for i in f) for f in form])


def complex_from_form(form: CanonicalForm) -> SimplicialComplex:
    if not form:
        return void_complex()
    n = max((max(f) + 1 for f in form if f), default=0)
    return SimplicialComplex._from_masks(tuple(range(n)), [sum(1 << i for i in f) for f in form])


def cheap_invariant(K: SimplicialComplex) -> tuple:
    if K.void:
        return ("void",)
    return (K.support_mask.bit_count(), tuple(sorted(f.bit_count() for f in K.facets)))


def is_isomorphic(K: SimplicialComplex, L: SimplicialComplex) -> bool:
    if cheap_invariant(K) != cheap_invariant(L):
        return False
    return canonical_form(K) == canonical_form(L)


def fresh_vertices(taken: Iterable[Vertex], count: int, prefix: str = "t") -> list[str]:
    """``count`` labels ``prefix0, prefix1, …`` not present in ``taken``."""
    taken = set(taken)
    out: list[str] = []
    i = 0
    while len(out) < count:
        name = f"{prefix}{i}"
        if name not in taken:
            out.append(name)
        i += 1
    return out


def subsets(vs: Sequence[Vertex]) -> Iterator[tuple]:
    for r in range(len(vs) + 1):
        yield from itertools.combinations(vs, r)
