"""Reduced simplicial homology over Z, Q and F_p.

Chains use the augmented complex, so degree -1 is spanned by the empty face
and ``{∅}`` has one reduced Betti number in degree -1.  Faces are ordered by
their sorted vertex index tuples; the boundary of ``(v0 < … < vi)`` is
``Σ (-1)^j (v0 … v̂j … vi)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

from .core import SimplicialComplex, InvalidArgument, VoidComplex, Vertex, bits
from .dual import alexander_dual

Matrix = list[list[int]]


def faces_by_dim(K: SimplicialComplex) -> dict[int, list[int]]:
    if K.void:
        raise VoidComplex("the void complex has no chain complex")
    out: dict[int, list[int]] = {}
    for m in K.face_masks():
        out.setdefault(m.bit_count() - 1, []).append(m)
    for d in out:
        out[d].sort(key=bits)
    return out


def _boundary(faces: dict[int, list[int]], i: int) -> Matrix:
    cols = faces.get(i, [])
    rows = faces.get(i - 1, [])
    pos = {m: r for r, m in enumerate(rows)}
    M = [[0] * len(cols) for _ in rows]
    for c, m in enumerate(cols):
        for j, b in enumerate(bits(m)):
            M[pos[m & ~(1 << b)]][c] = -1 if j % 2 else 1
    return M


def boundary_matrix(K: SimplicialComplex, i: int) -> Matrix:
    """Matrix of ``∂_i`` (rows: (i-1)-faces, columns: i-faces)."""
    if K.void:
        raise VoidComplex("the void complex has no chain complex")
    if not -1 <= i <= K.dim:
        raise InvalidArgument(f"degree {i} outside -1..{K.dim}")
    return _boundary(faces_by_dim(K), i)


def _invariant_chain(diag: list[int]) -> list[int]:
    d = sorted(diag)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            d[i], d[j] = g, d[i] * d[j] // g
    return sorted(d)


def smith_normal_form(M: Sequence[Sequence[int]]) -> list[int]:
    """Non-zero invariant factors ``d1 | d2 | …`` of an integer matrix."""
    A = [list(r) for r in M if any(r)]
    diag: list[int] = []
    while A:
        A = [r for r in A if any(r)]
        if not A:
            break
        pi = pj = -1
        for i, row in enumerate(A):
            for j, x in enumerate(row):
                if x and (pi < 0 or abs(x) < abs(A[pi][pj])):
                    pi, pj = i, j
                    if abs(x) == 1:
                        break
            if pi >= 0 and abs(A[pi][pj]) == 1:
                break
        while True:
            p = A[pi][pj]
            moved = False
            for k in range(len(A)):
                if k != pi and A[k][pj]:
                    q = A[k][pj] // p
                    if q:
                        rk, rp = A[k], A[pi]
                        A[k] = [a - q * b for a, b in zip(rk, rp)]
                    if A[k][pj]:
                        pi, moved = k, True
                        break
            if moved:
                continue
            if abs(p) == 1:
                # column pj is clear; column ops would only touch row pi
                break
            for l, x in enumerate(A[pi]):
                if l != pj and x:
                    q = x // p
                    if q:
                        for row in A:
                            if row[pj]:
                                row[l] -= q * row[pj]
                    if A[pi][l]:
                        pj, moved = l, True
                        break
            if not moved:
                break
        diag.append(abs(A[pi][pj]))
        del A[pi]
        for row in A:
            del row[pj]
    return _invariant_chain(diag)


def rank_mod_p(M: Sequence[Sequence[int]], p: int) -> int:
    if p == 2:
        return _rank_f2(M)
    rows = [[x % p for x in r] for r in M]
    rows = [r for r in rows if any(r)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _rank_f2(M: Sequence[Sequence[int]]) -> int:
    basis: dict[int, int] = {}
    for r in M:
        v = 0
        for j, x in enumerate(r):
            if x % 2:
                v |= 1 << j
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    return len(basis)


def parse_coeff(coeff) -> tuple[str, int | None]:
    """``"z"``, ``"q"``, ``"p:<prime>"`` or a prime ``int``."""
    if isinstance(coeff, int):
        kind, p = "p", coeff
    else:
        c = str(coeff).strip().lower()
        if c in ("z", "q"):
            return c, None
        if not c.startswith("p:"):
            raise InvalidArgument(f"unknown coefficient ring {coeff!r}")
        try:
            kind, p = "p", int(c[2:])
        except ValueError:
            raise InvalidArgument(f"unknown coefficient ring {coeff!r}") from None
    if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise InvalidArgument(f"{p} is not prime")
    return kind, p


@dataclass(frozen=True)
class HomologyProfile:
    betti: dict[int, int]
    torsion: dict[int, list[int]] = field(default_factory=dict)
    coeff: str = "z"

    def nonzero(self) -> dict[int, int]:
        return {d: b for d, b in self.betti.items() if b}

    def is_sphere(self, k: int) -> bool:
        return self.nonzero() == {k: 1} and not any(self.torsion.values())

    def is_acyclic(self) -> bool:
        return not self.nonzero() and not any(self.torsion.values())

    def get(self, degree: int) -> int:
        return self.betti.get(degree, 0)


def reduced_homology(K: SimplicialComplex, coeff="z") -> HomologyProfile:
    kind, p = parse_coeff(coeff)
    faces = faces_by_dim(K)
    top = K.dim
    ranks: dict[int, int] = {}
    factors: dict[int, list[int]] = {}
    for i in range(0, top + 1):
        M = _boundary(faces, i)
        if kind == "p":
            ranks[i] = rank_mod_p(M, p)
        else:
            f = smith_normal_form(M)
            ranks[i] = len(f)
            factors[i] = f
    betti = {}
    torsion = {}
    for i in range(-1, top + 1):
        betti[i] = len(faces.get(i, [])) - ranks.get(i, 0) - ranks.get(i + 1, 0)
        if kind == "z":
            torsion[i] = [x for x in factors.get(i + 1, []) if x > 1]
    tag = "z" if kind == "z" else ("q" if kind == "q" else f"p:{p}")
    return HomologyProfile(betti, torsion, tag)


def check_alexander_duality(K: SimplicialComplex, V: Iterable[Vertex] | None = None, coeff="q") -> bool:
    """Compare ``b_i(K^{*V})`` with ``b_{n-i-3}(K)`` over a field, ``n = |V|``.

    A full simplex has a void dual, which passes vacuously.
    """
    if parse_coeff(coeff)[0] == "z":
        raise InvalidArgument("duality is compared over a field (q or p:<prime>)")
    dual = alexander_dual(K, V)
    if dual.void:
        return True
    n = len(dual.ground)
    hk = reduced_homology(K, coeff)
    hd = reduced_homology(dual, coeff)
    return all(hd.get(i) == hk.get(n - i - 3) for i in range(-1, n - 1))
