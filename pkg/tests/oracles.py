"""Slow, definition-level reference computations used to check the library.

Everything here works on explicit sets of faces (frozensets of labels) and
shares no code with the package.
"""

import itertools
import random
from fractions import Fraction
from math import gcd


def powerset(vs):
    vs = list(vs)
    for r in range(len(vs) + 1):
        for c in itertools.combinations(vs, r):
            yield frozenset(c)


def faces_of(facets):
    out = set()
    for f in facets:
        out.update(powerset(f))
    return out


def maximal(sets):
    sets = set(map(frozenset, sets))
    return {s for s in sets if not any(s < t for t in sets)}


def facets_of(K):
    """Facets of a library complex as a set of frozensets."""
    return {frozenset(f) for f in K.facet_sets()}


def dual_faces(faces, V):
    V = frozenset(V)
    return {s for s in powerset(V) if (V - s) not in faces}


def minimal_nonfaces(faces, V):
    non = [s for s in powerset(V) if s not in faces]
    return {s for s in non if not any(t < s for t in non)}


def link_faces(faces, sigma):
    sigma = frozenset(sigma)
    return {t for t in faces if not (t & sigma) and (t | sigma) in faces}


def nerve_facets(facets):
    facets = list(facets)
    simplices = [frozenset(c) for r in range(1, len(facets) + 1)
                 for c in itertools.combinations(range(len(facets)), r)
                 if frozenset.intersection(*(facets[i] for i in c))]
    return maximal(simplices)


def brute_canonical(facets):
    """Lexicographically least relabeled facet list over all permutations."""
    verts = sorted(set().union(*facets), key=str) if facets else []
    best = None
    for perm in itertools.permutations(range(len(verts))):
        lab = dict(zip(verts, perm))
        cert = tuple(sorted(tuple(sorted(lab[v] for v in f)) for f in facets))
        if best is None or cert < best:
            best = cert
    return best


def determinantal_invariants(M):
    """Invariant factors from gcds of k×k minors (exact, tiny matrices only)."""
    rows = len(M)
    cols = len(M[0]) if rows else 0

    def det(sub):
        n = len(sub)
        A = [[Fraction(x) for x in r] for r in sub]
        d = Fraction(1)
        for c in range(n):
            p = next((r for r in range(c, n) if A[r][c] != 0), None)
            if p is None:
                return 0
            if p != c:
                A[c], A[p] = A[p], A[c]
                d = -d
            d *= A[c][c]
            for r in range(c + 1, n):
                f = A[r][c] / A[c][c]
                A[r] = [a - f * b for a, b in zip(A[r], A[c])]
        return int(d)

    divisors = [1]
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rs in itertools.combinations(range(rows), k):
            for cs in itertools.combinations(range(cols), k):
                g = gcd(g, det([[M[r][c] for c in cs] for r in rs]))
        if g == 0:
            break
        divisors.append(g)
    return [divisors[i] // divisors[i - 1] for i in range(1, len(divisors))]


def betti_rational(facets):
    """Reduced Betti numbers over Q by Fraction Gaussian elimination."""
    faces = faces_of(facets)
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f, key=str)))
    top = max(by_dim)

    def rank(i):
        cols = by_dim.get(i, [])
        rows = by_dim.get(i - 1, [])
        if not cols or not rows:
            return 0
        idx = {r: n for n, r in enumerate(rows)}
        M = [[Fraction(0)] * len(cols) for _ in rows]
        for c, f in enumerate(cols):
            for j in range(len(f)):
                M[idx[f[:j] + f[j + 1:]]][c] = Fraction((-1) ** j)
        r = 0
        for c in range(len(cols)):
            p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
            if p is None:
                continue
            M[r], M[p] = M[p], M[r]
            for i in range(len(M)):
                if i != r and M[i][c] != 0:
                    f = M[i][c] / M[r][c]
                    M[i] = [a - f * b for a, b in zip(M[i], M[r])]
            r += 1
        return r

    return {i: len(by_dim.get(i, [])) - rank(i) - rank(i + 1) for i in range(-1, top + 1)}


def random_facets(rng: random.Random, max_vertices=8, max_facets=6):
    n = rng.randint(1, max_vertices)
    verts = [f"v{i}" for i in range(n)]
    out = []
    for _ in range(rng.randint(1, max_facets)):
        size = rng.randint(1, n)
        out.append(rng.sample(verts, size))
    return verts, out
