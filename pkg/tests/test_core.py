import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import cx
from oracles import brute_canonical, faces_of, facets_of, link_faces, maximal, nerve_facets
from nhcomplex.core import (
    FaceNotPresent,
    GroundViolation,
    InvalidArgument,
    JoinOverlap,
    NotPure,
    boundary_simplex,
    canonical_form,
    deletion,
    elementary_starring,
    empty_face_complex,
    eta_extension,
    full_simplex,
    is_boundary_of_simplex,
    is_full_simplex,
    is_isomorphic,
    is_pure,
    is_strongly_connected,
    join,
    link,
    make_complex,
    nerve,
    pure_boundary,
    relabel,
    same_faces,
    star,
    vertex_minimal_extension,
    void_complex,
)

complexes = st.lists(
    st.sets(st.sampled_from("abcdefg"), min_size=1, max_size=5), min_size=1, max_size=6
).map(lambda fs: make_complex(None, [sorted(f) for f in fs]))


def test_make_complex_absorbs_faces():
    assert facets_of(make_complex("ab", ["ab", "a"])) == {frozenset("ab")}
    assert facets_of(make_complex("abc", ["ab", "c"])) == {frozenset("ab"), frozenset("c")}


def test_empty_face_list_is_empty_face_complex():
    K = make_complex("a", [])
    assert K.facet_sets() == ((),)
    assert K.dim == -1 and K.m == 1
    assert K != make_complex("a", [], void=True)


def test_make_complex_rejects_outside_vertex():
    with pytest.raises(GroundViolation):
        make_complex("ab", ["ac"])


def test_void_and_empty_face_complex_differ():
    assert void_complex().void
    assert not empty_face_complex().void
    assert void_complex() != empty_face_complex()
    assert void_complex().dim is None


@pytest.mark.parametrize("K, d, m, pure", [
    (cx("ab", "c"), 1, 2, False),
    (boundary_simplex("abc"), 1, 3, True),
    (empty_face_complex(), -1, 1, True),
])
def test_basic_measures(K, d, m, pure):
    assert (K.dim, K.m, is_pure(K)) == (d, m, pure)


def test_full_and_boundary_simplex():
    assert facets_of(full_simplex("ab")) == {frozenset("ab")}
    assert facets_of(boundary_simplex("ab")) == {frozenset("a"), frozenset("b")}
    assert boundary_simplex("a").facet_sets() == ((),)
    assert full_simplex("").facet_sets() == ((),)
    with pytest.raises(InvalidArgument):
        boundary_simplex("")


def test_terminal_shape_predicates():
    assert is_boundary_of_simplex(cx("a", "b"))
    assert not is_boundary_of_simplex(cx("ab", "c"))
    assert not is_full_simplex(cx("ab", "c"))
    assert is_full_simplex(cx("abc"))
    assert not is_boundary_of_simplex(cx("a"))
    K = empty_face_complex()
    assert is_boundary_of_simplex(K) and is_full_simplex(K)


def test_join():
    assert facets_of(join(cx("a"), cx("b", "c"))) == {frozenset("ab"), frozenset("ac")}
    K = cx("ab", "c")
    assert same_faces(join(K, empty_face_complex()), K)
    assert join(K, void_complex()).void
    with pytest.raises(JoinOverlap):
        join(cx("ab"), cx("bc"))


def test_link_star_deletion_examples():
    assert same_faces(link(full_simplex("abc"), "a"), full_simplex("bc"))
    assert facets_of(link(cx("ab", "bc"), "c")) == {frozenset("b")}
    assert facets_of(deletion(cx("ab", "bc"), "c")) == {frozenset("ab")}
    assert facets_of(star(cx("ab", "bc", "cd"), "c")) == {frozenset("bc"), frozenset("cd")}
    with pytest.raises(FaceNotPresent):
        link(cx("ab", "bc"), "ac")


def test_link_of_facet_is_empty_face_complex():
    assert link(cx("ab", "c"), "ab").facet_sets() == ((),)


@pytest.mark.parametrize("K, expected", [
    (cx("ab", "c"), [(0,), (1,)]),
    (cx("ab", "bc"), [(0, 1)]),
    (boundary_simplex("abc"), [(0, 1), (0, 2), (1, 2)]),
])
def test_nerve_examples(K, expected):
    assert facets_of(nerve(K)) == {frozenset(f) for f in expected}
    assert facets_of(nerve(K)) == nerve_facets([frozenset(f) for f in K.facet_sets()])


def test_nerve_of_empty_face_complex_is_a_point():
    assert nerve(empty_face_complex()).facet_sets() == ((0,),)


def test_starring_examples():
    assert facets_of(elementary_starring(full_simplex("ab"), "ab", "c")) == {frozenset("ac"), frozenset("bc")}
    K = elementary_starring(full_simplex("abc"), "ab", "v")
    assert facets_of(K) == {frozenset("acv"), frozenset("bcv")}
    with pytest.raises(InvalidArgument):
        elementary_starring(full_simplex("ab"), "ab", "a")
    with pytest.raises(InvalidArgument):
        elementary_starring(cx("ab", "c"), "ac", "z")


def test_pure_boundary_examples():
    assert same_faces(pure_boundary(full_simplex("abc")), boundary_simplex("abc"))
    two = cx("acv", "bcv")
    assert facets_of(pure_boundary(two)) == {frozenset(x) for x in ("ac", "av", "bc", "bv")}
    assert pure_boundary(boundary_simplex("abc")).void
    assert pure_boundary(cx("a")).facet_sets() == ((),)
    with pytest.raises(NotPure):
        pure_boundary(cx("ab", "c"))


@pytest.mark.parametrize("K, expected", [
    (cx("ab", "bc"), True),
    (cx("ab", "cd"), False),
    (cx("abc", "cd"), True),
    (cx("abc", "cde"), False),
    (cx("a"), True),
])
def test_strong_connectivity(K, expected):
    assert is_strongly_connected(K) is expected


def test_isomorphism_examples():
    assert is_isomorphic(cx("ab", "c"), cx("x", "yz"))
    assert not is_isomorphic(cx("ab", "bc"), cx("ab", "cd"))
    assert canonical_form(cx("ab", "c")) == canonical_form(cx("c", "ab"))
    assert canonical_form(void_complex()) != canonical_form(empty_face_complex())


def test_canonical_form_ignores_ground_padding():
    assert canonical_form(cx("ab", ground="abcd")) == canonical_form(cx("ab"))


def test_vertex_minimal_extension_examples():
    assert same_faces(vertex_minimal_extension(cx("a", "b"), "c"), boundary_simplex("abc"))
    K = vertex_minimal_extension(boundary_simplex("abc"), "u")
    assert facets_of(K) == {frozenset(x) for x in ("abc", "abu", "acu", "bcu")}
    assert facets_of(vertex_minimal_extension(empty_face_complex(), "u")) == {frozenset("u")}
    with pytest.raises(InvalidArgument):
        vertex_minimal_extension(cx("ab"), "a")


def test_eta_extension_examples():
    K = eta_extension("x", "ab", cx("a", "b"))
    assert facets_of(K) == {frozenset("ab"), frozenset("ax"), frozenset("bx")}
    assert facets_of(eta_extension("xy", "a", cx("a"))) == {frozenset("axy")}
    S = cx("ab", "c")
    assert same_faces(eta_extension("x", S.support, S), vertex_minimal_extension(S, "x"))
    with pytest.raises(InvalidArgument):
        eta_extension("a", "ab", cx("a"))


# properties ------------------------------------------------------------------

def _is_antichain(K):
    fs = [frozenset(f) for f in K.facet_sets()]
    return not any(a < b for a in fs for b in fs)


@settings(max_examples=150, deadline=None)
@given(complexes)
def test_link_and_star_match_definition(K):
    faces = faces_of([frozenset(f) for f in K.facet_sets()])
    for sigma in faces:
        L = link(K, sigma)
        assert faces_of(facets_of(L)) == link_faces(faces, sigma)
        assert _is_antichain(L)
        assert same_faces(star(K, sigma), join(full_simplex(sigma), L))


@settings(max_examples=100, deadline=None)
@given(complexes)
def test_operations_keep_antichain_and_nerve_size(K):
    assert _is_antichain(K)
    N = nerve(K)
    assert len(N.support) == K.m
    assert facets_of(N) == nerve_facets([frozenset(f) for f in K.facet_sets()])
    for v in K.support:
        assert _is_antichain(deletion(K, v))


@settings(max_examples=100, deadline=None)
@given(complexes, st.randoms(use_true_random=False))
def test_canonical_form_is_relabeling_invariant(K, rnd):
    verts = list(K.support)
    targets = [f"w{i}" for i in range(len(verts))]
    rnd.shuffle(targets)
    L = relabel(K, dict(zip(verts, targets)))
    assert canonical_form(K) == canonical_form(L)


@settings(max_examples=200, deadline=None)
@given(complexes, complexes)
def test_canonical_form_decides_isomorphism_like_brute_force(K, L):
    brute = brute_canonical([frozenset(f) for f in K.facet_sets()]) == \
        brute_canonical([frozenset(f) for f in L.facet_sets()])
    assert (canonical_form(K) == canonical_form(L)) is brute


@settings(max_examples=100, deadline=None)
@given(complexes)
def test_starring_at_vertex_is_isomorphic(K):
    for v in K.support:
        assert is_isomorphic(elementary_starring(K, [v], "new"), K)
        assert _is_antichain(elementary_starring(K, [v], "new"))


@pytest.mark.parametrize("d", range(0, 5))
def test_starring_simplex_is_boundary_join_simplex(d):
    verts = [f"v{i}" for i in range(d + 1)]
    for r in range(1, d + 2):
        tau = verts[:r]
        B = elementary_starring(full_simplex(verts), tau, "a")
        model = join(boundary_simplex([f"t{i}" for i in range(r)]),
                     full_simplex([f"s{i}" for i in range(d - (r - 1) + 1)]))
        assert is_isomorphic(B, model)


def test_canonical_form_symmetric_complexes_fast():
    # ten mutually interchangeable vertices must not blow up the search
    K = boundary_simplex(range(10))
    assert canonical_form(K) == canonical_form(boundary_simplex("abcdefghij"))
    assert len(canonical_form(K)) == 10
    hexagon = cx("12", "23", "34", "45", "56", "61")
    shuffled = cx("ab", "bf", "fd", "dc", "ce", "ea")
    assert canonical_form(hexagon) == canonical_form(shuffled)
    assert canonical_form(hexagon) != canonical_form(cx("12", "23", "31", "45", "56", "64"))


def test_canonical_form_random_relabel_seeded():
    rng = random.Random(7)
    for _ in range(50):
        facets = [rng.sample("abcdefgh", rng.randint(1, 5)) for _ in range(rng.randint(1, 6))]
        K = make_complex(None, facets)
        perm = list("abcdefgh")
        rng.shuffle(perm)
        assert canonical_form(K) == canonical_form(relabel(K, dict(zip("abcdefgh", perm))))
        assert set(maximal(map(frozenset, facets))) == facets_of(K)
