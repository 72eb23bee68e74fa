"""Combinatorial core: closure, skeleta, intersection, components, subdivision."""

import random
from itertools import chain, combinations

import pytest
from hypothesis import given, settings

from simhaus import (
    EmptyInputError,
    EmptyIntersectionError,
    NotInjectiveError,
    UndefinedVertexError,
    all_faces,
    apply_vertex_map,
    barycentric_subdivision,
    complex_from_faces,
    complex_from_json,
    complex_from_lines,
    complex_to_json,
    complex_to_lines,
    connected_components,
    intersect,
    skeleton,
    subdivision_encoding,
)
from conftest import complex_strategy, random_complex


def C(*faces):
    return complex_from_faces(faces)


class TestClosure:
    def test_single_simplex(self):
        k = C((1, 2, 3))
        assert k.maximal_faces == frozenset({(1, 2, 3)})
        assert len(all_faces(k)) == 7

    def test_duplicates_and_subsets_absorbed(self):
        k = C((1, 2), (2,), (2, 1))
        assert k.maximal_faces == frozenset({(1, 2)})

    def test_antichain_preserved(self):
        k = C((1, 2), (3, 4))
        assert k.maximal_faces == frozenset({(1, 2), (3, 4)})
        assert k.vertices == (1, 2, 3, 4)

    def test_two_points(self):
        assert all_faces(C((1,), (2,))) == frozenset({(1,), (2,)})

    def test_two_edges(self):
        assert all_faces(C((1, 2), (2, 3))) == frozenset(
            {(1,), (2,), (3,), (1, 2), (2, 3)})

    def test_empty_inputs_rejected(self):
        with pytest.raises(EmptyInputError):
            complex_from_faces([])
        with pytest.raises(EmptyInputError):
            complex_from_faces([()])
        with pytest.raises(EmptyInputError):
            complex_from_faces([(1, -2)])

    @given(complex_strategy())
    def test_closure_downward_closed(self, k):
        faces = all_faces(k)
        for f in faces:
            for r in range(1, len(f)):
                for sub in combinations(f, r):
                    assert sub in faces
        for m in k.maximal_faces:
            assert m in faces


class TestSkeleton:
    def test_hollow_triangle(self):
        assert skeleton(C((1, 2, 3)), 1) == C((1, 2), (1, 3), (2, 3))

    def test_vertices_only(self):
        assert skeleton(C((1, 2)), 0) == C((1,), (2,))

    def test_identity_when_low_dimension(self):
        k = C((1, 2), (2, 3, 4))
        assert skeleton(k, 5) == k

    @given(complex_strategy())
    @settings(max_examples=50)
    def test_composition_law(self, k):
        for m in range(3):
            for n in range(3):
                assert skeleton(skeleton(k, m), n) == skeleton(k, min(m, n))

    @given(complex_strategy())
    def test_idempotent(self, k):
        s = skeleton(k, 1)
        assert skeleton(s, 1) == s


class TestIntersect:
    def test_subcomplex(self):
        a = C((1, 2, 3))
        b = C((1, 2), (3,))
        assert intersect(a, b) == b

    def test_disjoint_raises(self):
        with pytest.raises(EmptyIntersectionError):
            intersect(C((1,)), C((2,)))

    def test_shared_faces_only(self):
        a = C((1, 2), (2, 3))
        b = C((1, 3), (2,))
        assert intersect(a, b) == C((1,), (2,), (3,))

    @given(complex_strategy(), complex_strategy())
    @settings(max_examples=60)
    def test_commutative_and_matches_face_sets(self, a, b):
        common = all_faces(a) & all_faces(b)
        if not common:
            with pytest.raises(EmptyIntersectionError):
                intersect(a, b)
            return
        ab = intersect(a, b)
        assert all_faces(ab) == common
        assert ab == intersect(b, a)

    @given(complex_strategy())
    def test_idempotent(self, a):
        assert intersect(a, a) == a

    @given(complex_strategy(), complex_strategy(), complex_strategy())
    @settings(max_examples=40)
    def test_associative(self, a, b, c):
        try:
            left = intersect(intersect(a, b), c)
        except EmptyIntersectionError:
            left = None
        try:
            right = intersect(a, intersect(b, c))
        except EmptyIntersectionError:
            right = None
        assert left == right


class TestComponents:
    def test_two_edges(self):
        comps = connected_components(C((1, 2), (3, 4)))
        assert [c.maximal_faces for c in comps] == [
            frozenset({(1, 2)}), frozenset({(3, 4)})]

    def test_chain_is_connected(self):
        assert len(connected_components(C((1, 2), (2, 3)))) == 1

    def test_three_points(self):
        assert len(connected_components(C((1,), (2,), (3,)))) == 3

    @given(complex_strategy())
    @settings(max_examples=60)
    def test_partition_and_reassembly(self, k):
        comps = connected_components(k)
        vertex_sets = [c.vertex_set for c in comps]
        for i, vs in enumerate(vertex_sets):
            for other in vertex_sets[i + 1:]:
                assert not (vs & other)
        assert frozenset(chain.from_iterable(vertex_sets)) == k.vertex_set
        reassembled = frozenset(chain.from_iterable(all_faces(c) for c in comps))
        assert reassembled == all_faces(k)


def count_chains(k):
    """Independent oracle: count nonempty chains of the face poset directly."""
    faces = sorted(all_faces(k), key=len)
    total = 0
    memo = {}

    def chains_from(i):
        # chains whose smallest element is faces[i]
        if i in memo:
            return memo[i]
        below = set(faces[i])
        n = 1
        for j, g in enumerate(faces):
            if len(g) > len(below) and below < set(g):
                n += chains_from(j)
        memo[i] = n
        return n

    for i in range(len(faces)):
        total += chains_from(i)
    return total


class TestSubdivision:
    def test_edge_becomes_path(self):
        sd = barycentric_subdivision(C((1, 2)))
        assert len(sd.vertices) == 3
        assert sorted(len(f) for f in sd.maximal_faces) == [2, 2]

    def test_vertex_fixed(self):
        sd = barycentric_subdivision(C((1,)))
        assert sd.maximal_faces == frozenset({(0,)})

    def test_triangle_counts(self):
        sd = barycentric_subdivision(C((1, 2, 3)))
        faces = all_faces(sd)
        assert len([f for f in faces if len(f) == 1]) == 7
        assert len([f for f in faces if len(f) == 2]) == 12
        assert len([f for f in faces if len(f) == 3]) == 6

    def test_encoding_is_deterministic(self):
        k = C((1, 2), (2, 3))
        assert barycentric_subdivision(k) == barycentric_subdivision(k)
        enc = subdivision_encoding(k)
        assert sorted(enc.values()) == list(range(len(all_faces(k))))

    @given(complex_strategy(max_vertex=4, max_faces=3))
    @settings(max_examples=40, deadline=None)
    def test_face_count_equals_chain_count(self, k):
        sd = barycentric_subdivision(k)
        assert len(all_faces(sd)) == count_chains(k)


class TestVertexMap:
    def test_identity(self):
        k = C((1, 2), (3,))
        assert apply_vertex_map(k, {1: 1, 2: 2, 3: 3}) == k

    def test_swap_fixes_edge(self):
        k = C((1, 2))
        assert apply_vertex_map(k, {1: 2, 2: 1}) == k

    def test_translation(self):
        assert apply_vertex_map(C((1, 2)), {1: 5, 2: 6}) == C((5, 6))

    def test_errors(self):
        k = C((1, 2))
        with pytest.raises(UndefinedVertexError):
            apply_vertex_map(k, {1: 5})
        with pytest.raises(NotInjectiveError):
            apply_vertex_map(k, {1: 5, 2: 5})

    def test_preserves_face_counts_per_dimension(self):
        rng = random.Random(7)
        for _ in range(50):
            k = random_complex(rng)
            mapping = {v: v * 3 + 11 for v in k.vertices}
            relabeled = apply_vertex_map(k, mapping)
            for d in range(4):
                assert (len([f for f in all_faces(k) if len(f) == d + 1])
                        == len([f for f in all_faces(relabeled) if len(f) == d + 1]))


class TestSerialization:
    def test_json_round_trip(self):
        k = C((1, 2), (2, 3, 4))
        assert complex_from_json(complex_to_json(k)) == k

    def test_lines_round_trip(self):
        k = C((1, 2), (2, 3, 4))
        assert complex_from_lines(complex_to_lines(k)) == k

    def test_lines_comments_and_blanks(self):
        text = "# a comment\n\n1 2\n2 3  # trailing\n"
        assert complex_from_lines(text) == C((1, 2), (2, 3))

    def test_bad_json_reports_position(self):
        from simhaus import ParseError
        with pytest.raises(ParseError) as err:
            complex_from_json('{"maximal_faces": [[1, 2')
        assert err.value.line is not None

    @given(complex_strategy())
    @settings(max_examples=40)
    def test_round_trips_random(self, k):
        assert complex_from_json(complex_to_json(k)) == k
        assert complex_from_lines(complex_to_lines(k)) == k
