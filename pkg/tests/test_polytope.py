import json

import pytest

from barcomb.lattice import LatticeSpec, enumerate_lattice
from barcomb.multiperm import rank
from barcomb.polytope import (
    VertexSet,
    affine_dimension,
    dimension_report,
    format_vertices_csv,
    format_vertices_json,
    integer_rank,
    pi_partition_blocks,
    vertices,
    word_from_vector,
)


def test_integer_rank():
    assert integer_rank([[1, 0], [0, 1]]) == 2
    assert integer_rank([[2, 4], [1, 2]]) == 1
    assert integer_rank([[0, 0], [0, 0]]) == 0
    assert integer_rank([]) == 0
    assert integer_rank([[0, 1, -1, 0], [0, 1, 1, -2]]) == 2
    # needs exact arithmetic: these rows are dependent over the rationals
    assert integer_rank([[3, 6, 9], [5, 10, 15], [1, 2, 4]]) == 2


def test_vertices_two_bars():
    vs = vertices(LatticeSpec(2, 0))
    assert vs.ambient_dimension == 4
    assert set(vs.vectors) == {(1, 2, 3, 4), (1, 3, 2, 4), (1, 3, 4, 2)}


def test_vertices_single_bar():
    vs = vertices(LatticeSpec(1, 0))
    assert vs.vectors == ((1, 2),)
    assert affine_dimension(vs) == 0


def test_vertices_level_one():
    vs = vertices(LatticeSpec(2, 1))
    assert vs.ambient_dimension == 6
    assert len(vs.vectors) == 10
    assert len(set(vs.vectors)) == 10
    for vec in vs.vectors:
        assert sorted(vec) == list(range(1, 7))


@pytest.mark.parametrize(
    "n,k,dim",
    [(1, 0, 0), (2, 0, 2), (3, 0, 4), (2, 1, 4), (3, 1, 7), (4, 0, 6)],
)
def test_affine_dimension_formula(n, k, dim):
    spec = LatticeSpec(n, k)
    assert affine_dimension(vertices(spec)) == dim == spec.positions - 2


@pytest.mark.parametrize("n,k", [(1, 0), (2, 0), (3, 0), (2, 1), (3, 1), (4, 0)])
def test_blocks_and_rank_agree(n, k):
    spec = LatticeSpec(n, k)
    blocks = pi_partition_blocks(spec)
    assert blocks == 2
    assert affine_dimension(vertices(spec)) == spec.positions - blocks


def test_single_bar_higher_levels_are_points():
    # with one bar the lattice is a single word: the polytope is a point and
    # the sorting chain is empty, so every position is its own block
    spec = LatticeSpec(1, 2)
    vs = vertices(spec)
    assert len(vs.vectors) == 1
    assert affine_dimension(vs) == 0
    assert pi_partition_blocks(spec) == spec.positions
    assert affine_dimension(vs) == spec.positions - pi_partition_blocks(spec)


def test_dimension_report():
    assert dimension_report(LatticeSpec(2, 1)) == {
        "ambient": 6,
        "dim": 4,
        "expected": 4,
        "blocks": 2,
    }


def test_vectors_decode_to_lattice_elements():
    for n, k in [(2, 0), (3, 0), (2, 1)]:
        spec = LatticeSpec(n, k)
        diagram = enumerate_lattice(spec)
        vs = vertices(spec)
        decoded = [word_from_vector(vec, spec.m) for vec in vs.vectors]
        assert decoded == [s.word for s in diagram.elements]


def test_identity_vector_is_bottom_and_top_is_unique():
    for n, k in [(2, 0), (3, 0), (2, 1)]:
        spec = LatticeSpec(n, k)
        diagram = enumerate_lattice(spec)
        vs = vertices(spec)
        identity = tuple(range(1, spec.positions + 1))
        assert identity in vs.vectors
        bottom = vs.vectors.index(identity)
        assert rank(diagram.elements[bottom]) == 0

        def inversions(vec):
            return sum(
                1
                for a in range(len(vec))
                for b in range(a + 1, len(vec))
                if vec[a] > vec[b]
            )

        counts = [inversions(v) for v in vs.vectors]
        assert counts.count(max(counts)) == 1


def test_emitters():
    vs = VertexSet(4, ((1, 2, 3, 4), (1, 3, 2, 4)))
    assert format_vertices_csv(vs) == "1,2,3,4\n1,3,2,4\n"
    assert json.loads(format_vertices_json(vs)) == [[1, 2, 3, 4], [1, 3, 2, 4]]
