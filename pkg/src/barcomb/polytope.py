"""Vertices and dimension of the barcode polytopes.

Each lattice element embeds into the ambient permutation-vector space of
dimension N = n * (2^k + 1): distinguish copies, identify the symbol-copies
with 1..N in their total order, and read off the rank occupying each
position.  The polytope is the convex hull of these vectors.

Its affine dimension is computed two independent ways: exact integer rank of
the difference vectors (fraction-free Gaussian elimination, no floats), and
N minus the number of blocks cut out by one maximal sorting chain up to the
fully nested permutation.  Both equal N - 2 whenever n >= 2.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .lattice import (
    DEFAULT_POSITION_CAP,
    LatticeSpec,
    enumerate_lattice,
    top_element,
)
from .multiperm import Multipermutation, iota


@dataclass(frozen=True)
class VertexSet:
    """Integer vertex vectors, each a permutation of 1..ambient_dimension."""

    ambient_dimension: int
    vectors: tuple[tuple[int, ...], ...]


def _vector(s: Multipermutation) -> tuple[int, ...]:
    m = s.m
    return tuple((sym - 1) * m + copy for sym, copy in iota(s))


def vertices(spec: LatticeSpec, cap: int = DEFAULT_POSITION_CAP) -> VertexSet:
    """One vertex per lattice element, in element (lexicographic) order."""
    diagram = enumerate_lattice(spec, cap)
    return VertexSet(
        ambient_dimension=spec.positions,
        vectors=tuple(_vector(s) for s in diagram.elements),
    )


def word_from_vector(vec: tuple[int, ...], m: int) -> tuple[int, ...]:
    """Invert the embedding: recover the word from a vertex vector."""
    return tuple((v - 1) // m + 1 for v in vec)


def integer_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    mat = [list(r) for r in rows]
    if not mat or not mat[0]:
        return 0
    n_rows, n_cols = len(mat), len(mat[0])
    pivot_row = 0
    prev = 1
    for col in range(n_cols):
        pivot = next(
            (i for i in range(pivot_row, n_rows) if mat[i][col] != 0), None
        )
        if pivot is None:
            continue
        mat[pivot_row], mat[pivot] = mat[pivot], mat[pivot_row]
        lead = mat[pivot_row][col]
        for i in range(pivot_row + 1, n_rows):
            factor = mat[i][col]
            for j in range(col + 1, n_cols):
                mat[i][j] = (lead * mat[i][j] - factor * mat[pivot_row][j]) // prev
            mat[i][col] = 0
        prev = lead
        pivot_row += 1
        if pivot_row == n_rows:
            break
    return pivot_row


def affine_dimension(vertex_set: VertexSet) -> int:
    """Dimension of the affine hull, in exact integer arithmetic."""
    vecs = vertex_set.vectors
    base = vecs[0]
    diffs = [[v - b for v, b in zip(vec, base)] for vec in vecs[1:]]
    return integer_rank(diffs)


def pi_partition_blocks(spec: LatticeSpec) -> int:
    """Blocks of the transposition graph along one maximal sorting chain.

    Walks from the identity to the fully nested permutation by moving each
    symbol-copy into place, symbols ascending and copies in descending copy
    order, each step an adjacent swap of an increasing pair.  Returns the
    number of connected components of the path graph on the N positions
    whose edges are the swap positions used; the polytope dimension is N
    minus this count.
    """
    target = list(iota(top_element(spec)))
    position = {elem: p for p, elem in enumerate(target)}
    current = sorted(target)
    used: set[int] = set()
    for sym in range(1, spec.n + 1):
        for copy in range(spec.m, 0, -1):
            elem = (sym, copy)
            cur = current.index(elem)
            tgt = position[elem]
            assert cur <= tgt, "sorting chain moved an element backwards"
            while cur < tgt:
                assert current[cur] < current[cur + 1], "swap is not a cover"
                current[cur], current[cur + 1] = current[cur + 1], current[cur]
                used.add(cur)
                cur += 1
    assert current == target
    return spec.positions - len(used)


def dimension_report(spec: LatticeSpec, cap: int = DEFAULT_POSITION_CAP) -> dict:
    """JSON-ready summary: ambient dimension, exact dim, formula, blocks."""
    return {
        "ambient": spec.positions,
        "dim": affine_dimension(vertices(spec, cap)),
        "expected": spec.positions - 2,
        "blocks": pi_partition_blocks(spec),
    }


def format_vertices_csv(vertex_set: VertexSet) -> str:
    lines = [",".join(str(v) for v in vec) for vec in vertex_set.vectors]
    return "\n".join(lines) + "\n"


def format_vertices_json(vertex_set: VertexSet) -> str:
    return json.dumps([list(vec) for vec in vertex_set.vectors])
