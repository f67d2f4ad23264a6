"""Layer-swap edge rewrite and the symmetry predicates it induces.

The rewrite acts on one chosen axis: every edge whose endpoints disagree on
that coordinate has the two coordinate values exchanged between endpoints,
and all other edges stay put.  At the matrix level this is exactly the
partial transpose of the adjacency matrix on that subsystem, which
``gtpt_matrix_identity`` certifies entry by entry.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConstructionError
from .graphs import (
    DimensionProfile,
    Edge,
    MultipartiteGraph,
    adjacency_matrix,
    vertex_index,
    vertex_label,
)
from .linalg import partial_transpose_matrix


def swap_edge(profile: DimensionProfile, edge: Edge, axis: int = 1) -> Edge:
    """Image of one edge under the axis swap (identity for intra-layer edges)."""
    n = profile.n
    if not 1 <= axis <= n:
        raise ValueError(f"axis {axis} out of range 1..{n}")
    a, b = edge
    la = list(vertex_label(a, profile))
    lb = list(vertex_label(b, profile))
    if la[axis - 1] == lb[axis - 1]:
        return (a, b) if a < b else (b, a)
    la[axis - 1], lb[axis - 1] = lb[axis - 1], la[axis - 1]
    na = vertex_index(tuple(la), profile)
    nb = vertex_index(tuple(lb), profile)
    if na == nb:
        # Cannot happen: the swapped coordinates still differ.
        raise ConstructionError(f"edge {edge} collapsed to a loop under the swap")
    return (na, nb) if na < nb else (nb, na)


def gtpt(graph: MultipartiteGraph, axis: int = 1) -> MultipartiteGraph:
    """Rewrite every cross-layer edge by swapping its axis coordinates.

    The rewrite is computed as a whole-set map; if two source edges ever
    landed on the same image the edge count would drop, which is flagged
    loudly instead of silently shrinking the graph.
    """
    if not 1 <= axis <= graph.profile.n:
        raise ValueError(f"axis {axis} out of range 1..{graph.profile.n}")
    images = {swap_edge(graph.profile, edge, axis) for edge in graph.edges}
    if len(images) != graph.num_edges:
        raise ConstructionError(
            f"axis-{axis} rewrite collapsed {graph.num_edges} edges"
            f" into {len(images)}"
        )
    return MultipartiteGraph(graph.profile, images)


@dataclass(frozen=True)
class DegreeSymmetryReport:
    """Whether the rewrite preserves every vertex degree, with the deltas."""

    symmetric: bool
    axis: int
    changed: tuple[tuple[int, int, int], ...]  # (vertex, degree before, after)

    def __bool__(self) -> bool:
        return self.symmetric


def is_degree_symmetric(graph: MultipartiteGraph, axis: int = 1) -> DegreeSymmetryReport:
    """Compare the degree sequence of the graph and of its rewrite, vertexwise."""
    before = graph.degree_sequence()
    after = gtpt(graph, axis).degree_sequence()
    changed = tuple(
        (int(v) + 1, int(before[v]), int(after[v]))
        for v in np.nonzero(before != after)[0]
    )
    return DegreeSymmetryReport(not changed, axis, changed)


@dataclass(frozen=True)
class PartialSymmetryReport:
    """Whether every cross-layer edge has its swapped partner present."""

    symmetric: bool
    axis: int
    violating_edge: Edge | None = None
    missing_partner: Edge | None = None

    def __bool__(self) -> bool:
        return self.symmetric


def is_partially_symmetric(graph: MultipartiteGraph, axis: int = 1) -> PartialSymmetryReport:
    """Report the first edge (in sorted order) whose partner edge is absent.

    A graph passes exactly when it is a fixed point of the rewrite.
    """
    for edge in graph.sorted_edges():
        partner = swap_edge(graph.profile, edge, axis)
        if partner not in graph.edges:
            return PartialSymmetryReport(False, axis, edge, partner)
    return PartialSymmetryReport(True, axis)


@dataclass(frozen=True, eq=False)
class MatrixIdentityReport:
    """Entrywise comparison of the rewrite's adjacency with the partial transpose."""

    holds: bool
    axis: int
    first_difference: tuple[int, int, int, int] | None = None
    # (row, col, rewrite value, transpose value), 1-based indices

    def __bool__(self) -> bool:
        return self.holds


def gtpt_matrix_identity(graph: MultipartiteGraph, axis: int = 1) -> MatrixIdentityReport:
    """Certify adjacency(rewrite(G)) == partial transpose of adjacency(G).

    Both sides are integer matrices, so the comparison is exact.  A failure
    here indicates an implementation bug, not a property of the graph.
    """
    lhs = adjacency_matrix(gtpt(graph, axis))
    rhs = partial_transpose_matrix(adjacency_matrix(graph), graph.profile, axis)
    if np.array_equal(lhs, rhs):
        return MatrixIdentityReport(True, axis)
    rows, cols = np.nonzero(lhs != rhs)
    r, c = int(rows[0]), int(cols[0])
    return MatrixIdentityReport(
        False, axis, (r + 1, c + 1, int(lhs[r, c]), int(rhs[r, c]))
    )
