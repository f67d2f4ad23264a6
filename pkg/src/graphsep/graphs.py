"""Multipartite-labelled simple graphs and their matrix representations.

A graph lives on a dimension profile (N_1, ..., N_n): every vertex carries a
label (i_1, ..., i_n) with 1 <= i_k <= N_k, and vertex numbers 1..N_1*...*N_n
run through the labels in lexicographic (mixed-radix) order.  Adjacency,
degree and both Laplacian matrices are built in exact integer arithmetic;
density matrices are their unit-trace floating-point normalisations.

The plain-text graph format is line oriented: a ``dims N_1 N_2 ... N_n``
header, then edge lines that are either ``e a b`` (vertex numbers) or
``E i1,...,in j1,...,jn`` (labels).  ``#`` starts a comment.  Duplicate
edges and loops are rejected with their line number.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from itertools import product as cartesian

import numpy as np

from .errors import GraphFormatError
from .textio import content_lines, format_value

DEFAULT_MAX_VERTICES = 1024
MAX_VERTICES_ENV = "GRAPHSEP_MAX_VERTICES"

COMBINATORIAL = "combinatorial"
SIGNLESS = "signless"

Label = tuple[int, ...]
Edge = tuple[int, int]


def vertex_cap() -> int:
    """Largest allowed vertex count (``GRAPHSEP_MAX_VERTICES`` or 1024)."""
    raw = os.environ.get(MAX_VERTICES_ENV)
    if raw is None:
        return DEFAULT_MAX_VERTICES
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(
            f"{MAX_VERTICES_ENV} must be an integer, got {raw!r}"
        ) from None
    if cap < 4:
        raise ValueError(f"{MAX_VERTICES_ENV} must be at least 4, got {cap}")
    return cap


@dataclass(frozen=True)
class DimensionProfile:
    """Ordered subsystem dimensions (N_1, ..., N_n), each >= 2, with n >= 2."""

    dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        object.__setattr__(self, "dims", dims)
        if len(dims) < 2:
            raise ValueError(f"need at least 2 subsystems, got {len(dims)}")
        for axis, d in enumerate(dims, start=1):
            if d < 2:
                raise ValueError(f"axis {axis}: dimension must be >= 2, got {d}")
        total = math.prod(dims)
        cap = vertex_cap()
        if total > cap:
            raise ValueError(
                f"{total} vertices exceeds the cap of {cap}"
                f" (set {MAX_VERTICES_ENV} to raise it)"
            )

    @property
    def n(self) -> int:
        return len(self.dims)

    @property
    def total(self) -> int:
        return math.prod(self.dims)

    @property
    def strides(self) -> tuple[int, ...]:
        """Mixed-radix place values: stride k multiplies (i_k - 1)."""
        out = []
        acc = 1
        for d in reversed(self.dims):
            out.append(acc)
            acc *= d
        return tuple(reversed(out))

    def labels(self):
        """All labels in vertex-number order."""
        for coords in cartesian(*(range(1, d + 1) for d in self.dims)):
            yield coords


def vertex_index(label: Label, profile: DimensionProfile) -> int:
    """1-based vertex number of ``label`` under ``profile``.

    The number is the mixed-radix value (i_1-1)N_2...N_n + ... + (i_n-1) + 1,
    so labels enumerate lexicographically.
    """
    label = tuple(label)
    if len(label) != profile.n:
        raise ValueError(
            f"label has {len(label)} coordinates, profile has {profile.n} axes"
        )
    index = 1
    for axis, (coord, dim, stride) in enumerate(
        zip(label, profile.dims, profile.strides), start=1
    ):
        if not 1 <= coord <= dim:
            raise ValueError(
                f"axis {axis}: coordinate {coord} out of range 1..{dim}"
            )
        index += (coord - 1) * stride
    return index


def vertex_label(index: int, profile: DimensionProfile) -> Label:
    """Label of vertex number ``index``; inverse of :func:`vertex_index`."""
    if not 1 <= index <= profile.total:
        raise ValueError(f"vertex {index} out of range 1..{profile.total}")
    rem = index - 1
    coords = []
    for stride in profile.strides:
        coords.append(rem // stride + 1)
        rem %= stride
    return tuple(coords)


@dataclass(frozen=True)
class MultipartiteGraph:
    """A simple graph whose vertices carry multipartite labels.

    ``edges`` is a set of unordered pairs of vertex numbers; loops are
    rejected and duplicates collapse (set semantics).  Instances are
    immutable and safe to share between workers.
    """

    profile: DimensionProfile
    edges: frozenset[Edge]

    def __init__(self, profile: DimensionProfile, edges=()):
        object.__setattr__(self, "profile", profile)
        total = profile.total
        normalised = set()
        for edge in edges:
            a, b = (int(v) for v in edge)
            if a == b:
                raise ValueError(f"loop at vertex {a} is not allowed")
            if not (1 <= a <= total and 1 <= b <= total):
                raise ValueError(f"edge ({a},{b}) leaves the range 1..{total}")
            normalised.add((a, b) if a < b else (b, a))
        object.__setattr__(self, "edges", frozenset(normalised))

    @classmethod
    def from_label_pairs(cls, profile: DimensionProfile, pairs) -> "MultipartiteGraph":
        """Build a graph from pairs of vertex labels."""
        edges = [
            (vertex_index(u, profile), vertex_index(v, profile)) for u, v in pairs
        ]
        return cls(profile, edges)

    @property
    def num_vertices(self) -> int:
        return self.profile.total

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def degree_sequence(self) -> np.ndarray:
        """Vertex degrees as an integer vector indexed by vertex-1."""
        deg = np.zeros(self.num_vertices, dtype=np.int64)
        for a, b in self.edges:
            deg[a - 1] += 1
            deg[b - 1] += 1
        return deg


def adjacency_matrix(graph: MultipartiteGraph) -> np.ndarray:
    """0/1 symmetric adjacency matrix with zero diagonal (exact integers)."""
    total = graph.num_vertices
    mat = np.zeros((total, total), dtype=np.int64)
    for a, b in graph.edges:
        mat[a - 1, b - 1] = 1
        mat[b - 1, a - 1] = 1
    return mat


def degree_matrix(graph: MultipartiteGraph) -> np.ndarray:
    """Diagonal matrix of vertex degrees; trace is twice the edge count."""
    return np.diag(graph.degree_sequence())


def laplacian(graph: MultipartiteGraph) -> np.ndarray:
    """Degree matrix minus adjacency matrix (rows sum to zero)."""
    return degree_matrix(graph) - adjacency_matrix(graph)


def signless_laplacian(graph: MultipartiteGraph) -> np.ndarray:
    """Degree matrix plus adjacency matrix (entrywise nonnegative)."""
    return degree_matrix(graph) + adjacency_matrix(graph)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Unit-trace symmetric matrix tagged with its profile and kind."""

    matrix: np.ndarray
    profile: DimensionProfile
    kind: str

    def __post_init__(self):
        if self.kind not in (COMBINATORIAL, SIGNLESS):
            raise ValueError(f"unknown density matrix kind {self.kind!r}")
        mat = np.array(self.matrix, dtype=float)
        total = self.profile.total
        if mat.shape != (total, total):
            raise ValueError(
                f"matrix order {mat.shape} does not match {total} vertices"
            )
        if mat.size and np.max(np.abs(mat - mat.T)) > 1e-12:
            raise ValueError("density matrix must be symmetric within 1e-12")
        trace = float(np.trace(mat))
        if abs(trace - 1.0) > 1e-12:
            raise ValueError(f"density matrix trace is {trace!r}, not 1")
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)

    @property
    def order(self) -> int:
        return self.profile.total


def density_matrix(graph: MultipartiteGraph, kind: str = COMBINATORIAL) -> DensityMatrix:
    """Laplacian (or signless Laplacian) normalised to unit trace.

    Both Laplacians have trace 2|E|, so the empty graph has no density
    matrix; that case raises a zero-trace error.
    """
    if graph.num_edges == 0:
        raise ValueError(
            "empty graph has zero trace: no density matrix is defined"
        )
    if kind == COMBINATORIAL:
        base = laplacian(graph)
    elif kind == SIGNLESS:
        base = signless_laplacian(graph)
    else:
        raise ValueError(f"unknown density matrix kind {kind!r}")
    return DensityMatrix(base / float(2 * graph.num_edges), graph.profile, kind)


def sub_block(
    matrix: np.ndarray,
    profile: DimensionProfile,
    row_prefix: Label,
    col_prefix: Label,
) -> np.ndarray:
    """Innermost block addressed by two length-(n-1) label prefixes.

    The returned N_n x N_n block collects the entries whose row label starts
    with ``row_prefix`` and whose column label starts with ``col_prefix``.
    """
    matrix = np.asarray(matrix)
    total = profile.total
    if matrix.shape != (total, total):
        raise ValueError(f"matrix order {matrix.shape} does not match {total}")
    inner = profile.dims[-1]

    def offset(prefix, which):
        prefix = tuple(prefix)
        if len(prefix) != profile.n - 1:
            raise ValueError(
                f"{which} prefix has {len(prefix)} coordinates,"
                f" expected {profile.n - 1}"
            )
        start = 0
        for axis, (coord, dim, stride) in enumerate(
            zip(prefix, profile.dims, profile.strides), start=1
        ):
            if not 1 <= coord <= dim:
                raise ValueError(
                    f"{which} prefix axis {axis}: coordinate {coord}"
                    f" out of range 1..{dim}"
                )
            start += (coord - 1) * stride
        return start

    r = offset(row_prefix, "row")
    c = offset(col_prefix, "col")
    return matrix[r : r + inner, c : c + inner].copy()


def parse_graph(text: str) -> MultipartiteGraph:
    """Parse the plain-text graph format; errors carry 1-based line numbers."""
    profile = None
    edges: dict[Edge, int] = {}
    for lineno, line in content_lines(text):
        tokens = line.split()
        if profile is None:
            if tokens[0] != "dims":
                raise GraphFormatError(
                    f"expected 'dims N_1 ... N_n' header, got {tokens[0]!r}",
                    line=lineno,
                )
            try:
                dims = tuple(int(t) for t in tokens[1:])
                profile = DimensionProfile(dims)
            except ValueError as exc:
                raise GraphFormatError(str(exc), line=lineno) from None
            continue
        if tokens[0] == "e":
            if len(tokens) != 3:
                raise GraphFormatError(
                    "'e' line needs exactly two vertex numbers", line=lineno
                )
            try:
                a, b = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise GraphFormatError(
                    f"bad vertex number in {line!r}", line=lineno
                ) from None
        elif tokens[0] == "E":
            if len(tokens) != 3:
                raise GraphFormatError(
                    "'E' line needs exactly two comma-separated labels",
                    line=lineno,
                )
            try:
                u = tuple(int(t) for t in tokens[1].split(","))
                v = tuple(int(t) for t in tokens[2].split(","))
                a = vertex_index(u, profile)
                b = vertex_index(v, profile)
            except ValueError as exc:
                raise GraphFormatError(str(exc), line=lineno) from None
        else:
            raise GraphFormatError(
                f"unknown directive {tokens[0]!r} (use 'e' or 'E')", line=lineno
            )
        total = profile.total
        if a == b:
            raise GraphFormatError(f"loop at vertex {a}", line=lineno)
        if not (1 <= a <= total and 1 <= b <= total):
            raise GraphFormatError(
                f"edge ({a},{b}) leaves the range 1..{total}", line=lineno
            )
        edge = (a, b) if a < b else (b, a)
        if edge in edges:
            raise GraphFormatError(
                f"duplicate edge ({edge[0]},{edge[1]}),"
                f" first seen on line {edges[edge]}",
                line=lineno,
            )
        edges[edge] = lineno
    if profile is None:
        raise GraphFormatError("missing 'dims' header")
    return MultipartiteGraph(profile, edges)


def format_graph(graph: MultipartiteGraph) -> str:
    """Serialise a graph in the plain-text format (sorted edge lines)."""
    lines = ["dims " + " ".join(str(d) for d in graph.profile.dims)]
    lines.extend(f"e {a} {b}" for a, b in graph.sorted_edges())
    return "\n".join(lines) + "\n"


def format_matrix(matrix: np.ndarray) -> str:
    """Rows of space-separated values; integers plain, floats at 17 digits."""
    matrix = np.asarray(matrix)
    return "\n".join(
        " ".join(format_value(x) for x in row) for row in matrix
    ) + "\n"
