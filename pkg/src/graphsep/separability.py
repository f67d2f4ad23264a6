"""Hypothesis checks and certified fully separable decompositions.

A multipartite graph qualifies for the construction here when three block
conditions hold on top of axis-1 partial symmetry: no edge stays inside a
top layer, at every prefix depth all nonzero blocks of the adjacency matrix
coincide with a single common block, and all vertices of a top layer share
one degree.  Together these say the adjacency matrix factors exactly as a
Kronecker product of one 0/1 pattern per axis (the top pattern with zero
diagonal).

``decompose`` then walks an eigenvalue ladder down that factorisation: it
eigendecomposes the innermost pattern, scales the next pattern by each
eigenvalue in turn and eigendecomposes that, and so on outward.  Every leaf
of the recursion contributes one product term: the degree diagonal plus the
scaled top pattern (normalised by the total layer degree) times rank-one
projectors for the remaining subsystems.  Each step is certified (diagonal
dominance of every intermediate mixing matrix, eigenvalue versus row-sum
bounds, final reassembly) and the routine refuses rather than approximates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import ConstructionError, GraphFormatError, PreconditionError
from .graphs import (
    COMBINATORIAL,
    SIGNLESS,
    DensityMatrix,
    DimensionProfile,
    Edge,
    Label,
    MultipartiteGraph,
    adjacency_matrix,
    density_matrix,
    vertex_label,
)
from .linalg import (
    inf_norm,
    is_diagonally_dominant,
    is_psd,
    kron,
    partial_transpose_matrix,
    spectral_decomposition,
)
from .textio import content_lines, format_float
from .transforms import gtpt, is_degree_symmetric, is_partially_symmetric

# Slack for proof-chain inequalities evaluated in floating point; the
# quantities compared are integer-structured, so genuine violations are
# orders of magnitude larger than this.
_CHAIN_SLACK = 1e-12


@dataclass(frozen=True, eq=False)
class BlockLevelReport:
    """Uniformity of the adjacency blocks at one prefix depth."""

    level: int
    uniform: bool
    first_mismatch: tuple[Label, Label] | None = None
    common_block: np.ndarray | None = None


@dataclass(frozen=True, eq=False)
class ConditionReport:
    """Outcome of every hypothesis check, with witnesses for each failure.

    ``overall`` is the conjunction of the three block/degree conditions;
    partial symmetry is reported alongside as a separate prerequisite.
    ``layer_degree_sets`` lists the distinct degrees seen in each top layer,
    and ``sublayer_degrees_uniform`` reports the same uniformity at the
    finer two-coordinate granularity for reference.
    """

    profile: DimensionProfile
    partially_symmetric: bool
    partial_symmetry_violation: Edge | None
    no_intra_layer_edges: bool
    intra_layer_edges: tuple[Edge, ...]
    uniform_blocks: bool
    block_levels: tuple[BlockLevelReport, ...]
    uniform_layer_degrees: bool
    layer_degree_sets: tuple[tuple[int, ...], ...]
    layer_degrees: tuple[int, ...] | None
    sublayer_degrees_uniform: bool
    common_block: np.ndarray | None
    adjacency_factors: tuple[np.ndarray, ...] | None

    @property
    def overall(self) -> bool:
        return (
            self.no_intra_layer_edges
            and self.uniform_blocks
            and self.uniform_layer_degrees
        )

    def failure_summary(self) -> str:
        """One line per failed check, for error messages and CLI output."""
        problems = []
        if not self.partially_symmetric:
            problems.append(
                f"not partially symmetric: edge {self.partial_symmetry_violation}"
                " lacks its swapped partner"
            )
        if not self.no_intra_layer_edges:
            first = self.intra_layer_edges[0]
            problems.append(
                f"intra-layer edge {first}"
                + (
                    f" (+{len(self.intra_layer_edges) - 1} more)"
                    if len(self.intra_layer_edges) > 1
                    else ""
                )
            )
        for lv in self.block_levels:
            if not lv.uniform:
                row, col = lv.first_mismatch
                problems.append(
                    f"level {lv.level}: block at prefixes {row} x {col}"
                    " differs from the common block"
                )
        if not self.uniform_layer_degrees:
            problems.append(
                "layer degrees not uniform: "
                + ", ".join(
                    f"layer {t + 1} has degrees {sorted(s)}"
                    for t, s in enumerate(self.layer_degree_sets)
                    if len(s) > 1
                )
            )
        return "; ".join(problems) if problems else "all conditions hold"


def _block_level_report(adjacency: np.ndarray, dims: tuple[int, ...], level: int) -> BlockLevelReport:
    """Check that all nonzero blocks over distinct length-``level`` prefixes agree."""
    prefix_dims = dims[:level]
    pp = math.prod(prefix_dims)
    ps = math.prod(dims[level:])
    blocks = adjacency.reshape(pp, ps, pp, ps).transpose(0, 2, 1, 3)
    nonzero = blocks.any(axis=(2, 3))
    np.fill_diagonal(nonzero, False)  # equal prefixes are not compared here
    index = np.argwhere(nonzero)
    if index.size == 0:
        return BlockLevelReport(level, True)
    first = blocks[index[0][0], index[0][1]].copy()
    selected = blocks[nonzero]
    bad = np.nonzero((selected != first).any(axis=(1, 2)))[0]
    if bad.size == 0:
        return BlockLevelReport(level, True, common_block=first)

    def decode(flat: int) -> Label:
        return tuple(int(c) + 1 for c in np.unravel_index(flat, prefix_dims))

    row, col = index[bad[0]]
    return BlockLevelReport(
        level, False, (decode(int(row)), decode(int(col))), first
    )


def _extract_adjacency_factors(adjacency: np.ndarray, dims: tuple[int, ...]):
    """Peel the exact Kronecker factorisation of a conforming adjacency matrix.

    Repeatedly replaces the matrix by its nonzero-block indicator while
    recording the common innermost block; returns one 0/1 factor per axis,
    or None for the empty matrix.
    """
    current = adjacency
    remaining = list(dims)
    reversed_factors = []
    while len(remaining) > 1:
        inner = remaining.pop()
        pp = current.shape[0] // inner
        blocks = current.reshape(pp, inner, pp, inner).transpose(0, 2, 1, 3)
        nonzero = blocks.any(axis=(2, 3))
        index = np.argwhere(nonzero)
        if index.size == 0:
            return None
        reversed_factors.append(blocks[index[0][0], index[0][1]].copy())
        current = nonzero.astype(np.int64)
    reversed_factors.append(current.copy())
    return tuple(reversed(reversed_factors))


def check_theorem_conditions(graph: MultipartiteGraph) -> ConditionReport:
    """Evaluate all decomposition hypotheses with exact integer comparisons."""
    profile = graph.profile
    dims = profile.dims
    n = profile.n
    total = profile.total

    psym = is_partially_symmetric(graph, axis=1)
    intra = tuple(
        e
        for e in graph.sorted_edges()
        if vertex_label(e[0], profile)[0] == vertex_label(e[1], profile)[0]
    )

    adjacency = adjacency_matrix(graph)
    levels = tuple(_block_level_report(adjacency, dims, z) for z in range(1, n))
    uniform = all(lv.uniform for lv in levels)
    common_block = levels[-1].common_block

    degrees = graph.degree_sequence()
    layer_size = total // dims[0]
    degree_sets = tuple(
        tuple(sorted(set(degrees[t * layer_size : (t + 1) * layer_size].tolist())))
        for t in range(dims[0])
    )
    degrees_uniform = all(len(s) == 1 for s in degree_sets)
    layer_degrees = (
        tuple(int(s[0]) for s in degree_sets) if degrees_uniform else None
    )

    sub_size = total // (dims[0] * dims[1])
    sub_uniform = all(
        len(set(degrees[i : i + sub_size].tolist())) == 1
        for i in range(0, total, sub_size)
    )

    factors = None
    if uniform and not intra and graph.num_edges > 0:
        factors = _extract_adjacency_factors(adjacency, dims)
        if factors is not None and not np.array_equal(kron(factors), adjacency):
            factors = None  # defensive: the peel must reproduce the input

    return ConditionReport(
        profile=profile,
        partially_symmetric=psym.symmetric,
        partial_symmetry_violation=psym.violating_edge,
        no_intra_layer_edges=not intra,
        intra_layer_edges=intra,
        uniform_blocks=uniform,
        block_levels=levels,
        uniform_layer_degrees=degrees_uniform,
        layer_degree_sets=degree_sets,
        layer_degrees=layer_degrees,
        sublayer_degrees_uniform=sub_uniform,
        common_block=common_block,
        adjacency_factors=factors,
    )


@dataclass(frozen=True, eq=False)
class DecompositionTerm:
    """One product term: a weight and one unit-trace PSD factor per subsystem.

    Terms produced by :func:`decompose` also carry their position in the
    eigenvalue ladder (``index``), the eigenvalue at each ladder level
    (``ladder``), and the first factor before normalisation (``top_block``).
    """

    weight: float
    factors: tuple[np.ndarray, ...]
    index: tuple[int, ...] | None = None
    ladder: tuple[float, ...] | None = None
    top_block: np.ndarray | None = None


@dataclass(frozen=True, eq=False)
class SeparableDecomposition:
    """A convex combination of Kronecker products of per-subsystem factors."""

    profile: DimensionProfile
    terms: tuple[DecompositionTerm, ...]
    layer_degrees: tuple[int, ...] | None = None
    adjacency_factors: tuple[np.ndarray, ...] | None = None
    residual: float | None = None
    certificates: tuple[tuple[str, bool], ...] | None = None

    @property
    def weights(self) -> tuple[float, ...]:
        return tuple(t.weight for t in self.terms)

    def assemble(self) -> np.ndarray:
        """Sum of weighted Kronecker products."""
        total = self.profile.total
        out = np.zeros((total, total))
        for term in self.terms:
            out += term.weight * kron(term.factors)
        return out


def decompose(graph: MultipartiteGraph) -> SeparableDecomposition:
    """Produce a certified fully separable decomposition of the signless
    density matrix of ``graph``.

    Preconditions: at least one edge, axis-1 partial symmetry, and all three
    block/degree conditions (see :func:`check_theorem_conditions`).  The
    number of terms is always N_2*...*N_n, one per tuple of eigenvalue
    choices, each with the uniform weight 1/(N_2*...*N_n); eigenvalues that
    are zero or repeated keep their own rank-one term.

    Raises :class:`PreconditionError` when the hypotheses fail and
    :class:`ConstructionError` when any internal certificate fails (which
    would mean a hypothesis gap or a bug, and is never silently returned).
    """
    report = check_theorem_conditions(graph)
    if graph.num_edges == 0:
        raise PreconditionError(
            "cannot decompose the empty graph (zero-trace density matrix)",
            report=report,
        )
    if not (report.overall and report.partially_symmetric):
        raise PreconditionError(
            "decomposition hypotheses fail: " + report.failure_summary(),
            report=report,
        )
    factors = report.adjacency_factors
    if factors is None:
        raise ConstructionError("conforming graph yielded no factorisation")

    profile = graph.profile
    dims = profile.dims
    n = profile.n
    layer_degrees = report.layer_degrees
    degree_total = sum(layer_degrees)
    term_count = math.prod(dims[1:])
    weight = 1.0 / term_count

    factors_float = [f.astype(float) for f in factors]
    delta = np.diag(np.asarray(layer_degrees, dtype=float))
    # Mixing matrix pieces per ladder depth: with m axes kept, the matrix is
    # diag(degrees) x I plus the current eigenvalue times the joint pattern.
    diag_parts = {}
    patterns = {}
    for m in range(1, n):
        rest = math.prod(dims[1:m]) if m > 1 else 1
        diag_parts[m] = np.kron(delta, np.eye(rest))
        patterns[m] = kron(factors_float[:m])

    terms: list[DecompositionTerm] = []

    def descend(ladder: list[float], projectors: list[np.ndarray], index: list[int]):
        step = len(ladder) + 1  # 1-based ladder level about to run
        scale = ladder[-1] if ladder else 1.0
        scaled = scale * factors_float[n - step]
        eig = spectral_decomposition(scaled)
        bound = inf_norm(scaled)
        for r, (lam, vec) in enumerate(eig.pairs(), start=1):
            if abs(lam) > bound + _CHAIN_SLACK * max(1.0, bound):
                raise ConstructionError(
                    f"ladder level {step}: eigenvalue {lam!r} exceeds the"
                    f" row-sum bound {bound!r}",
                    matrix=scaled,
                )
            mixing = diag_parts[n - step] + lam * patterns[n - step]
            cert = is_diagonally_dominant(mixing)
            if not cert:
                raise ConstructionError(
                    f"ladder level {step}: mixing matrix not diagonally"
                    f" dominant (rows {cert.violating_rows})",
                    matrix=mixing,
                )
            branch_ladder = ladder + [lam]
            branch_index = index + [r]
            branch_proj = projectors + [np.outer(vec, vec)]
            if step == n - 1:
                term_factors = (mixing / degree_total,) + tuple(
                    reversed(branch_proj)
                )
                terms.append(
                    DecompositionTerm(
                        weight=weight,
                        factors=term_factors,
                        index=tuple(branch_index),
                        ladder=tuple(branch_ladder),
                        top_block=mixing,
                    )
                )
            else:
                descend(branch_ladder, branch_proj, branch_index)

    descend([], [], [])
    if len(terms) != term_count:
        raise ConstructionError(
            f"expected {term_count} terms, built {len(terms)}"
        )

    decomposition = SeparableDecomposition(
        profile=profile,
        terms=tuple(terms),
        layer_degrees=layer_degrees,
        adjacency_factors=factors,
    )
    rho = density_matrix(graph, SIGNLESS)
    certificate = verify_decomposition(decomposition, rho)
    if not certificate.passed:
        raise ConstructionError(
            "decomposition failed verification: "
            + "; ".join(certificate.failures),
            residual=certificate.residual,
        )
    return replace(
        decomposition,
        residual=certificate.residual,
        certificates=(
            ("dominance", True),
            ("eigen-bounds", True),
            ("factors", True),
            ("weights", True),
            ("reassembly", True),
        ),
    )


@dataclass(frozen=True)
class VerificationCertificate:
    """Result of checking a decomposition against a density matrix."""

    passed: bool
    residual: float
    relative_residual: float
    weight_sum: float
    failures: tuple[str, ...]
    tolerance: float

    def __bool__(self) -> bool:
        return self.passed


def verify_decomposition(
    decomposition: SeparableDecomposition,
    rho: DensityMatrix,
    tol: float = 1e-8,
) -> VerificationCertificate:
    """Check weights, per-factor properties, and the reassembly residual.

    Passes only when the weights form a probability vector (within 1e-10),
    every factor is symmetric, unit trace and PSD, and the weighted sum of
    Kronecker products matches ``rho`` within ``tol`` in relative Frobenius
    norm.  Structural mismatches (wrong profile or factor orders) raise.
    """
    if decomposition.profile != rho.profile:
        raise ValueError(
            f"decomposition profile {decomposition.profile.dims} does not"
            f" match density matrix profile {rho.profile.dims}"
        )
    dims = rho.profile.dims
    n = len(dims)
    failures: list[str] = []
    terms = decomposition.terms
    if not terms:
        failures.append("decomposition has no terms")
    weight_sum = float(sum(t.weight for t in terms))
    if abs(weight_sum - 1.0) > 1e-10:
        failures.append(f"weights sum to {weight_sum:.17g}, expected 1")
    for i, term in enumerate(terms, start=1):
        if term.weight < -1e-12:
            failures.append(f"term {i}: negative weight {term.weight:.17g}")
        if len(term.factors) != n:
            raise ValueError(
                f"term {i} has {len(term.factors)} factors for {n} subsystems"
            )
        for k, factor in enumerate(term.factors, start=1):
            mat = np.asarray(factor, dtype=float)
            expected = (dims[k - 1], dims[k - 1])
            if mat.shape != expected:
                raise ValueError(
                    f"term {i} factor {k}: shape {mat.shape}, expected {expected}"
                )
            if np.max(np.abs(mat - mat.T)) > 1e-12:
                failures.append(f"term {i} factor {k}: not symmetric")
                continue
            trace = float(np.trace(mat))
            if abs(trace - 1.0) > 1e-10:
                failures.append(
                    f"term {i} factor {k}: trace {trace:.17g}, expected 1"
                )
            psd = is_psd(mat)
            if not psd:
                failures.append(
                    f"term {i} factor {k}: not PSD"
                    f" (min eigenvalue {psd.min_eigenvalue:.3e})"
                )
    if terms:
        assembled = decomposition.assemble()
        residual = float(np.linalg.norm(assembled - rho.matrix))
    else:
        residual = float(np.linalg.norm(rho.matrix))
    norm = float(np.linalg.norm(rho.matrix))
    relative = residual / norm
    if relative > tol:
        failures.append(
            f"reassembly residual {residual:.3e}"
            f" is {relative:.3e} of the target norm (tolerance {tol:.1e})"
        )
    return VerificationCertificate(
        not failures, residual, relative, weight_sum, tuple(failures), tol
    )


@dataclass(frozen=True)
class PptCertificate:
    """Positivity of the state under one subsystem partial transpose."""

    passed: bool
    subsystem: int
    min_eigenvalue: float
    tolerance: float

    def __bool__(self) -> bool:
        return self.passed


def ppt_check(rho: DensityMatrix, subsystem: int, tol: float = 1e-9) -> PptCertificate:
    """Check that the partial transpose on ``subsystem`` stays PSD.

    Every fully separable state passes for every subsystem, so this is a
    necessary-condition cross-check on decomposition outputs.
    """
    transposed = partial_transpose_matrix(rho.matrix, rho.profile, subsystem)
    cert = is_psd(transposed, tol=tol)
    return PptCertificate(cert.psd, subsystem, cert.min_eigenvalue, tol)


@dataclass(frozen=True, eq=False)
class TransferCertificate:
    """Identity between the rewrite's density matrix and the partial transpose."""

    holds: bool
    axis: int
    max_difference: float
    image: MultipartiteGraph
    transported: SeparableDecomposition | None = None
    transported_certificate: VerificationCertificate | None = None

    def __bool__(self) -> bool:
        if self.transported_certificate is not None:
            return self.holds and self.transported_certificate.passed
        return self.holds


def theorem1_transfer(
    graph: MultipartiteGraph,
    axis: int = 1,
    decomposition: SeparableDecomposition | None = None,
) -> TransferCertificate:
    """Certify that rewriting the graph transposes its combinatorial density
    matrix on the chosen subsystem.

    Requires degree symmetry on ``axis`` (otherwise the degree matrices of
    the graph and its rewrite differ and the identity fails by
    construction).  When a separable decomposition of the graph's
    combinatorial density matrix is supplied, the transported decomposition
    (subsystem factor transposed in every term) is emitted and verified
    against the rewrite's density matrix.
    """
    degree_report = is_degree_symmetric(graph, axis)
    if not degree_report.symmetric:
        preview = ", ".join(
            f"vertex {v}: {b}->{a}" for v, b, a in degree_report.changed[:4]
        )
        raise PreconditionError(
            f"graph is not degree symmetric on axis {axis} ({preview})",
            report=degree_report,
        )
    image = gtpt(graph, axis)
    rho = density_matrix(graph, COMBINATORIAL)
    rho_image = density_matrix(image, COMBINATORIAL)
    transposed = partial_transpose_matrix(rho.matrix, graph.profile, axis)
    max_difference = float(np.max(np.abs(rho_image.matrix - transposed)))
    holds = max_difference <= 1e-12

    transported = None
    transported_certificate = None
    if decomposition is not None:
        if decomposition.profile != graph.profile:
            raise ValueError(
                "decomposition profile does not match the graph profile"
            )
        moved_terms = tuple(
            DecompositionTerm(
                weight=term.weight,
                factors=tuple(
                    np.ascontiguousarray(np.asarray(f).T)
                    if k == axis - 1
                    else np.asarray(f)
                    for k, f in enumerate(term.factors)
                ),
            )
            for term in decomposition.terms
        )
        transported = SeparableDecomposition(graph.profile, moved_terms)
        transported_certificate = verify_decomposition(transported, rho_image)
    return TransferCertificate(
        holds, axis, max_difference, image, transported, transported_certificate
    )


_DECOMPOSITION_MAGIC = "graphsep-decomposition"


def format_decomposition(decomposition: SeparableDecomposition) -> str:
    """Serialise a decomposition as a stable, diffable text record.

    Header lines carry the profile, term count, reassembly residual and
    certificate flags; every term lists its weight (plus ladder trace when
    available) and each factor as an order header followed by row-major
    values at 17 significant digits.
    """
    lines = [_DECOMPOSITION_MAGIC]
    lines.append("dims " + " ".join(str(d) for d in decomposition.profile.dims))
    lines.append(f"terms {len(decomposition.terms)}")
    if decomposition.residual is not None:
        lines.append("residual " + format_float(decomposition.residual))
    if decomposition.certificates is not None:
        flags = " ".join(
            f"{name}={'pass' if ok else 'fail'}"
            for name, ok in decomposition.certificates
        )
        lines.append("certificates " + flags)
    for i, term in enumerate(decomposition.terms, start=1):
        lines.append(f"term {i}")
        if term.index is not None:
            lines.append("index " + " ".join(str(r) for r in term.index))
        lines.append("weight " + format_float(term.weight))
        if term.ladder is not None:
            lines.append("ladder " + " ".join(format_float(x) for x in term.ladder))
        for k, factor in enumerate(term.factors, start=1):
            mat = np.asarray(factor, dtype=float)
            lines.append(f"factor {k} order {mat.shape[0]}")
            for row in mat:
                lines.append(" ".join(format_float(x) for x in row))
    return "\n".join(lines) + "\n"


def parse_decomposition(text: str) -> SeparableDecomposition:
    """Parse the decomposition record format; errors carry line numbers."""
    lines = list(content_lines(text))
    pos = 0

    def take():
        nonlocal pos
        if pos >= len(lines):
            raise GraphFormatError("unexpected end of decomposition record")
        item = lines[pos]
        pos += 1
        return item

    lineno, line = take()
    if line != _DECOMPOSITION_MAGIC:
        raise GraphFormatError(
            f"expected {_DECOMPOSITION_MAGIC!r} header", line=lineno
        )
    lineno, line = take()
    tokens = line.split()
    if tokens[0] != "dims":
        raise GraphFormatError("expected 'dims' line", line=lineno)
    try:
        profile = DimensionProfile(tuple(int(t) for t in tokens[1:]))
    except ValueError as exc:
        raise GraphFormatError(str(exc), line=lineno) from None
    lineno, line = take()
    tokens = line.split()
    if tokens[0] != "terms" or len(tokens) != 2:
        raise GraphFormatError("expected 'terms N' line", line=lineno)
    try:
        expected_terms = int(tokens[1])
    except ValueError:
        raise GraphFormatError(f"bad term count {tokens[1]!r}", line=lineno) from None

    residual = None
    certificates = None
    while pos < len(lines) and lines[pos][1].split()[0] in ("residual", "certificates"):
        lineno, line = take()
        tokens = line.split()
        if tokens[0] == "residual":
            try:
                residual = float(tokens[1])
            except (IndexError, ValueError):
                raise GraphFormatError("bad residual line", line=lineno) from None
        else:
            flags = []
            for tok in tokens[1:]:
                name, _, value = tok.partition("=")
                if value not in ("pass", "fail"):
                    raise GraphFormatError(
                        f"bad certificate flag {tok!r}", line=lineno
                    )
                flags.append((name, value == "pass"))
            certificates = tuple(flags)

    n = profile.n
    terms = []
    for i in range(1, expected_terms + 1):
        lineno, line = take()
        if line.split() != ["term", str(i)]:
            raise GraphFormatError(f"expected 'term {i}', got {line!r}", line=lineno)
        index = None
        ladder = None
        if pos < len(lines) and lines[pos][1].startswith("index "):
            lineno, line = take()
            try:
                index = tuple(int(t) for t in line.split()[1:])
            except ValueError:
                raise GraphFormatError("bad index line", line=lineno) from None
        lineno, line = take()
        tokens = line.split()
        if tokens[0] != "weight" or len(tokens) != 2:
            raise GraphFormatError("expected 'weight x' line", line=lineno)
        try:
            weight = float(tokens[1])
        except ValueError:
            raise GraphFormatError(f"bad weight {tokens[1]!r}", line=lineno) from None
        if pos < len(lines) and lines[pos][1].startswith("ladder "):
            lineno, line = take()
            try:
                ladder = tuple(float(t) for t in line.split()[1:])
            except ValueError:
                raise GraphFormatError("bad ladder line", line=lineno) from None
        factors = []
        for k in range(1, n + 1):
            lineno, line = take()
            tokens = line.split()
            if tokens[:2] != ["factor", str(k)] or len(tokens) != 4 or tokens[2] != "order":
                raise GraphFormatError(
                    f"expected 'factor {k} order d', got {line!r}", line=lineno
                )
            try:
                order = int(tokens[3])
            except ValueError:
                raise GraphFormatError(f"bad order {tokens[3]!r}", line=lineno) from None
            if order != profile.dims[k - 1]:
                raise GraphFormatError(
                    f"factor {k} order {order} does not match dimension"
                    f" {profile.dims[k - 1]}",
                    line=lineno,
                )
            rows = []
            for _ in range(order):
                lineno, line = take()
                values = line.split()
                if len(values) != order:
                    raise GraphFormatError(
                        f"expected {order} values, got {len(values)}", line=lineno
                    )
                try:
                    rows.append([float(v) for v in values])
                except ValueError:
                    raise GraphFormatError(
                        f"bad numeric value in {line!r}", line=lineno
                    ) from None
            factors.append(np.array(rows))
        terms.append(
            DecompositionTerm(
                weight=weight, factors=tuple(factors), index=index, ladder=ladder
            )
        )
    if pos != len(lines):
        lineno, line = lines[pos]
        raise GraphFormatError(f"trailing content {line!r}", line=lineno)
    return SeparableDecomposition(
        profile, tuple(terms), residual=residual, certificates=certificates
    )
