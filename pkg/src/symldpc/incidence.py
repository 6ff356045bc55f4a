"""Line-point incidence matrices and their graph invariants.

`build_h` assembles the sparse 0/1 matrix whose rows are the canonical
lines and whose columns are the canonical points of a symmetric-matrix
space; entry (i, j) is 1 exactly when line i contains point j.  The same
matrix doubles as the bipartite adjacency structure used for girth and
diameter computations, and as the parity-check matrix of the two code
families built in `codes`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import StructureViolationError, TooLargeError
from .symspace import SymSpace

# build_h refuses instances with more incidences than this
EDGE_CAP = 1 << 24
# diameter/girth BFS refuses graphs with more vertices than this
VERTEX_CAP = 1 << 20

INFINITE = float("inf")


@dataclass(frozen=True)
class SparseBitMatrix:
    """A sparse binary matrix kept as consistent row and column supports."""

    nrows: int
    ncols: int
    row_support: tuple[tuple[int, ...], ...]
    col_support: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, nrows: int, ncols: int, rows) -> "SparseBitMatrix":
        row_support = []
        cols: list[list[int]] = [[] for _ in range(ncols)]
        for i, row in enumerate(rows):
            row = tuple(int(j) for j in row)
            if any(row[k] >= row[k + 1] for k in range(len(row) - 1)):
                raise ValueError(f"row {i} support not strictly increasing")
            if row and (row[0] < 0 or row[-1] >= ncols):
                raise ValueError(f"row {i} has column index out of range")
            row_support.append(row)
            for j in row:
                cols[j].append(i)
        if len(row_support) != nrows:
            raise ValueError(f"expected {nrows} rows, got {len(row_support)}")
        return cls(
            nrows=nrows,
            ncols=ncols,
            row_support=tuple(row_support),
            col_support=tuple(tuple(c) for c in cols),
        )

    def transpose(self) -> "SparseBitMatrix":
        return SparseBitMatrix(
            nrows=self.ncols,
            ncols=self.nrows,
            row_support=self.col_support,
            col_support=self.row_support,
        )

    @property
    def edge_count(self) -> int:
        return sum(len(r) for r in self.row_support)

    def toarray(self) -> np.ndarray:
        out = np.zeros((self.nrows, self.ncols), dtype=np.uint8)
        for i, row in enumerate(self.row_support):
            out[i, list(row)] = 1
        return out


@dataclass(frozen=True)
class BipartiteGraph:
    """Left vertices = rows (lines), right vertices = columns (points)."""

    left: int
    right: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_matrix(cls, h: SparseBitMatrix) -> "BipartiteGraph":
        edges = tuple(
            (i, j) for i, row in enumerate(h.row_support) for j in row
        )
        return cls(left=h.nrows, right=h.ncols, edges=edges)

    def adjacency(self) -> list[list[int]]:
        """Single vertex numbering: 0..left-1 rows, then left..left+right-1 columns."""
        adj: list[list[int]] = [[] for _ in range(self.left + self.right)]
        for i, j in self.edges:
            adj[i].append(self.left + j)
            adj[self.left + j].append(i)
        return adj


@dataclass(frozen=True)
class StructureReport:
    """Outcome of the four regular-LDPC structure checks."""

    nrows: int
    ncols: int
    rho: int
    gamma: int
    lambda_max: int
    edge_count: int
    rho_over_ncols: float
    gamma_over_nrows: float


def build_h(space: SymSpace) -> SparseBitMatrix:
    """Incidence matrix of the space: rows are lines, columns are points."""
    r = space.line_count()
    edges = r * space.q
    if edges > EDGE_CAP:
        raise TooLargeError(
            f"instance has r={r} lines x q={space.q} = {edges} incidences, "
            f"exceeding cap {EDGE_CAP} (c={space.size} points)"
        )
    rows = [line.points for line in space.lines()]
    return SparseBitMatrix.from_rows(r, space.size, rows)


def verify_structure(h: SparseBitMatrix, n: int, q: int) -> StructureReport:
    """Check row weight q, column weight (q^n-1)/(q-1), and pairwise overlap <= 1.

    Raises StructureViolationError naming the first failing row, column, or
    pair.  Returns a report with the observed weights and sparsity ratios.
    """
    gamma = (q**n - 1) // (q - 1)
    for i, row in enumerate(h.row_support):
        if len(row) != q:
            raise StructureViolationError(f"row {i} has weight {len(row)}, expected {q}")
    for j, col in enumerate(h.col_support):
        if len(col) != gamma:
            raise StructureViolationError(
                f"column {j} has weight {len(col)}, expected {gamma}"
            )
    # two columns sharing two rows show up as a repeated row-pair inside a column,
    # and symmetrically for rows
    seen_row_pairs: set[tuple[int, int]] = set()
    for j, col in enumerate(h.col_support):
        for a in range(len(col)):
            for b in range(a + 1, len(col)):
                pair = (col[a], col[b])
                if pair in seen_row_pairs:
                    raise StructureViolationError(
                        f"rows {pair[0]} and {pair[1]} share more than one column "
                        f"(second overlap at column {j})"
                    )
                seen_row_pairs.add(pair)
    seen_col_pairs: set[tuple[int, int]] = set()
    for i, row in enumerate(h.row_support):
        for a in range(len(row)):
            for b in range(a + 1, len(row)):
                pair = (row[a], row[b])
                if pair in seen_col_pairs:
                    raise StructureViolationError(
                        f"columns {pair[0]} and {pair[1]} share more than one row "
                        f"(second overlap at row {i})"
                    )
                seen_col_pairs.add(pair)
    lambda_max = 1 if seen_row_pairs else 0
    return StructureReport(
        nrows=h.nrows,
        ncols=h.ncols,
        rho=q,
        gamma=gamma,
        lambda_max=lambda_max,
        edge_count=h.edge_count,
        rho_over_ncols=q / h.ncols,
        gamma_over_nrows=gamma / h.nrows,
    )


def girth(g: BipartiteGraph):
    """Length of the shortest cycle, or the infinity float for forests.

    BFS from every vertex; a non-tree edge between depths d1 and d2 closes
    a cycle of length d1 + d2 + 1 through the root, and the minimum of
    those candidates over all roots is exact.  BFS depth is capped at what
    could still improve the current best.
    """
    nverts = g.left + g.right
    if nverts > VERTEX_CAP:
        raise TooLargeError(f"{nverts} vertices exceeds BFS cap {VERTEX_CAP}")
    adj = g.adjacency()
    best = INFINITE
    dist = [-1] * nverts
    parent = [-1] * nverts
    for root in range(nverts):
        dist[root] = 0
        parent[root] = -1
        queue = [root]
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            du = dist[u]
            if best != INFINITE and du > (best - 2) // 2:
                break
            for w in adj[u]:
                if dist[w] == -1:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    cand = du + dist[w] + 1
                    if cand < best:
                        best = cand
        for v in queue:
            dist[v] = -1
            parent[v] = -1
    return best


def diameter(g: BipartiteGraph):
    """Maximum BFS eccentricity; the infinity float when disconnected."""
    nverts = g.left + g.right
    if nverts > VERTEX_CAP:
        raise TooLargeError(f"{nverts} vertices exceeds BFS cap {VERTEX_CAP}")
    if nverts == 0:
        return 0
    adj = g.adjacency()
    worst = 0
    for root in range(nverts):
        dist = [-1] * nverts
        dist[root] = 0
        queue = [root]
        qi = 0
        reached = 1
        ecc = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            for w in adj[u]:
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    ecc = dist[w]
                    reached += 1
                    queue.append(w)
        if reached < nverts:
            return INFINITE
        worst = max(worst, ecc)
    return worst


def point_graph_components(space: SymSpace) -> int:
    """Number of connected components of the rank-1 adjacency graph on points."""
    if space.size > VERTEX_CAP:
        raise TooLargeError(f"{space.size} points exceeds BFS cap {VERTEX_CAP}")
    seen = bytearray(space.size)
    components = 0
    for start in range(space.size):
        if seen[start]:
            continue
        components += 1
        seen[start] = 1
        stack = [start]
        while stack:
            idx = stack.pop()
            for nb in space.neighbor_indices(idx):
                if not seen[nb]:
                    seen[nb] = 1
                    stack.append(nb)
    return components
