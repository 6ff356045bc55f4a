"""Geometry of the space of n x n symmetric matrices over GF(q).

Points are symmetric matrices, stored as the n(n+1)/2 upper-triangular
entries in row-major order (s11, s12, ..., s1n, s22, ..., snn).  The
canonical point index is the mixed-radix integer over those entries with
s11 least significant, so points enumerate 0 .. q^(n(n+1)/2) - 1.

Two points are adjacent when their difference has rank 1.  A "line" is a
maximal set of pairwise-adjacent points; it is a coset {S + x*D : x in
GF(q)} of a rank-1 direction D and contains exactly q points.  Lines are
identified by their sorted member-index tuple and enumerated in
lexicographic order of that tuple, which fixes the row ordering of the
incidence matrices built on top of this module.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .exceptions import (
    BadParametersError,
    DimensionMismatchError,
    EmptyInputError,
    NotAdjacentError,
    NotInvertibleError,
    TooLargeError,
)
from .gf import FieldTable, field_of_size

# graph_distance / neighbourhood BFS refuses spaces larger than this
BFS_POINT_CAP = 1 << 22
# enumerate_lines refuses instances with more lines than this
LINE_CAP = 1 << 22


@dataclass(frozen=True)
class SymPoint:
    """A symmetric matrix point: upper-triangular entries plus its index."""

    n: int
    q: int
    entries: tuple[int, ...]
    index: int


@dataclass(frozen=True)
class Line:
    """A maximal set of q pairwise-adjacent points.

    Identity is the sorted member-index tuple; `dir` is the rank-1
    difference normalized so its first nonzero upper-triangular entry is 1,
    and `index` is the position in the canonical enumeration (None for
    lines built standalone, before the space enumerated all lines).
    """

    base: SymPoint
    points: tuple[int, ...]
    dir: SymPoint = field(compare=False)
    index: int | None = field(default=None, compare=False)


@dataclass(frozen=True)
class Motion:
    """A transformation X -> P^T X P + S with P invertible over GF(q)."""

    p_rows: tuple[tuple[int, ...], ...]
    shift: SymPoint


class SymSpace:
    """The point set of n x n symmetric matrices over a fixed field."""

    def __init__(self, n: int, fld: FieldTable):
        if n < 1:
            raise BadParametersError(f"matrix order must be >= 1, got {n}")
        self.n = n
        self.field = fld
        self.q = fld.q
        self.dim = n * (n + 1) // 2
        self.size = self.q**self.dim
        self._powers = [self.q**i for i in range(self.dim)]
        self._coords = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
        self._pos = {c: k for k, c in enumerate(self._coords)}
        self._rank_one: tuple[tuple[int, ...], ...] | None = None
        self._directions: tuple[tuple[int, ...], ...] | None = None
        self._lines: tuple[Line, ...] | None = None
        self._line_index: dict[tuple[int, ...], int] | None = None

    @classmethod
    def of(cls, n: int, q: int) -> "SymSpace":
        return cls(n, field_of_size(q))

    # -- points --------------------------------------------------------------

    def _index_of(self, entries: tuple[int, ...]) -> int:
        s = 0
        for e in reversed(entries):
            s = s * self.q + e
        return s

    def _entries_of(self, index: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.dim):
            out.append(index % self.q)
            index //= self.q
        return tuple(out)

    def point(self, entries) -> SymPoint:
        entries = tuple(int(e) for e in entries)
        if len(entries) != self.dim:
            raise DimensionMismatchError(
                f"expected {self.dim} upper-triangular entries, got {len(entries)}"
            )
        for e in entries:
            if not 0 <= e < self.q:
                raise BadParametersError(f"entry {e} outside [0, {self.q})")
        return SymPoint(self.n, self.q, entries, self._index_of(entries))

    def point_at(self, index: int) -> SymPoint:
        if not 0 <= index < self.size:
            raise BadParametersError(f"point index {index} outside [0, {self.size})")
        return SymPoint(self.n, self.q, self._entries_of(index), index)

    def zero(self) -> SymPoint:
        return self.point((0,) * self.dim)

    def identity(self) -> SymPoint:
        ent = [0] * self.dim
        for i in range(1, self.n + 1):
            ent[self._pos[(i, i)]] = 1
        return self.point(ent)

    def diag_unit(self, i: int) -> SymPoint:
        """The matrix with a single 1 at diagonal position (i, i), 1-based."""
        ent = [0] * self.dim
        ent[self._pos[(i, i)]] = 1
        return self.point(ent)

    def sym_unit(self, i: int, j: int) -> SymPoint:
        """The symmetric matrix with 1 at (i, j) and (j, i), i != j, 1-based."""
        if i == j:
            raise BadParametersError("sym_unit requires i != j; use diag_unit")
        ent = [0] * self.dim
        ent[self._pos[(min(i, j), max(i, j))]] = 1
        return self.point(ent)

    def corner(self, a: int, b: int, c: int) -> SymPoint:
        """The matrix with top-left 2x2 block [[a, b], [b, c]] and zeros elsewhere."""
        if self.n < 2:
            raise DimensionMismatchError("corner pattern needs n >= 2")
        ent = [0] * self.dim
        ent[self._pos[(1, 1)]] = a
        ent[self._pos[(1, 2)]] = b
        ent[self._pos[(2, 2)]] = c
        return self.point(ent)

    def from_matrix(self, rows) -> SymPoint:
        rows = [list(r) for r in rows]
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise DimensionMismatchError(f"expected a {self.n}x{self.n} matrix")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if rows[i][j] != rows[j][i]:
                    raise BadParametersError("matrix is not symmetric")
        return self.point([rows[i - 1][j - 1] for (i, j) in self._coords])

    def entry(self, s: SymPoint, i: int, j: int) -> int:
        """Entry at 1-based position (i, j) of the full symmetric matrix."""
        self._check_point(s)
        return s.entries[self._pos[(min(i, j), max(i, j))]]

    def matrix_of(self, s: SymPoint) -> list[list[int]]:
        mat = [[0] * self.n for _ in range(self.n)]
        for (i, j), e in zip(self._coords, s.entries):
            mat[i - 1][j - 1] = e
            mat[j - 1][i - 1] = e
        return mat

    def _check_point(self, s: SymPoint) -> None:
        if s.n != self.n or s.q != self.q:
            raise DimensionMismatchError(
                f"point from S_{s.n}(F_{s.q}) used in S_{self.n}(F_{self.q})"
            )

    # -- arithmetic ----------------------------------------------------------

    def add(self, s1: SymPoint, s2: SymPoint) -> SymPoint:
        self._check_point(s1)
        self._check_point(s2)
        tbl = self.field.add_table
        ent = tuple(tbl[a][b] for a, b in zip(s1.entries, s2.entries))
        return SymPoint(self.n, self.q, ent, self._index_of(ent))

    def sub(self, s1: SymPoint, s2: SymPoint) -> SymPoint:
        self._check_point(s1)
        self._check_point(s2)
        tbl = self.field.add_table
        neg = self.field.neg_table
        ent = tuple(tbl[a][neg[b]] for a, b in zip(s1.entries, s2.entries))
        return SymPoint(self.n, self.q, ent, self._index_of(ent))

    def scale(self, x: int, s: SymPoint) -> SymPoint:
        self._check_point(s)
        row = self.field.mul_table[x]
        ent = tuple(row[e] for e in s.entries)
        return SymPoint(self.n, self.q, ent, self._index_of(ent))

    def is_alternate(self, s: SymPoint) -> bool:
        """Nonzero with an all-zero diagonal (the characteristic-2 special case)."""
        self._check_point(s)
        if s.index == 0:
            return False
        return all(s.entries[self._pos[(i, i)]] == 0 for i in range(1, self.n + 1))

    # -- ranks and distances ---------------------------------------------------

    def _matrix_rank(self, rows: list[list[int]]) -> int:
        ft = self.field
        mat = [row[:] for row in rows]
        nrows = len(mat)
        ncols = len(mat[0]) if mat else 0
        rank = 0
        for col in range(ncols):
            piv = None
            for r in range(rank, nrows):
                if mat[r][col] != 0:
                    piv = r
                    break
            if piv is None:
                continue
            mat[rank], mat[piv] = mat[piv], mat[rank]
            iv = ft.inv_table[mat[rank][col]]
            for r in range(nrows):
                if r != rank and mat[r][col] != 0:
                    f = ft.mul_table[mat[r][col]][iv]
                    prow = mat[rank]
                    trow = mat[r]
                    for c in range(col, ncols):
                        if prow[c]:
                            trow[c] = ft.add_table[trow[c]][
                                ft.neg_table[ft.mul_table[f][prow[c]]]
                            ]
            rank += 1
            if rank == nrows:
                break
        return rank

    def rank(self, s: SymPoint) -> int:
        self._check_point(s)
        return self._matrix_rank(self.matrix_of(s))

    def arithmetic_distance(self, s1: SymPoint, s2: SymPoint) -> int:
        return self.rank(self.sub(s1, s2))

    def neighbor_indices(self, idx: int) -> list[int]:
        """Indices of all points at arithmetic distance 1 from the given index."""
        ent = self._entries_of(idx)
        tbl = self.field.add_table
        out = []
        for d in self.rank_one_entries():
            out.append(self._index_of(tuple(tbl[a][b] for a, b in zip(ent, d))))
        return out

    def graph_distance(self, s1: SymPoint, s2: SymPoint) -> int:
        """Shortest-path length in the rank-1 adjacency graph, by BFS."""
        self._check_point(s1)
        self._check_point(s2)
        if self.size > BFS_POINT_CAP:
            raise TooLargeError(f"{self.size} points exceeds BFS cap {BFS_POINT_CAP}")
        if s1.index == s2.index:
            return 0
        target = s2.index
        dist = {s1.index: 0}
        frontier = [s1.index]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for idx in frontier:
                for nb in self.neighbor_indices(idx):
                    if nb not in dist:
                        if nb == target:
                            return d
                        dist[nb] = d
                        nxt.append(nb)
            frontier = nxt
        raise AssertionError("rank-1 graph is connected")  # unreachable

    # -- rank-1 points and lines ------------------------------------------------

    def _rank_one_entries_for(self, n: int) -> list[tuple[int, ...]]:
        # Constructive enumeration: either the first row is zero and the
        # matrix is a rank-1 point of the (n-1)-block, or s11 != 0 and all
        # entries are determined by the first row via s_ij = s11^-1 s_1i s_1j.
        ft = self.field
        q = self.q
        if n == 1:
            return [(s,) for s in range(1, q)]
        out: list[tuple[int, ...]] = []
        mul = ft.mul_table
        for s11 in range(1, q):
            iv = ft.inv_table[s11]
            for rest in itertools.product(range(q), repeat=n - 1):
                row1 = (s11,) + rest
                ent = []
                for i in range(n):
                    ri = mul[iv][row1[i]]
                    for j in range(i, n):
                        ent.append(mul[ri][row1[j]])
                out.append(tuple(ent))
        for sub in self._rank_one_entries_for(n - 1):
            out.append((0,) * n + sub)
        return out

    def rank_one_entries(self) -> tuple[tuple[int, ...], ...]:
        """Entry vectors of all q^n - 1 rank-1 points."""
        if self._rank_one is None:
            ents = self._rank_one_entries_for(self.n)
            assert len(ents) == self.q**self.n - 1
            self._rank_one = tuple(ents)
        return self._rank_one

    def direction_entries(self) -> tuple[tuple[int, ...], ...]:
        """One rank-1 representative per scalar class: first nonzero entry is 1."""
        if self._directions is None:
            dirs = [e for e in self.rank_one_entries() if next(x for x in e if x) == 1]
            assert len(dirs) == (self.q**self.n - 1) // (self.q - 1)
            self._directions = tuple(dirs)
        return self._directions

    def deleted_neighbourhood(self, s: SymPoint, delta: int = 1) -> set[SymPoint]:
        """Points at graph distance in (0, delta] from s."""
        self._check_point(s)
        if delta < 1:
            raise BadParametersError(f"delta must be >= 1, got {delta}")
        shell = {self.point_at(nb) for nb in self.neighbor_indices(s.index)}
        if delta == 1:
            return shell
        if self.size > BFS_POINT_CAP:
            raise TooLargeError(f"{self.size} points exceeds BFS cap {BFS_POINT_CAP}")
        seen = {s.index} | {p.index for p in shell}
        frontier = [p.index for p in shell]
        out = set(shell)
        for _ in range(delta - 1):
            nxt = []
            for idx in frontier:
                for nb in self.neighbor_indices(idx):
                    if nb not in seen:
                        seen.add(nb)
                        nxt.append(nb)
                        out.add(self.point_at(nb))
            frontier = nxt
        return out

    def common_deleted_neighbourhood(self, points) -> set[SymPoint]:
        """Intersection of the rank-1 shells of the given points."""
        pts = list(points)
        if not pts:
            raise EmptyInputError("need at least one point")
        common = self.deleted_neighbourhood(pts[0])
        for s in pts[1:]:
            common &= self.deleted_neighbourhood(s)
        return common

    def _normalize_direction(self, ent: tuple[int, ...]) -> tuple[int, ...]:
        lead = next(x for x in ent if x)
        if lead == 1:
            return ent
        row = self.field.mul_table[self.field.inv_table[lead]]
        return tuple(row[e] for e in ent)

    def line_through(self, s1: SymPoint, s2: SymPoint) -> Line:
        """The unique line containing two adjacent points, in canonical form."""
        self._check_point(s1)
        self._check_point(s2)
        diff = self.sub(s1, s2)
        if self.rank(diff) != 1:
            raise NotAdjacentError(
                f"points differ by rank {self.rank(diff)}, need rank 1"
            )
        d_ent = self._normalize_direction(diff.entries)
        tbl = self.field.add_table
        members = []
        for x in range(self.q):
            xe = self.scale(x, SymPoint(self.n, self.q, d_ent, self._index_of(d_ent)))
            members.append(
                self._index_of(tuple(tbl[a][b] for a, b in zip(s2.entries, xe.entries)))
            )
        members = tuple(sorted(members))
        idx = self._line_index.get(members) if self._line_index is not None else None
        return Line(
            base=self.point_at(members[0]),
            points=members,
            dir=SymPoint(self.n, self.q, d_ent, self._index_of(d_ent)),
            index=idx,
        )

    def line_count(self) -> int:
        """(q^n - 1)/(q - 1) * q^((n^2 + n - 2)/2), without enumerating."""
        return (self.q**self.n - 1) // (self.q - 1) * self.q ** ((self.n**2 + self.n - 2) // 2)

    def lines(self) -> tuple[Line, ...]:
        """All lines exactly once, ordered lexicographically by member tuple."""
        if self._lines is not None:
            return self._lines
        total = self.line_count()
        if total > LINE_CAP:
            raise TooLargeError(f"{total} lines exceeds cap {LINE_CAP}")
        tbl = self.field.add_table
        collected = []
        for d_ent in self.direction_entries():
            d_pt = SymPoint(self.n, self.q, d_ent, self._index_of(d_ent))
            mult_ents = [self.scale(x, d_pt).entries for x in range(self.q)]
            for idx in range(self.size):
                ent = self._entries_of(idx)
                members = sorted(
                    self._index_of(tuple(tbl[a][b] for a, b in zip(ent, me)))
                    for me in mult_ents
                )
                if members[0] == idx:
                    collected.append((tuple(members), d_ent))
        collected.sort(key=lambda t: t[0])
        assert len(collected) == total
        self._line_index = {members: k for k, (members, _) in enumerate(collected)}
        self._lines = tuple(
            Line(
                base=self.point_at(members[0]),
                points=members,
                dir=SymPoint(self.n, self.q, d_ent, self._index_of(d_ent)),
                index=k,
            )
            for k, (members, d_ent) in enumerate(collected)
        )
        return self._lines

    def line_index(self, members) -> int:
        """Canonical index of the line with the given member indices."""
        self.lines()
        assert self._line_index is not None
        key = tuple(sorted(int(m) for m in members))
        if key not in self._line_index:
            raise BadParametersError(f"{key} is not a line of this space")
        return self._line_index[key]

    def lines_through(self, s: SymPoint) -> list[Line]:
        """All (q^n - 1)/(q - 1) lines containing the given point."""
        self._check_point(s)
        out = []
        for d_ent in self.direction_entries():
            d_pt = SymPoint(self.n, self.q, d_ent, self._index_of(d_ent))
            out.append(self.line_through(self.add(s, d_pt), s))
        return out

    # -- motions -----------------------------------------------------------------

    def motion(self, p_rows, shift: SymPoint) -> Motion:
        rows = [list(r) for r in p_rows]
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise DimensionMismatchError(f"P must be {self.n}x{self.n}")
        self._check_point(shift)
        if self._matrix_rank(rows) != self.n:
            raise NotInvertibleError("P is singular over the field")
        return Motion(tuple(tuple(r) for r in rows), shift)

    def apply_motion(self, g: Motion, s: SymPoint) -> SymPoint:
        """P^T S P + shift, re-symmetrized into canonical entry form."""
        self._check_point(s)
        self._check_point(g.shift)
        if len(g.p_rows) != self.n:
            raise DimensionMismatchError("motion dimension does not match space")
        ft = self.field
        mul = ft.mul_table
        addt = ft.add_table
        smat = self.matrix_of(s)
        n = self.n
        # t = S P
        t = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                acc = 0
                for k in range(n):
                    acc = addt[acc][mul[smat[i][k]][g.p_rows[k][j]]]
                t[i][j] = acc
        # r = P^T t
        r = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                acc = 0
                for k in range(n):
                    acc = addt[acc][mul[g.p_rows[k][i]][t[k][j]]]
                r[i][j] = acc
        out = self.from_matrix(r)
        return self.add(out, g.shift)

    def random_motion(self, rng: random.Random) -> Motion:
        while True:
            rows = [[rng.randrange(self.q) for _ in range(self.n)] for _ in range(self.n)]
            if self._matrix_rank([r[:] for r in rows]) == self.n:
                break
        shift = self.point_at(rng.randrange(self.size))
        return self.motion(rows, shift)

    def __repr__(self) -> str:
        return f"SymSpace(n={self.n}, q={self.q})"
