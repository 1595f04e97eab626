"""Immutable sparse graph and the text edge-list format.

Edge-list files are bit-exact: line 1 is "<n> <m>", followed by exactly m
lines "<u> <v>" with 0 <= u < v < n, in ascending lexicographic order,
ASCII decimal, LF-terminated.  Writing then reading a graph reproduces it
exactly, byte for byte on a rewrite.
"""

from __future__ import annotations

import numpy as np

from .errors import EdgeListIntegrityError, EdgeListParseError


class SparseGraph:
    """Undirected simple graph: CSR adjacency plus the defining edge list.

    Vertices are 0-based.  Edges are stored once as parallel arrays
    (edges_u[k] < edges_v[k], ascending lexicographic); the CSR arrays give
    each vertex its sorted neighbor list.  Instances are immutable and safe
    to share across threads.
    """

    __slots__ = ("n", "m", "edges_u", "edges_v", "indptr", "indices")

    def __init__(self, n, edges_u, edges_v, indptr, indices):
        self.n = int(n)
        self.m = int(len(edges_u))
        self.edges_u = edges_u
        self.edges_v = edges_v
        self.indptr = indptr
        self.indices = indices
        for arr in (edges_u, edges_v, indptr, indices):
            arr.setflags(write=False)

    @classmethod
    def from_edges(cls, n, u, v, check=False):
        """Build from edge arrays with u[k] < v[k] in ascending lexicographic order."""
        u = np.ascontiguousarray(u, dtype=np.int64)
        v = np.ascontiguousarray(v, dtype=np.int64)
        if check:
            _check_edge_arrays(n, u, v)
        deg = np.bincount(u, minlength=n) + np.bincount(v, minlength=n)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(deg, out=indptr[1:])
        src = np.concatenate([u, v])
        dst = np.concatenate([v, u])
        order = np.lexsort((dst, src))
        indices = dst[order]
        return cls(n, u, v, indptr, indices)

    def neighbors(self, v):
        """Sorted neighbor array of vertex v (a view, do not mutate)."""
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for n={self.n}")
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def degree(self, v):
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for n={self.n}")
        return int(self.indptr[v + 1] - self.indptr[v])

    def __eq__(self, other):
        if not isinstance(other, SparseGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.m == other.m
            and np.array_equal(self.edges_u, other.edges_u)
            and np.array_equal(self.edges_v, other.edges_v)
        )

    def __hash__(self):
        return hash((self.n, self.m))

    def __repr__(self):
        return f"SparseGraph(n={self.n}, m={self.m})"


def degree_sequence(g: SparseGraph) -> np.ndarray:
    """Degree of every vertex; sums to 2m."""
    return np.diff(g.indptr)


def _check_edge_arrays(n, u, v):
    if len(u) != len(v):
        raise ValueError("edge arrays differ in length")
    if len(u) == 0:
        return
    if not (u < v).all():
        raise ValueError("edges must satisfy u < v (no self-loops, one orientation)")
    if u.min() < 0 or v.max() >= n:
        raise ValueError("edge endpoint out of range")
    key = u * np.int64(n) + v
    if not (np.diff(key) > 0).all():
        raise ValueError("edges must be unique and ascending lexicographic")


def write_edge_list(g: SparseGraph, path) -> None:
    """Write the bit-exact text format."""
    u = g.edges_u
    v = g.edges_v
    with open(path, "w", encoding="ascii", newline="\n") as f:
        f.write(f"{g.n} {g.m}\n")
        chunk = 1 << 16
        for k0 in range(0, g.m, chunk):
            a = u[k0 : k0 + chunk].tolist()
            b = v[k0 : k0 + chunk].tolist()
            f.write("".join(f"{x} {y}\n" for x, y in zip(a, b)))


def read_edge_list(path) -> SparseGraph:
    """Read and strictly validate the text format.

    Malformed lines raise EdgeListParseError with the offending line
    number; a parseable file whose content contradicts its header (count
    mismatch, endpoint out of range, order violation, trailing data)
    raises EdgeListIntegrityError.
    """
    with open(path, "r", encoding="ascii") as f:
        text = f.read()
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise EdgeListParseError("empty file", line_number=1)
    n, m = _parse_header(lines[0])
    if len(lines) - 1 != m:
        raise EdgeListIntegrityError(
            f"header promises {m} edges but file has {len(lines) - 1} edge lines"
        )
    if m == 0:
        return SparseGraph.from_edges(
            n, np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
        )
    try:
        flat = np.array(" ".join(lines[1:]).split(), dtype=np.int64)
        ok = flat.size == 2 * m
    except (ValueError, OverflowError):
        ok = False
    if not ok:
        _parse_edges_slow(lines, n)  # raises with a line number
        raise EdgeListParseError("malformed edge lines")
    u = flat[0::2].copy()
    v = flat[1::2].copy()
    if not ((u >= 0) & (u < v) & (v < n)).all():
        bad = int(np.flatnonzero(~((u >= 0) & (u < v) & (v < n)))[0])
        raise EdgeListIntegrityError(
            f"edge ({u[bad]}, {v[bad]}) on line {bad + 2} violates 0 <= u < v < n={n}"
        )
    key = u * np.int64(max(n, 1)) + v
    if not (np.diff(key) > 0).all():
        bad = int(np.flatnonzero(~(np.diff(key) > 0))[0])
        raise EdgeListIntegrityError(
            f"edges on lines {bad + 2} and {bad + 3} are out of order or duplicated"
        )
    return SparseGraph.from_edges(n, u, v)


def _parse_header(line: str):
    parts = line.split()
    if len(parts) != 2:
        raise EdgeListParseError(
            f"header must be '<n> <m>', got {line!r}", line_number=1
        )
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise EdgeListParseError(
            f"header must hold two integers, got {line!r}", line_number=1
        ) from None
    if n < 0 or m < 0:
        raise EdgeListIntegrityError(f"negative counts in header {line!r}")
    return n, m


def _parse_edges_slow(lines, n):
    """Per-line parse purely to attribute an error to a line number."""
    for k, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(
                f"edge line must be '<u> <v>', got {line!r}", line_number=k
            )
        try:
            int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(
                f"non-integer edge endpoint in {line!r}", line_number=k
            ) from None
