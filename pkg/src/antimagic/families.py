"""Path, cycle, lattice-grid, and prism graphs, with the vertex orderings the labelers expect.

Vertices are 1-based ``(row, col)`` pairs.  Rows index the first factor of a
product (the cycle of a prism, the short path of a grid), columns the second;
standalone paths and cycles live in a single column.  The factor paths and
cycles come in fixed "arrangements": vertex namings under which most edges
join indices ``i`` and ``i + 2``.  All labeling schemes in this package are
stated against these namings, so the graphs here must use them verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParameterError, SizeRefusalError

PATH = "path"
CYCLE = "cycle"
LATTICE = "lattice"
PRISM = "prism"
FAMILIES = (PATH, CYCLE, LATTICE, PRISM)

CONSECUTIVE_PATH = "consecutive-path"
SKIP_PATH = "skip-path"
SKIP_CYCLE = "skip-cycle"

#: materialized graphs above this edge count are refused (use the stream module instead)
MAX_MATERIALIZED_EDGES = 10**8


def canonical_edge(a, b):
    """Order edge endpoints lexicographically by (row, col)."""
    if a == b:
        raise InvalidParameterError(f"self-loop at {a}")
    return (a, b) if a < b else (b, a)


def _skip_traversal(size):
    # walk odd indices up, then even indices back down
    evens_start = size if size % 2 == 0 else size - 1
    return tuple(range(1, size + 1, 2)) + tuple(range(evens_start, 0, -2))


@dataclass(frozen=True)
class Arrangement:
    """A path or cycle whose vertex names follow one of the fixed listing schemes.

    ``edges`` holds index pairs in listing order; the labelers index into it
    with 1-based positions.  ``traversal`` walks the underlying path or cycle
    exactly once, starting at vertex 1 (a cycle closes back to vertex 1 via
    the edge ``(1, 2)``).
    """

    kind: str
    size: int
    edges: tuple
    traversal: tuple

    def positions(self):
        """Map vertex index -> 1-based position along the traversal."""
        return {v: p for p, v in enumerate(self.traversal, start=1)}

    def edge_listing_index(self):
        """Map canonical endpoint pair -> 1-based listing position."""
        return {pair: k for k, pair in enumerate(self.edges, start=1)}


def make_arrangement(kind, size):
    """Build the named arrangement on ``size`` vertices.

    * ``consecutive-path``: edges (i, i+1), natural traversal.
    * ``skip-path``: edges (i, i+2) for i = 1..size-2 plus the turnaround
      edge (size-1, size); traversal 1, 3, 5, ... then back down the evens.
    * ``skip-cycle``: edge (1, 2), then (i, i+2) for i = 1..size-2, then
      (size-1, size); same traversal, closed by (1, 2).
    """
    if not isinstance(size, int) or isinstance(size, bool):
        raise InvalidParameterError(f"arrangement size must be an int, got {size!r}")
    if kind == CONSECUTIVE_PATH:
        if size < 2:
            raise InvalidParameterError(f"{kind} needs size >= 2, got {size}")
        edges = tuple((i, i + 1) for i in range(1, size))
        traversal = tuple(range(1, size + 1))
    elif kind == SKIP_PATH:
        if size < 2:
            raise InvalidParameterError(f"{kind} needs size >= 2, got {size}")
        edges = tuple((i, i + 2) for i in range(1, size - 1)) + ((size - 1, size),)
        traversal = _skip_traversal(size)
    elif kind == SKIP_CYCLE:
        if size < 3:
            raise InvalidParameterError(f"{kind} needs size >= 3, got {size}")
        edges = ((1, 2),) + tuple((i, i + 2) for i in range(1, size - 1)) + ((size - 1, size),)
        traversal = _skip_traversal(size)
    else:
        raise InvalidParameterError(f"unknown arrangement kind {kind!r}")
    return Arrangement(kind, size, edges, traversal)


@dataclass(frozen=True)
class FamilySpec:
    """Which graph family to build and its size parameters.

    ``n`` is ignored for paths and cycles.  Lattice means the grid product of
    paths on m+1 and n+1 vertices; prism the product of an m-cycle and a path
    on n+1 vertices.
    """

    family: str
    m: int
    n: int = 0

    def validate(self):
        if self.family not in FAMILIES:
            raise InvalidParameterError(f"unknown family {self.family!r}")
        for name, value in (("m", self.m), ("n", self.n)):
            if not isinstance(value, int) or isinstance(value, bool):
                raise InvalidParameterError(f"{name} must be an int, got {value!r}")
        if self.family == PATH and self.m < 2:
            raise InvalidParameterError(f"path needs m >= 2, got m={self.m}")
        if self.family == CYCLE and self.m < 3:
            raise InvalidParameterError(f"cycle needs m >= 3, got m={self.m}")
        if self.family == LATTICE and (self.m < 1 or self.n < 1):
            raise InvalidParameterError(f"lattice needs m, n >= 1, got m={self.m} n={self.n}")
        if self.family == PRISM and (self.m < 3 or self.n < 1):
            raise InvalidParameterError(f"prism needs m >= 3 and n >= 1, got m={self.m} n={self.n}")

    def vertex_count(self):
        if self.family == PATH:
            return self.m + 1
        if self.family == CYCLE:
            return self.m
        if self.family == LATTICE:
            return (self.m + 1) * (self.n + 1)
        return self.m * (self.n + 1)

    def edge_count(self):
        if self.family in (PATH, CYCLE):
            return self.m
        if self.family == LATTICE:
            return 2 * self.m * self.n + self.m + self.n
        return 2 * self.m * self.n + self.m

    def row_count(self):
        if self.family == PATH:
            return self.m + 1
        if self.family == CYCLE:
            return self.m
        if self.family == LATTICE:
            return self.m + 1
        return self.m

    def col_count(self):
        if self.family in (PATH, CYCLE):
            return 1
        return self.n + 1


def factor_arrangements(spec):
    """Arrangements for the row factor and the column factor of ``spec``.

    The column arrangement is ``None`` for standalone paths and cycles.  For
    lattices the naming depends on the shape: with 2 <= m <= n the rows carry
    the skip naming and the columns the consecutive one; a single-row grid
    (m = 1, n >= 2) puts the skip naming on its long side; shapes with m > n
    mirror the transposed shape.
    """
    if spec.family == PATH:
        return make_arrangement(SKIP_PATH, spec.m + 1), None
    if spec.family == CYCLE:
        return make_arrangement(SKIP_CYCLE, spec.m), None
    m, n = spec.m, spec.n
    if spec.family == PRISM:
        rows = make_arrangement(SKIP_CYCLE, m)
        cols = make_arrangement(SKIP_PATH if n >= 2 else CONSECUTIVE_PATH, n + 1)
        return rows, cols
    if m == 1 and n == 1:
        return make_arrangement(CONSECUTIVE_PATH, 2), make_arrangement(CONSECUTIVE_PATH, 2)
    if m == 1:
        return make_arrangement(CONSECUTIVE_PATH, 2), make_arrangement(SKIP_PATH, n + 1)
    if n == 1:
        return make_arrangement(SKIP_PATH, m + 1), make_arrangement(CONSECUTIVE_PATH, 2)
    if m <= n:
        return make_arrangement(SKIP_PATH, m + 1), make_arrangement(CONSECUTIVE_PATH, n + 1)
    return make_arrangement(CONSECUTIVE_PATH, m + 1), make_arrangement(SKIP_PATH, n + 1)


@dataclass
class Graph:
    """A concrete vertex/edge set.  Treated as immutable once built."""

    spec: FamilySpec | None
    vertices: list
    edges: list
    adjacency: dict
    row_arrangement: Arrangement | None = None
    col_arrangement: Arrangement | None = None


def _adjacency(vertices, edges):
    adj = {v: [] for v in vertices}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    for v in adj:
        adj[v].sort()
    return adj


def build_graph(spec):
    """Materialize the graph for ``spec`` with canonically sorted edges."""
    spec.validate()
    if spec.edge_count() > MAX_MATERIALIZED_EDGES:
        raise SizeRefusalError(
            f"{spec.edge_count()} edges exceeds the materialization cap of "
            f"{MAX_MATERIALIZED_EDGES}; use the stream module for this size"
        )
    row_arr, col_arr = factor_arrangements(spec)
    n_rows, n_cols = spec.row_count(), spec.col_count()
    vertices = [(r, c) for r in range(1, n_rows + 1) for c in range(1, n_cols + 1)]
    edges = []
    for a, b in row_arr.edges:
        for c in range(1, n_cols + 1):
            edges.append(((a, c), (b, c)))
    if col_arr is not None:
        for r in range(1, n_rows + 1):
            for a, b in col_arr.edges:
                edges.append(((r, a), (r, b)))
    edges.sort()
    if len(edges) != spec.edge_count():
        raise AssertionError(f"edge count mismatch for {spec}")
    return Graph(spec, vertices, edges, _adjacency(vertices, edges), row_arr, col_arr)


def graph_from_edges(edges):
    """Ad-hoc graph from canonical edges (file input, negative controls)."""
    seen = set()
    for a, b in edges:
        if canonical_edge(a, b) != (a, b):
            raise InvalidParameterError(f"edge {(a, b)} is not in canonical endpoint order")
        if (a, b) in seen:
            raise InvalidParameterError(f"repeated edge {(a, b)}")
        seen.add((a, b))
    vertices = sorted({v for e in edges for v in e})
    edges = sorted(edges)
    return Graph(None, vertices, edges, _adjacency(vertices, edges))


def k2_graph():
    """The single-edge graph on two vertices.

    Both endpoints of the lone edge always receive the same sum, so no
    bijection onto {1} separates them; useful as a negative control for
    search and verification code.
    """
    return graph_from_edges([((1, 1), (2, 1))])
