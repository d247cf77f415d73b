"""Small simple graphs on vertices 0..n-1.

Provides the graph type used everywhere else, the edge-list file format,
degree utilities, connectivity and unicyclicity predicates, and an
isomorphism-invariant canonical code for deduplicating small graphs.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

__all__ = [
    "Graph",
    "ParseError",
    "parse_edge_list",
    "serialize_edge_list",
    "degrees",
    "degree_sequence",
    "max_degree",
    "pendant_count",
    "is_connected",
    "is_unicyclic",
    "canonical_code",
    "relabel",
]

CANONICAL_MAX_N = 12


class ParseError(ValueError):
    """Malformed edge-list input; message names the offending line."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph: vertex count plus a set of (u, v) pairs.

    Edges are normalized to u < v. Self-loops are rejected, duplicate
    edges collapse. Instances are immutable and hashable.
    """

    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __init__(self, n: int, edges=()):
        if n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={n}")
        normalized = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            normalized.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


@functools.lru_cache(maxsize=None)
def _adjacency(g: Graph) -> tuple[tuple[int, ...], ...]:
    nbrs = [[] for _ in range(g.n)]
    for u, v in g.edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    return tuple(tuple(sorted(a)) for a in nbrs)


def degrees(g: Graph) -> tuple[int, ...]:
    """Degree of each vertex, indexed by vertex."""
    return tuple(len(a) for a in _adjacency(g))


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Degrees sorted non-increasingly.

    Raises ValueError if some vertex is isolated: the downstream
    majorization machinery is defined for positive entries only.
    """
    degs = degrees(g)
    if 0 in degs:
        raise ValueError(f"vertex {degs.index(0)} is isolated")
    return tuple(sorted(degs, reverse=True))


def max_degree(g: Graph) -> int:
    return max(degrees(g))


def pendant_count(g: Graph) -> int:
    """Number of degree-1 vertices."""
    return sum(1 for d in degrees(g) if d == 1)


def is_connected(g: Graph) -> bool:
    adj = _adjacency(g)
    seen = [False] * g.n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                stack.append(v)
    return count == g.n


def is_unicyclic(g: Graph) -> bool:
    """Connected with exactly as many edges as vertices (one cycle)."""
    return g.m == g.n and is_connected(g)


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format.

    Lines starting with '#' are comments, blank lines are skipped. The
    first remaining line is the vertex count n; every other line is an
    edge "u v" with 0 <= u, v < n. Errors name the 1-based line number.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1:
                raise ParseError(f"line {lineno}: expected vertex count, got {line!r}")
            try:
                n = int(parts[0])
            except ValueError:
                raise ParseError(f"line {lineno}: vertex count is not an integer: {line!r}") from None
            if n < 1:
                raise ParseError(f"line {lineno}: vertex count must be positive, got {n}")
            continue
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: edge endpoints must be integers: {line!r}") from None
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: vertex out of range for n={n}: {line!r}")
        edges.append((u, v))
    if n is None:
        raise ParseError("no vertex count line found")
    return Graph(n, edges)


def serialize_edge_list(g: Graph) -> str:
    """Inverse of parse_edge_list; edges sorted as (min, max) pairs."""
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def relabel(g: Graph, perm) -> Graph:
    """Apply a vertex permutation: vertex v becomes perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("not a permutation of range(n)")
    return Graph(g.n, ((perm[u], perm[v]) for u, v in g.edges))


# ---------------------------------------------------------------------------
# canonical codes
#
# Code layout: one byte for n, then the lower triangle of the adjacency
# matrix (row by row, slot 0 most significant within a row) packed into
# bytes, minimized over vertex orderings. Equal codes <=> isomorphic.


def _refine_partition(g: Graph) -> list[list[int]]:
    """Split vertices into an isomorphism-invariant ordered partition.

    Starts from degrees and repeatedly refines by the multiset of
    neighbor colors. Cells are ordered by their color signature, so two
    isomorphic graphs get matching cell layouts.
    """
    adj = _adjacency(g)
    color = list(degrees(g))
    ncells = len(set(color))
    while True:
        sig = [(color[v], tuple(sorted(color[u] for u in adj[v]))) for v in range(g.n)]
        order = {key: i for i, key in enumerate(sorted(set(sig)))}
        color = [order[sig[v]] for v in range(g.n)]
        if len(order) == ncells:
            break
        ncells = len(order)
    cells: dict[int, list[int]] = {}
    for v in range(g.n):
        cells.setdefault(color[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def _min_code_rows(g: Graph) -> list[int]:
    """Lexicographically minimal triangle rows over cell-respecting orders."""
    n = g.n
    adj = [set(a) for a in _adjacency(g)]
    cells = _refine_partition(g)
    slot_cell = []
    for ci, cell in enumerate(cells):
        slot_cell.extend([ci] * len(cell))

    best: list[int] | None = None
    current: list[int] = []
    placed: list[int] = []
    used = [False] * n

    def dfs(i: int):
        nonlocal best
        if i == n:
            if best is None or current < best:
                best = current.copy()
            return
        for v in cells[slot_cell[i]]:
            if used[v]:
                continue
            row = 0
            for j in range(i):
                row = (row << 1) | (1 if placed[j] in adj[v] else 0)
            if best is not None:
                # prune orderings already lexicographically above the best
                worse = False
                for j in range(i + 1):
                    a = current[j] if j < i else row
                    if a != best[j]:
                        worse = a > best[j]
                        break
                if worse:
                    continue
            used[v] = True
            placed.append(v)
            current.append(row)
            dfs(i + 1)
            current.pop()
            placed.pop()
            used[v] = False

    dfs(0)
    assert best is not None
    return best


@functools.lru_cache(maxsize=None)
def canonical_code(g: Graph) -> bytes:
    """Isomorphism-invariant encoding; equal codes iff isomorphic graphs.

    Worst case is exponential in n, guarded at n <= 12. Intended for
    deduplication during small-graph enumeration.
    """
    n = g.n
    if n > CANONICAL_MAX_N:
        raise ValueError(f"canonical_code supports n <= {CANONICAL_MAX_N}, got {n}")
    nbits = n * (n - 1) // 2
    if g.m == 0 or g.m == nbits:
        # empty and complete graphs: every ordering gives the same code
        rows = [(0 if g.m == 0 else (1 << i) - 1) for i in range(n)]
    else:
        rows = _min_code_rows(g)
    acc = 0
    for i, row in enumerate(rows):
        acc = (acc << i) | row
    return bytes([n]) + acc.to_bytes((nbits + 7) // 8, "big")
