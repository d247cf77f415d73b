"""Exhaustive enumeration of small unicyclic graphs, one per isomorphism
class, plus brute-force extremal search over the enumerated classes.

Primary generator: choose the cycle length k, then attach every multiset
of rooted trees to the cycle vertices (the unique cycle of a unicyclic
graph, once its edges are removed, leaves exactly one rooted tree per
cycle vertex). Duplicates arising from cycle symmetry are removed by
canonical code. A second, independent generator filters all n-edge
subsets and exists to cross-check the first on very small n.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field

from .graphs import Graph, canonical_code, is_unicyclic, max_degree, pendant_count
from .indices import IndexSpec, additive_index, evaluate, multiplicative_index
from .majorization import FunctionSpec, Value, values_close, DEFAULT_TOLERANCE

__all__ = [
    "MAX_ENUMERATION_N",
    "enumerate_unicyclic",
    "enumerate_unicyclic_edge_subsets",
    "count_classes",
    "ExtremalSearchResult",
    "extremal_search",
]

MAX_ENUMERATION_N = 9
MAX_CROSS_CHECK_N = 6


# Rooted trees are nested tuples of child subtrees, children sorted in
# descending tuple order so each shape appears exactly once.


@functools.lru_cache(maxsize=None)
def rooted_trees(size: int) -> tuple[tuple, ...]:
    """All rooted trees on `size` vertices, descending canonical order."""
    if size < 1:
        raise ValueError("tree size must be >= 1")
    if size == 1:
        return ((),)
    out = [forest for forest in _forests(size - 1, None)]
    return tuple(sorted(out, reverse=True))


def _forests(total: int, bound: tuple[int, tuple] | None):
    """Multisets of rooted trees with `total` vertices, non-increasing in
    (size, shape) order and bounded above by `bound`."""
    if total == 0:
        yield ()
        return
    max_size = total if bound is None else min(total, bound[0])
    for size in range(max_size, 0, -1):
        for tree in rooted_trees(size):
            if bound is not None and size == bound[0] and tree > bound[1]:
                continue
            for rest in _forests(total - size, (size, tree)):
                yield (tree,) + rest


def _tree_size(tree) -> int:
    return 1 + sum(_tree_size(child) for child in tree)


def _attach_tree(edges: list, root: int, tree, nxt: int) -> int:
    """Add tree edges below `root`; returns the next free vertex id."""
    for child in tree:
        edges.append((root, nxt))
        child_root, nxt = nxt, nxt + 1
        nxt = _attach_tree(edges, child_root, child, nxt)
    return nxt


def _compositions(total: int, parts: int):
    """Ordered tuples of `parts` non-negative ints summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def _raw_candidates(n: int):
    for k in range(3, n + 1):
        tree_choices = [rooted_trees(s + 1) for s in range(n - k + 1)]
        for sizes in _compositions(n - k, k):
            for trees in itertools.product(*(tree_choices[s] for s in sizes)):
                edges = [(i, (i + 1) % k) for i in range(k)]
                nxt = k
                for root, tree in enumerate(trees):
                    nxt = _attach_tree(edges, root, tree, nxt)
                yield Graph(n, edges)


def _passes(g: Graph, want_max_degree, want_pendants) -> bool:
    if want_max_degree is not None and max_degree(g) != want_max_degree:
        return False
    if want_pendants is not None and pendant_count(g) != want_pendants:
        return False
    return True


def _check_filters(max_degree, pendants):
    if max_degree is not None and max_degree < 2:
        raise ValueError("max_degree filter must be >= 2")
    if pendants is not None and pendants < 0:
        raise ValueError("pendants filter must be >= 0")


def enumerate_unicyclic(n: int, max_degree: int | None = None, pendants: int | None = None):
    """Yield one representative per isomorphism class, deterministically.

    Guarded at 3 <= n <= 9; optional filters pin the maximum degree and
    the pendant count exactly.
    """
    if not 3 <= n <= MAX_ENUMERATION_N:
        raise ValueError(f"enumeration supports 3 <= n <= {MAX_ENUMERATION_N}, got {n}")
    _check_filters(max_degree, pendants)
    for g in _all_classes(n):
        if _passes(g, max_degree, pendants):
            yield g


@functools.lru_cache(maxsize=None)
def _all_classes(n: int) -> tuple[Graph, ...]:
    seen = {}
    for g in _raw_candidates(n):
        code = canonical_code(g)
        if code not in seen:
            seen[code] = g
    return tuple(seen.values())


def enumerate_unicyclic_edge_subsets(
    n: int, max_degree: int | None = None, pendants: int | None = None
):
    """Independent cross-check generator: filter all n-edge subsets.

    Exponential in n; guarded at n <= 6.
    """
    if not 3 <= n <= MAX_CROSS_CHECK_N:
        raise ValueError(f"edge-subset enumeration supports 3 <= n <= {MAX_CROSS_CHECK_N}")
    _check_filters(max_degree, pendants)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    seen = set()
    for subset in itertools.combinations(pairs, n):
        g = Graph(n, subset)
        if not is_unicyclic(g):
            continue
        code = canonical_code(g)
        if code in seen:
            continue
        seen.add(code)
        if _passes(g, max_degree, pendants):
            yield g


def count_classes(n: int) -> int:
    """Number of unicyclic isomorphism classes on n vertices."""
    return len(_all_classes(n))


@dataclass(frozen=True)
class ExtremalSearchResult:
    """Optima of one index over an enumerated (possibly filtered) class.

    Attaining graphs are listed completely, in enumeration order. An
    empty class yields None optima and empty lists rather than an error.
    """

    index_label: str
    n: int
    minimum: Value | None = None
    maximum: Value | None = None
    minimizers: tuple[Graph, ...] = field(default_factory=tuple)
    maximizers: tuple[Graph, ...] = field(default_factory=tuple)

    @property
    def empty(self) -> bool:
        return self.minimum is None


def _evaluator(index):
    if isinstance(index, IndexSpec):
        return index.label, lambda g: evaluate(index, g)
    f, mode = index
    if mode == "additive":
        return f"sum {f.label}", lambda g: additive_index(f, g)
    if mode == "multiplicative":
        return f"prod {f.label}", lambda g: multiplicative_index(f, g)
    raise ValueError(f"unknown mode {mode!r}")


def extremal_search(
    index,
    n: int,
    max_degree: int | None = None,
    pendants: int | None = None,
    tol: float = DEFAULT_TOLERANCE,
) -> ExtremalSearchResult:
    """Brute-force optima of an index over the enumerated class.

    `index` is an IndexSpec or a (FunctionSpec, mode) pair. Ties within
    `tol` (exact ties in exact mode) all count as attaining.
    """
    label, value_of = _evaluator(index)
    values = [(value_of(g), g) for g in enumerate_unicyclic(n, max_degree, pendants)]
    if not values:
        return ExtremalSearchResult(label, n)
    lo = min(v for v, _ in values)
    hi = max(v for v, _ in values)
    return ExtremalSearchResult(
        label,
        n,
        lo,
        hi,
        tuple(g for v, g in values if values_close(v, lo, tol)),
        tuple(g for v, g in values if values_close(v, hi, tol)),
    )
