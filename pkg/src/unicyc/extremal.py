"""Extremal degree sequences and witness graphs for unicyclic classes.

Among unicyclic graphs on n vertices the degree sequence (2, ..., 2) of
the cycle is the majorization minimum and (n-1, 2, 2, 1, ..., 1) of the
triangle star is the maximum. Fixing the maximum degree or the pendant
count shrinks the class and moves both extremes inward; this module
builds those extreme sequences and representative graphs realizing
them, and decides membership in each extremal family.

Membership is by degree sequence (plus unicyclicity), never by
isomorphism: each family is exactly "unicyclic with the family's
defining sequence".
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, degree_sequence, is_unicyclic

__all__ = [
    "cycle_sequence",
    "star_cycle_sequence",
    "hub_path_sequence",
    "loaded_cycle_sequence",
    "balanced_pendant_sequence",
    "hub_pendant_sequence",
    "cycle_load_params",
    "pendant_split",
    "build_cycle",
    "build_triangle_star",
    "build_hub_paths",
    "build_loaded_cycle",
    "build_hub_pendants",
    "Cycle",
    "TriangleStar",
    "HubPaths",
    "LoadedCycle",
    "BalancedPendants",
    "HubPendants",
    "is_member",
]


def _check_n(n: int, minimum: int = 3):
    if n < minimum:
        raise ValueError(f"need n >= {minimum}, got {n}")


def _check_max_degree(n: int, d: int):
    if not 3 <= d <= n - 1:
        raise ValueError(f"max_degree must be in 3..{n - 1}, got {d}")


def _check_pendants(n: int, p: int):
    if not 1 <= p <= n - 3:
        raise ValueError(f"pendants must be in 1..{n - 3}, got {p}")


# ---------------------------------------------------------------------------
# defining sequences


def cycle_sequence(n: int) -> tuple[int, ...]:
    """(2, ..., 2), the majorization minimum over unicyclic graphs."""
    _check_n(n)
    return (2,) * n


def star_cycle_sequence(n: int) -> tuple[int, ...]:
    """(n-1, 2, 2, 1, ..., 1), the majorization maximum."""
    _check_n(n, 4)
    return (n - 1, 2, 2) + (1,) * (n - 3)


def hub_path_sequence(n: int, max_degree: int) -> tuple[int, ...]:
    """Minimum sequence once the leading entry is pinned to max_degree.

    One hub, twos along the cycle and paths, and as few pendant ends as
    the hub forces: (d, 2 x (n-d+1), 1 x (d-2)).
    """
    _check_n(n, 4)
    _check_max_degree(n, max_degree)
    d = max_degree
    return (d,) + (2,) * (n - d + 1) + (1,) * (d - 2)


def cycle_load_params(n: int, max_degree: int) -> tuple[int, int]:
    """(q, r) with q = n // (max_degree - 1) and r = n - q*(max_degree-1) + 1."""
    q = n // (max_degree - 1)
    return q, n - q * (max_degree - 1) + 1


def loaded_cycle_sequence(n: int, max_degree: int) -> tuple[int, ...]:
    """Maximum sequence with leading entry pinned to max_degree.

    Repeats max_degree as often as the total allows: q copies plus one
    remainder entry, padded with ones. The small-n regime (q == 1 or
    n == 2*max_degree - 2) caps at two large entries and a single 2.
    """
    _check_n(n, 4)
    _check_max_degree(n, max_degree)
    d = max_degree
    q, r = cycle_load_params(n, d)
    if q == 1 or n == 2 * d - 2:
        s = n - d + 1
        return (d, s, 2) + (1,) * (n - 3)
    return (d,) * q + (r,) + (1,) * (n - q - 1)


def pendant_split(n: int, pendants: int) -> tuple[int, int]:
    """(m, t): non-pendant degrees are m or m+1, with t entries at m+1."""
    m = (2 * n - pendants) // (n - pendants)
    return m, 2 * n - pendants - m * (n - pendants)


def balanced_pendant_sequence(n: int, pendants: int) -> tuple[int, ...]:
    """Minimum sequence with the pendant count pinned.

    Non-pendant degrees as equal as possible:
    (m+1 x t, m x (n-p-t), 1 x p).
    """
    _check_n(n, 4)
    _check_pendants(n, pendants)
    p = pendants
    m, t = pendant_split(n, p)
    return (m + 1,) * t + (m,) * (n - p - t) + (1,) * p


def hub_pendant_sequence(n: int, pendants: int) -> tuple[int, ...]:
    """Maximum sequence with the pendant count pinned: one hub of degree
    p+2, twos elsewhere: (p+2, 2 x (n-p-1), 1 x p)."""
    _check_n(n, 4)
    _check_pendants(n, pendants)
    p = pendants
    return (p + 2,) + (2,) * (n - p - 1) + (1,) * p


# ---------------------------------------------------------------------------
# witness graphs


def build_cycle(n: int) -> Graph:
    _check_n(n)
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def build_triangle_star(n: int) -> Graph:
    """Triangle 0-1-2 with n-3 pendant edges at vertex 0."""
    _check_n(n, 4)
    edges = [(0, 1), (1, 2), (0, 2)]
    edges.extend((0, v) for v in range(3, n))
    return Graph(n, edges)


def _balanced_lengths(total: int, parts: int) -> list[int]:
    """Split total into `parts` positive summands, as equal as possible."""
    base, extra = divmod(total, parts)
    return [base + 1] * extra + [base] * (parts - extra)


def build_hub_paths(
    n: int,
    max_degree: int,
    cycle_len: int | None = None,
    path_lengths: tuple[int, ...] | None = None,
) -> Graph:
    """Cycle of length k with max_degree - 2 paths hanging from one hub.

    Every path needs length >= 1 (a zero-length path would change the
    hub degree), so k can range over 3..n-max_degree+2. Defaults pick
    k = 3 and near-equal path lengths. Realizes hub_path_sequence.
    """
    _check_n(n, 4)
    _check_max_degree(n, max_degree)
    d = max_degree
    k = 3 if cycle_len is None else cycle_len
    if not 3 <= k <= n - d + 2:
        raise ValueError(f"cycle length must be in 3..{n - d + 2}, got {k}")
    if path_lengths is None:
        lengths = _balanced_lengths(n - k, d - 2)
    else:
        lengths = list(path_lengths)
        if len(lengths) != d - 2:
            raise ValueError(f"need exactly {d - 2} path lengths")
        if any(length < 1 for length in lengths):
            raise ValueError("path lengths must be >= 1")
        if sum(lengths) != n - k:
            raise ValueError(f"path lengths must sum to {n - k}")
    edges = [(i, (i + 1) % k) for i in range(k)]
    nxt = k
    for length in lengths:
        prev = 0  # hub
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(n, edges)


def build_loaded_cycle(n: int, max_degree: int) -> Graph:
    """A representative realizing loaded_cycle_sequence.

    Three regimes: with q = n // (max_degree - 1) and remainder entry r,
    either a triangle carrying two pendant bundles (q == 1 or
    n == 2*max_degree - 2), a cycle of length q fully loaded when the
    remainder entry is 1, or a cycle of length q+1 loaded on all but one
    vertex which carries r - 2 pendants.
    """
    _check_n(n, 4)
    _check_max_degree(n, max_degree)
    d = max_degree
    q, r = cycle_load_params(n, d)
    edges: list[tuple[int, int]] = []
    if q == 1 or n == 2 * d - 2:
        edges = [(0, 1), (1, 2), (0, 2)]
        nxt = 3
        for _ in range(d - 2):  # hub 0 reaches degree d
            edges.append((0, nxt))
            nxt += 1
        for _ in range(n - 1 - d):  # hub 1 reaches degree n-d+1
            edges.append((1, nxt))
            nxt += 1
        return Graph(n, edges)
    if r == 1:
        # q*(d-1) == n, and q >= 3 here since q == 2 would force n == 2d-2
        k = q
        loads = [d - 2] * q
    else:
        k = q + 1
        loads = [d - 2] * q + [r - 2]
    edges = [(i, (i + 1) % k) for i in range(k)]
    nxt = k
    for hub, load in enumerate(loads):
        for _ in range(load):
            edges.append((hub, nxt))
            nxt += 1
    return Graph(n, edges)


def build_hub_pendants(
    n: int, pendants: int, path_lengths: tuple[int, ...] | None = None
) -> Graph:
    """Triangle with `pendants` paths from one hub; realizes
    hub_pendant_sequence. Path lengths default to near-equal."""
    _check_n(n, 4)
    _check_pendants(n, pendants)
    p = pendants
    if path_lengths is None:
        lengths = _balanced_lengths(n - 3, p)
    else:
        lengths = list(path_lengths)
        if len(lengths) != p:
            raise ValueError(f"need exactly {p} path lengths")
        if any(length < 1 for length in lengths):
            raise ValueError("path lengths must be >= 1")
        if sum(lengths) != n - 3:
            raise ValueError(f"path lengths must sum to {n - 3}")
    edges = [(0, 1), (1, 2), (0, 2)]
    nxt = 3
    for length in lengths:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# families


@dataclass(frozen=True)
class Cycle:
    n: int

    @property
    def defining_sequence(self):
        return cycle_sequence(self.n)

    label = "cycle"


@dataclass(frozen=True)
class TriangleStar:
    n: int

    @property
    def defining_sequence(self):
        return star_cycle_sequence(self.n)

    label = "triangle-star"


@dataclass(frozen=True)
class HubPaths:
    n: int
    max_degree: int

    @property
    def defining_sequence(self):
        return hub_path_sequence(self.n, self.max_degree)

    label = "hub-paths"


@dataclass(frozen=True)
class LoadedCycle:
    n: int
    max_degree: int

    @property
    def defining_sequence(self):
        return loaded_cycle_sequence(self.n, self.max_degree)

    label = "loaded-cycle"


@dataclass(frozen=True)
class BalancedPendants:
    n: int
    pendants: int

    @property
    def defining_sequence(self):
        return balanced_pendant_sequence(self.n, self.pendants)

    label = "balanced-pendants"


@dataclass(frozen=True)
class HubPendants:
    n: int
    pendants: int

    @property
    def defining_sequence(self):
        return hub_pendant_sequence(self.n, self.pendants)

    label = "hub-pendants"


def is_member(g: Graph, family) -> bool:
    """Unicyclic with the family's defining degree sequence."""
    if g.n != family.n or not is_unicyclic(g):
        return False
    return degree_sequence(g) == tuple(family.defining_sequence)
