"""Degree-based topological indices.

Vertex-sum evaluation is the canonical path for every degree-based
index; the edge-sum forms exist as an independent cross-check (and as
the only form for the second Zagreb variant, which is edge-based by
definition). The Wiener index is included for computation only and is
the single distance-based entry here.

Index menu:
  M1_alpha(alpha)   sum of d(u)**alpha                (M1, F, ID are aliases)
  M2_alpha(alpha)   sum over edges of (d(u)*d(v))**alpha
  SEI(a)            sum of d(u) * a**d(u), a > 0, a != 1
  NK                product of d(u)
  NK_star           product of d(u)**d(u)
  wiener            sum of pairwise distances
"""

from __future__ import annotations

import collections
from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, _adjacency, degrees
from .majorization import (
    IDENTITY,
    SELF_POWER,
    FunctionSpec,
    Value,
    exdeg,
    power,
    pow_value,
    schur_value,
)

__all__ = [
    "IndexSpec",
    "m1_alpha",
    "m2_alpha",
    "sei",
    "M1",
    "F",
    "ID",
    "NK",
    "NK_STAR",
    "WIENER",
    "evaluate",
    "eval_edge_form",
    "additive_index",
    "multiplicative_index",
    "wiener",
    "parse_index",
    "vertex_function",
]

_KINDS = ("M1_alpha", "M2_alpha", "SEI", "NK", "NK_star", "M1", "F", "ID", "wiener")

# aliases resolve to (kind, parameter) before evaluation
_ALIASES = {"M1": ("M1_alpha", 2), "F": ("M1_alpha", 3), "ID": ("M1_alpha", -1)}


@dataclass(frozen=True)
class IndexSpec:
    kind: str
    param: float | int | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown index kind {self.kind!r}")
        if self.kind in ("M1_alpha", "M2_alpha"):
            if self.param is None:
                raise ValueError(f"{self.kind} needs an exponent alpha")
            p = self.param
            if isinstance(p, float) and p.is_integer():
                object.__setattr__(self, "param", int(p))
        elif self.kind == "SEI":
            if self.param is None or self.param <= 0 or self.param == 1:
                raise ValueError("SEI needs a base a > 0, a != 1")
        elif self.param is not None:
            raise ValueError(f"{self.kind} takes no parameter")

    @property
    def label(self) -> str:
        if self.kind == "M1_alpha":
            return f"M1^{_fmt(self.param)}"
        if self.kind == "M2_alpha":
            return f"M2^{_fmt(self.param)}"
        if self.kind == "SEI":
            return f"SEI({_fmt(self.param)})"
        if self.kind == "NK_star":
            return "NK*"
        return self.kind


def _fmt(p) -> str:
    return f"{p:.12g}" if isinstance(p, float) else str(p)


def m1_alpha(alpha) -> IndexSpec:
    return IndexSpec("M1_alpha", alpha)


def m2_alpha(alpha) -> IndexSpec:
    return IndexSpec("M2_alpha", alpha)


def sei(a) -> IndexSpec:
    return IndexSpec("SEI", a)


M1 = IndexSpec("M1")
F = IndexSpec("F")
ID = IndexSpec("ID")
NK = IndexSpec("NK")
NK_STAR = IndexSpec("NK_star")
WIENER = IndexSpec("wiener")


def _resolved(spec: IndexSpec) -> tuple[str, float | int | None]:
    return _ALIASES.get(spec.kind, (spec.kind, spec.param))


def vertex_function(spec: IndexSpec) -> tuple[FunctionSpec, str]:
    """(term function, mode) realizing a vertex-based index, if any."""
    kind, param = _resolved(spec)
    if kind == "M1_alpha":
        return power(param), "additive"
    if kind == "SEI":
        return exdeg(param), "additive"
    if kind == "NK":
        return IDENTITY, "multiplicative"
    if kind == "NK_star":
        return SELF_POWER, "multiplicative"
    raise ValueError(f"{spec.label} is not a vertex-sum index")


def evaluate(spec: IndexSpec, g: Graph) -> Value:
    """Index value of g; exact int or Fraction whenever possible."""
    kind, param = _resolved(spec)
    if kind == "wiener":
        return wiener(g)
    if kind == "M2_alpha":
        return eval_edge_form(spec, g)
    f, mode = vertex_function(spec)
    degs = degrees(g)
    if 0 in degs:
        raise ValueError(f"{spec.label} undefined on a graph with isolated vertices")
    return schur_value(f, degs, mode)


def eval_edge_form(spec: IndexSpec, g: Graph) -> Value:
    """Edge-sum evaluation for SEI, NK_star and M2_alpha.

    For SEI and NK_star this is an independent route that must agree
    with `evaluate`; it exists as a testing oracle.
    """
    kind, param = _resolved(spec)
    degs = degrees(g)
    if kind in ("SEI", "NK_star") and 0 in degs:
        raise ValueError(f"{spec.label} undefined on a graph with isolated vertices")
    if kind == "SEI":
        a = float(param)
        return sum(a ** degs[u] + a ** degs[v] for u, v in g.edges)
    if kind == "NK_star":
        # each vertex contributes one factor d per incident edge, so the
        # product over edges of d(u)*d(v) equals prod d**d
        out = 1
        for u, v in g.edges:
            out *= degs[u] * degs[v]
        return out
    if kind == "M2_alpha":
        out = 0
        for u, v in g.edges:
            out = out + pow_value(degs[u] * degs[v], param)
        return out
    raise ValueError(f"{spec.label} has no edge form")


def additive_index(f: FunctionSpec, g: Graph) -> Value:
    """sum of f over the degrees of g."""
    return schur_value(f, _positive_degrees(g), "additive")


def multiplicative_index(f: FunctionSpec, g: Graph) -> Value:
    """product of f over the degrees of g."""
    return schur_value(f, _positive_degrees(g), "multiplicative")


def _positive_degrees(g: Graph) -> tuple[int, ...]:
    degs = degrees(g)
    if 0 in degs:
        raise ValueError("degree-function index undefined on isolated vertices")
    return degs


def wiener(g: Graph) -> int:
    """Sum of distances over unordered vertex pairs; needs connectivity."""
    adj = _adjacency(g)
    total = 0
    for s in range(g.n):
        dist = [-1] * g.n
        dist[s] = 0
        queue = collections.deque([s])
        reached = 1
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    reached += 1
                    queue.append(v)
        if reached != g.n:
            raise ValueError("wiener index needs a connected graph")
        total += sum(dist)
    return total // 2


_TOKEN_FIXED = {
    "M1": M1,
    "F": F,
    "ID": ID,
    "NK": NK,
    "NK*": NK_STAR,
    "NKSTAR": NK_STAR,
    "NK_STAR": NK_STAR,
    "W": WIENER,
    "WIENER": WIENER,
}


def parse_index(token: str) -> IndexSpec:
    """Parse CLI index tokens: M1, F, ID, NK, NK*, W, M1^a, M2^a, SEI^a."""
    t = token.strip()
    fixed = _TOKEN_FIXED.get(t.upper())
    if fixed is not None:
        return fixed
    if "^" in t:
        head, _, tail = t.partition("^")
        try:
            value = float(tail)
        except ValueError:
            raise ValueError(f"bad index parameter in {token!r}") from None
        head = head.upper()
        if head == "M1":
            return m1_alpha(value)
        if head == "M2":
            return m2_alpha(value)
        if head == "SEI":
            return sei(value)
    raise ValueError(f"unknown index {token!r}")
