"""Catalog of sharp degree-index bounds on unicyclic graphs, and audits.

Every entry bounds one index on one side over one class: all unicyclic
graphs on n vertices ("uni" scope), those with a given maximum degree
("maxdeg"), or those with a given pendant count ("pend"). Each entry
knows its parameter domain, its closed-form bound value, and the
extremal family where the bound is attained. Entries for named indices
transcribe the closed forms directly; generic entries evaluate their
term function over the extremal degree sequence. The audit compares
both kinds against actual index values graph by graph.

Sharpness bookkeeping: entries with iff_sharp=True assert that equality
holds exactly on the named family (checked by audits); generic entries
record tightness without asserting the equivalence, since a merely
convex term function can be flat.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .extremal import (
    BalancedPendants,
    Cycle,
    HubPaths,
    HubPendants,
    LoadedCycle,
    TriangleStar,
    balanced_pendant_sequence,
    cycle_load_params,
    cycle_sequence,
    hub_path_sequence,
    hub_pendant_sequence,
    loaded_cycle_sequence,
    pendant_split,
    star_cycle_sequence,
)
from .graphs import Graph, canonical_code, is_unicyclic, max_degree, pendant_count
from .indices import evaluate, m1_alpha, M1 as M1_SPEC, F as F_SPEC, ID as ID_SPEC, NK as NK_SPEC, NK_STAR as NK_STAR_SPEC, sei
from .majorization import (
    DEFAULT_TOLERANCE,
    EXDEG_FLOOR1_LIMIT,
    EXDEG_FLOOR2_LIMIT,
    FunctionSpec,
    IDENTITY,
    SELF_POWER,
    STRICTLY_CONCAVE,
    STRICTLY_CONVEX,
    Value,
    convexity_class,
    exdeg,
    leq_with_tol,
    log_convexity_class,
    pow_value,
    power,
    schur_value,
    value_mode,
    values_close,
)

__all__ = [
    "AuditConfig",
    "BoundSpec",
    "catalog",
    "catalog_entry",
    "eval_bound",
    "audit",
    "AuditRow",
    "AuditReport",
    "render_report_text",
    "tabular_rows",
    "TABULAR_COLUMNS",
]

DEFAULT_ALPHA_GRID = (-2.0, -1.0, -0.5, 0.5, 2.0, 3.0)
DEFAULT_A_GRID = (0.1, EXDEG_FLOOR1_LIMIT, EXDEG_FLOOR2_LIMIT, 2.0)

SCOPES = ("uni", "maxdeg", "pend")


@dataclass(frozen=True)
class AuditConfig:
    tolerance: float = DEFAULT_TOLERANCE
    alpha_grid: tuple[float, ...] = DEFAULT_ALPHA_GRID
    a_grid: tuple[float, ...] = DEFAULT_A_GRID


@dataclass(frozen=True)
class BoundSpec:
    """One side of one theorem-grade inequality.

    param_kind is "alpha", "a", "function" or "none"; the grid of
    audited parameters is derived from an AuditConfig and filtered by
    the entry's own domain. floor is the degree floor on which the
    convexity hypothesis lives (pendant-restricted entries use 2).
    """

    id: str
    index_label: str
    side: str  # "lower" | "upper"
    scope: str  # "uni" | "maxdeg" | "pend"
    statement: str
    iff_sharp: bool
    floor: int
    param_kind: str
    param_ok: Callable
    graph_value: Callable  # (Graph, param) -> Value
    bound_value: Callable  # (n, delta, p, param) -> Value
    sharp_family: Callable  # (n, delta, p) -> family

    def applies_to(self, n: int, delta: int | None = None, p: int | None = None) -> bool:
        if n < 4:
            return False
        if self.scope == "maxdeg":
            return delta is not None and 3 <= delta <= n - 1
        if self.scope == "pend":
            return p is not None and 1 <= p <= n - 3
        return True

    def param_grid(self, config: AuditConfig):
        """(param, label, note) triples drawn from the config's grids."""
        if self.param_kind == "none":
            return [(None, "", "")]
        out = []
        if self.param_kind == "alpha":
            for alpha in config.alpha_grid:
                if self.param_ok(alpha):
                    out.append((alpha, f"alpha={_fmt(alpha)}", ""))
        elif self.param_kind == "a":
            for a in config.a_grid:
                if self.param_ok(a):
                    out.append((a, f"a={_fmt(a)}", _boundary_note(a, self.floor)))
        else:
            for f in _function_grid(config):
                if self.param_ok(f):
                    note = _boundary_note(f.param, self.floor) if f.family == "exdeg" else ""
                    out.append((f, f"f={f.label}", note))
        return out


def _fmt(x) -> str:
    return f"{x:.12g}" if isinstance(x, float) else str(x)


def _boundary_note(a, floor: int) -> str:
    limit = EXDEG_FLOOR1_LIMIT if floor == 1 else EXDEG_FLOOR2_LIMIT
    if a == limit:
        return "a at convexity boundary"
    return ""


def _function_grid(config: AuditConfig) -> list[FunctionSpec]:
    out = [power(alpha) for alpha in config.alpha_grid]
    out.extend(exdeg(a) for a in config.a_grid)
    out.append(IDENTITY)
    out.append(SELF_POWER)
    return out


def _exdeg_domain(floor: int) -> Callable:
    limit = EXDEG_FLOOR1_LIMIT if floor == 1 else EXDEG_FLOOR2_LIMIT
    return lambda a: a > 1 or 0 < a <= limit


def _alpha_convex(alpha) -> bool:
    return alpha < 0 or alpha > 1


def _alpha_concave(alpha) -> bool:
    return 0 < alpha < 1


# extremal sequences per scope; the "lo" sequence is the majorization
# minimum of the class, "hi" the maximum
_SEQ = {
    "uni": (
        lambda n, d, p: cycle_sequence(n),
        lambda n, d, p: star_cycle_sequence(n),
    ),
    "maxdeg": (
        lambda n, d, p: hub_path_sequence(n, d),
        lambda n, d, p: loaded_cycle_sequence(n, d),
    ),
    "pend": (
        lambda n, d, p: balanced_pendant_sequence(n, p),
        lambda n, d, p: hub_pendant_sequence(n, p),
    ),
}

_FAMILY = {
    "uni": (lambda n, d, p: Cycle(n), lambda n, d, p: TriangleStar(n)),
    "maxdeg": (lambda n, d, p: HubPaths(n, d), lambda n, d, p: LoadedCycle(n, d)),
    "pend": (
        lambda n, d, p: BalancedPendants(n, p),
        lambda n, d, p: HubPendants(n, p),
    ),
}

_SCOPE_TEXT = {
    "uni": "unicyclic graphs on n vertices",
    "maxdeg": "unicyclic graphs with maximum degree D",
    "pend": "unicyclic graphs with p pendant vertices",
}


def _eval_index(spec_of: Callable) -> Callable:
    return lambda g, param: evaluate(spec_of(param), g)


def _schur_graph_value(mode: str) -> Callable:
    def value(g: Graph, f: FunctionSpec) -> Value:
        from .graphs import degree_sequence

        return schur_value(f, degree_sequence(g), mode)

    return value


def _generic_entries() -> list[BoundSpec]:
    """Sum/product bounds for convexity-classified term functions."""
    out = []
    for scope in SCOPES:
        floor = 2 if scope == "pend" else 1
        lo_seq, hi_seq = _SEQ[scope]
        lo_fam, hi_fam = _FAMILY[scope]
        for mode, shape, classify in (
            ("additive", "convex", convexity_class),
            ("additive", "concave", convexity_class),
            ("multiplicative", "logconvex", log_convexity_class),
            ("multiplicative", "logconcave", log_convexity_class),
        ):
            target = STRICTLY_CONVEX if "convex" in shape else STRICTLY_CONCAVE
            sum_or_prod = "sum" if mode == "additive" else "product"
            prefix = "if" if mode == "additive" else "iif"
            for side in ("lower", "upper"):
                # convex shapes bound below by the class minimum sequence
                at_lo = (side == "lower") == ("convex" in shape)
                seq = lo_seq if at_lo else hi_seq
                fam = lo_fam if at_lo else hi_fam
                rel = ">=" if side == "lower" else "<="
                out.append(
                    BoundSpec(
                        id=f"{prefix}-{shape}-{scope}-{side}",
                        index_label=f"{sum_or_prod} f(d)",
                        side=side,
                        scope=scope,
                        statement=(
                            f"{sum_or_prod} of f over degrees {rel} the same "
                            f"{sum_or_prod} over the extremal sequence, for f "
                            f"{shape} on [{floor},inf), over {_SCOPE_TEXT[scope]}"
                        ),
                        iff_sharp=False,
                        floor=floor,
                        param_kind="function",
                        param_ok=(
                            lambda f, classify=classify, target=target, floor=floor: classify(
                                f, floor
                            )
                            == target
                        ),
                        graph_value=_schur_graph_value(mode),
                        bound_value=(
                            lambda n, d, p, f, seq=seq, mode=mode: schur_value(
                                f, seq(n, d, p), mode
                            )
                        ),
                        sharp_family=fam,
                    )
                )
    return out


def _named(
    id: str,
    spec_of: Callable,
    index_label: str,
    side: str,
    scope: str,
    statement: str,
    floor: int,
    param_kind: str,
    param_ok: Callable,
    bound_value: Callable,
    at_lo_family: bool,
    iff_sharp: bool = True,
) -> BoundSpec:
    lo_fam, hi_fam = _FAMILY[scope]
    return BoundSpec(
        id=id,
        index_label=index_label,
        side=side,
        scope=scope,
        statement=statement,
        iff_sharp=iff_sharp,
        floor=floor,
        param_kind=param_kind,
        param_ok=param_ok,
        graph_value=_eval_index(spec_of),
        bound_value=bound_value,
        sharp_family=lo_fam if at_lo_family else hi_fam,
    )


def _named_entries_uni() -> list[BoundSpec]:
    e = []
    always = lambda _: True

    # variable first Zagreb, exponent outside [0, 1]
    e.append(
        _named(
            "m1a-convex-uni-lower",
            m1_alpha,
            "M1^alpha",
            "lower",
            "uni",
            "M1^alpha >= n*2^alpha for alpha < 0 or alpha > 1",
            1,
            "alpha",
            _alpha_convex,
            lambda n, d, p, a: n * pow_value(2, a),
            at_lo_family=True,
        )
    )
    e.append(
        _named(
            "m1a-convex-uni-upper",
            m1_alpha,
            "M1^alpha",
            "upper",
            "uni",
            "M1^alpha <= (n-1)^alpha + 2^(alpha+1) + n - 3 for alpha < 0 or alpha > 1",
            1,
            "alpha",
            _alpha_convex,
            lambda n, d, p, a: pow_value(n - 1, a) + 2 * pow_value(2, a) + (n - 3),
            at_lo_family=False,
        )
    )
    # exponent in (0, 1): the two sides swap
    e.append(
        _named(
            "m1a-concave-uni-lower",
            m1_alpha,
            "M1^alpha",
            "lower",
            "uni",
            "M1^alpha >= (n-1)^alpha + 2^(alpha+1) + n - 3 for 0 < alpha < 1",
            1,
            "alpha",
            _alpha_concave,
            lambda n, d, p, a: pow_value(n - 1, a) + 2 * pow_value(2, a) + (n - 3),
            at_lo_family=False,
        )
    )
    e.append(
        _named(
            "m1a-concave-uni-upper",
            m1_alpha,
            "M1^alpha",
            "upper",
            "uni",
            "M1^alpha <= n*2^alpha for 0 < alpha < 1",
            1,
            "alpha",
            _alpha_concave,
            lambda n, d, p, a: n * pow_value(2, a),
            at_lo_family=True,
        )
    )
    # fixed-exponent corollaries
    e.append(
        _named(
            "m1-uni-lower", lambda _: M1_SPEC, "M1", "lower", "uni",
            "M1 >= 4n", 1, "none", always,
            lambda n, d, p, _: 4 * n, at_lo_family=True,
        )
    )
    e.append(
        _named(
            "m1-uni-upper", lambda _: M1_SPEC, "M1", "upper", "uni",
            "M1 <= n^2 - n + 6", 1, "none", always,
            lambda n, d, p, _: n * n - n + 6, at_lo_family=False,
        )
    )
    e.append(
        _named(
            "f-uni-lower", lambda _: F_SPEC, "F", "lower", "uni",
            "F >= 8n", 1, "none", always,
            lambda n, d, p, _: 8 * n, at_lo_family=True,
        )
    )
    e.append(
        _named(
            "f-uni-upper", lambda _: F_SPEC, "F", "upper", "uni",
            "F <= (n-1)^3 + n + 13", 1, "none", always,
            lambda n, d, p, _: (n - 1) ** 3 + n + 13, at_lo_family=False,
        )
    )
    e.append(
        _named(
            "id-uni-lower", lambda _: ID_SPEC, "ID", "lower", "uni",
            "ID >= n/2", 1, "none", always,
            lambda n, d, p, _: Fraction(n, 2), at_lo_family=True,
        )
    )
    e.append(
        _named(
            "id-uni-upper", lambda _: ID_SPEC, "ID", "upper", "uni",
            "ID <= 1/(n-1) + n - 2", 1, "none", always,
            lambda n, d, p, _: Fraction(1, n - 1) + (n - 2), at_lo_family=False,
        )
    )
    # variable sum exdeg
    e.append(
        _named(
            "sei-uni-lower",
            sei,
            "SEI",
            "lower",
            "uni",
            "SEI_a >= 2*n*a^2 for a > 1 or 0 < a <= e^-2",
            1,
            "a",
            _exdeg_domain(1),
            lambda n, d, p, a: n * 2 * a * a,
            at_lo_family=True,
        )
    )
    e.append(
        _named(
            "sei-uni-upper",
            sei,
            "SEI",
            "upper",
            "uni",
            "SEI_a <= (n-1)*a^(n-1) + 4a^2 + (n-3)*a for a > 1 or 0 < a <= e^-2",
            1,
            "a",
            _exdeg_domain(1),
            lambda n, d, p, a: (n - 1) * a ** (n - 1) + 4 * a * a + (n - 3) * a,
            at_lo_family=False,
        )
    )
    # degree products
    e.append(
        _named(
            "nkstar-uni-lower", lambda _: NK_STAR_SPEC, "NK*", "lower", "uni",
            "NK* >= 4^n", 1, "none", always,
            lambda n, d, p, _: 4**n, at_lo_family=True,
        )
    )
    e.append(
        _named(
            "nkstar-uni-upper", lambda _: NK_STAR_SPEC, "NK*", "upper", "uni",
            "NK* <= 16*(n-1)^(n-1)", 1, "none", always,
            lambda n, d, p, _: 16 * (n - 1) ** (n - 1), at_lo_family=False,
        )
    )
    # NK is the log-concave case: lower at the triangle star, upper at the cycle
    e.append(
        _named(
            "nk-uni-lower", lambda _: NK_SPEC, "NK", "lower", "uni",
            "NK >= 4(n-1)", 1, "none", always,
            lambda n, d, p, _: 4 * (n - 1), at_lo_family=False,
        )
    )
    e.append(
        _named(
            "nk-uni-upper", lambda _: NK_SPEC, "NK", "upper", "uni",
            "NK <= 2^n", 1, "none", always,
            lambda n, d, p, _: 2**n, at_lo_family=True,
        )
    )
    return e


def _small_regime(n: int, d: int) -> bool:
    """True in the two-big-entries regime of the loaded-cycle sequence."""
    q, _ = cycle_load_params(n, d)
    return q == 1 or n == 2 * d - 2


def _named_entries_maxdeg() -> list[BoundSpec]:
    e = []
    always = lambda _: True

    def m1a_lo(n, d, p, a):
        return pow_value(d, a) + (n - d + 1) * pow_value(2, a) + (d - 2)

    def m1a_hi(n, d, p, a):
        if _small_regime(n, d):
            s = n - d + 1
            return pow_value(d, a) + pow_value(s, a) + pow_value(2, a) + (n - 3)
        q, r = cycle_load_params(n, d)
        return q * pow_value(d, a) + pow_value(r, a) + (n - q - 1)

    e.append(
        _named(
            "m1a-convex-maxdeg-lower", m1_alpha, "M1^alpha", "lower", "maxdeg",
            "M1^alpha >= D^alpha + (n-D+1)*2^alpha + D - 2 for alpha < 0 or alpha > 1",
            1, "alpha", _alpha_convex, m1a_lo, at_lo_family=True,
        )
    )
    e.append(
        _named(
            "m1a-convex-maxdeg-upper", m1_alpha, "M1^alpha", "upper", "maxdeg",
            "M1^alpha <= loaded-cycle value for alpha < 0 or alpha > 1",
            1, "alpha", _alpha_convex, m1a_hi, at_lo_family=False,
        )
    )
    e.append(
        _named(
            "m1a-concave-maxdeg-lower", m1_alpha, "M1^alpha", "lower", "maxdeg",
            "M1^alpha >= loaded-cycle value for 0 < alpha < 1",
            1, "alpha", _alpha_concave, m1a_hi, at_lo_family=False,
        )
    )
    e.append(
        _named(
            "m1a-concave-maxdeg-upper", m1_alpha, "M1^alpha", "upper", "maxdeg",
            "M1^alpha <= D^alpha + (n-D+1)*2^alpha + D - 2 for 0 < alpha < 1",
            1, "alpha", _alpha_concave, m1a_lo, at_lo_family=True,
        )
    )

    def m1_hi(n, d, p, _):
        if _small_regime(n, d):
            s = n - d + 1
            return d * d + s * s + n + 1
        q, r = cycle_load_params(n, d)
        return q * d * d + r * r + n - q - 1

    def f_hi(n, d, p, _):
        if _small_regime(n, d):
            s = n - d + 1
            return d**3 + s**3 + n + 5
        q, r = cycle_load_params(n, d)
        return q * d**3 + r**3 + n - q - 1

    def id_hi(n, d, p, _):
        if _small_regime(n, d):
            s = n - d + 1
            return Fraction(1, d) + Fraction(1, s) + n - Fraction(5, 2)
        q, r = cycle_load_params(n, d)
        return Fraction(q, d) + Fraction(1, r) + (n - q - 1)

    e.append(
        _named(
            "m1-maxdeg-lower", lambda _: M1_SPEC, "M1", "lower", "maxdeg",
            "M1 >= D^2 + 4n - 3D + 2", 1, "none", always,
            lambda n, d, p, _: d * d + 4 * n - 3 * d + 2, at_lo_family=True,
        )
    )
    e.append(
        _named(
            "m1-maxdeg-upper", lambda _: M1_SPEC, "M1", "upper", "maxdeg",
            "M1 <= loaded-cycle value", 1, "none", always, m1_hi, at_lo_family=False,
        )
    )
    e.append(
        _named(
            "f-maxdeg-lower", lambda _: F_SPEC, "F", "lower", "maxdeg",
            "F >= D^3 + 8n - 7D + 6", 1, "none", always,
            lambda n, d, p, _: d**3 + 8 * n - 7 * d + 6, at_lo_family=True,
        )
    )
    e.append(
        _named(
            "f-maxdeg-upper", lambda _: F_SPEC, "F", "upper", "maxdeg",
            "F <= loaded-cycle value", 1, "none", always, f_hi, at_lo_family=False,
        )
    )
    e.append(
        _named(
            "id-maxdeg-lower", lambda _: ID_SPEC, "ID", "lower", "maxdeg",
            "ID >= 1/D + (n+D-3)/2", 1, "none", always,
            lambda n, d, p, _: Fraction(1, d) + Fraction(n + d - 3, 2),
            at_lo_family=True,
        )
    )
    e.append(
        _named(
            "id-maxdeg-upper", lambda _: ID_SPEC, "ID", "upper", "maxdeg",
            "ID <= loaded-cycle value", 1, "none", always, id_hi, at_lo_family=False,
        )
    )

    def sei_lo(n, d, p, a):
        return d * a**d + (n - d + 1) * 2 * a * a + (d - 2) * a

    def sei_hi(n, d, p, a):
        if _small_regime(n, d):
            s = n - d + 1
            return d * a**d + s * a**s + 2 * a * a + (n - 3) * a
        q, r = cycle_load_params(n, d)
        return q * d * a**d + r * a**r + (n - q - 1) * a

    e.append(
        _named(
            "sei-maxdeg-lower", sei, "SEI", "lower", "maxdeg",
            "SEI_a >= D*a^D + (n-D+1)*2a^2 + (D-2)*a for a > 1 or 0 < a <= e^-2",
            1, "a", _exdeg_domain(1), sei_lo, at_lo_family=True,
        )
    )
    e.append(
        _named(
            "sei-maxdeg-upper", sei, "SEI", "upper", "maxdeg",
            "SEI_a <= loaded-cycle value for a > 1 or 0 < a <= e^-2",
            1, "a", _exdeg_domain(1), sei_hi, at_lo_family=False,
        )
    )

    def nkstar_hi(n, d, p, _):
        if _small_regime(n, d):
            s = n - d + 1
            return 4 * d**d * s**s
        q, r = cycle_load_params(n, d)
        return d ** (q * d) * r**r

    def nk_lo(n, d, p, _):
        if _small_regime(n, d):
            return 2 * d * (n - d + 1)
        q, r = cycle_load_params(n, d)
        return d**q * r

    e.append(
        _named(
            "nkstar-maxdeg-lower", lambda _: NK_STAR_SPEC, "NK*", "lower", "maxdeg",
            "NK* >= D^D * 4^(n-D+1)", 1, "none", always,
            lambda n, d, p, _: d**d * 4 ** (n - d + 1), at_lo_family=True,
        )
    )
    e.append(
        _named(
            "nkstar-maxdeg-upper", lambda _: NK_STAR_SPEC, "NK*", "upper", "maxdeg",
            "NK* <= loaded-cycle value", 1, "none", always, nkstar_hi,
            at_lo_family=False,
        )
    )
    e.append(
        _named(
            "nk-maxdeg-upper", lambda _: NK_SPEC, "NK", "upper", "maxdeg",
            "NK <= D * 2^(n-D+1)", 1, "none", always,
            lambda n, d, p, _: d * 2 ** (n - d + 1), at_lo_family=True,
        )
    )
    e.append(
        _named(
            "nk-maxdeg-lower", lambda _: NK_SPEC, "NK", "lower", "maxdeg",
            "NK >= loaded-cycle value", 1, "none", always, nk_lo, at_lo_family=False,
        )
    )
    return e


def _named_entries_pend() -> list[BoundSpec]:
    def sei_lo(n, d, p, a):
        m, t = pendant_split(n, p)
        return t * (m + 1) * a ** (m + 1) + (n - p - t) * m * a**m + p * a

    def sei_hi(n, d, p, a):
        return (p + 2) * a ** (p + 2) + (n - p - 1) * 2 * a * a + p * a

    return [
        _named(
            "sei-pend-lower", sei, "SEI", "lower", "pend",
            "SEI_a >= t(m+1)a^(m+1) + (n-p-t)m*a^m + p*a for a > 1 or 0 < a <= e^-1",
            2, "a", _exdeg_domain(2), sei_lo, at_lo_family=True, iff_sharp=False,
        ),
        _named(
            "sei-pend-upper", sei, "SEI", "upper", "pend",
            "SEI_a <= (p+2)a^(p+2) + (n-p-1)*2a^2 + p*a for a > 1 or 0 < a <= e^-1",
            2, "a", _exdeg_domain(2), sei_hi, at_lo_family=False, iff_sharp=False,
        ),
    ]


_CATALOG: tuple[BoundSpec, ...] | None = None


def catalog() -> tuple[BoundSpec, ...]:
    """All bound entries, deterministic order, unique ids."""
    global _CATALOG
    if _CATALOG is None:
        entries = _generic_entries() + _named_entries_uni()
        entries += _named_entries_maxdeg() + _named_entries_pend()
        ids = [b.id for b in entries]
        assert len(ids) == len(set(ids))
        _CATALOG = tuple(entries)
    return _CATALOG


def catalog_entry(bound_id: str) -> BoundSpec:
    for b in catalog():
        if b.id == bound_id:
            return b
    raise KeyError(f"no bound with id {bound_id!r}")


def eval_bound(
    bound: BoundSpec,
    n: int,
    delta: int | None = None,
    p: int | None = None,
    param=None,
) -> Value:
    """Closed-form bound value; validates scope arguments and parameter."""
    if not bound.applies_to(n, delta, p):
        raise ValueError(f"{bound.id} does not apply to n={n}, delta={delta}, p={p}")
    if bound.param_kind == "none":
        if param is not None:
            raise ValueError(f"{bound.id} takes no parameter")
    elif param is None:
        raise ValueError(f"{bound.id} needs a parameter ({bound.param_kind})")
    elif not bound.param_ok(param):
        raise ValueError(f"parameter {param!r} outside the domain of {bound.id}")
    return bound.bound_value(n, delta, p, param)


# ---------------------------------------------------------------------------
# audits


@dataclass(frozen=True)
class AuditRow:
    bound_id: str
    param_label: str
    value: Value
    bound_value: Value
    satisfied: bool
    tight: bool
    member: bool
    iff_sharp: bool
    note: str = ""

    @property
    def iff_consistent(self) -> bool:
        return not self.iff_sharp or self.tight == self.member


@dataclass(frozen=True)
class AuditReport:
    graph_id: str
    n: int
    max_degree: int
    pendants: int
    degree_sequence: tuple[int, ...]
    rows: tuple[AuditRow, ...]
    skipped: tuple[str, ...] = ()
    note: str = ""

    @property
    def violations(self) -> tuple[AuditRow, ...]:
        return tuple(r for r in self.rows if not r.satisfied)

    @property
    def sharpness_mismatches(self) -> tuple[AuditRow, ...]:
        return tuple(r for r in self.rows if not r.iff_consistent)

    @property
    def clean(self) -> bool:
        return not self.violations and not self.sharpness_mismatches

    @property
    def tight_count(self) -> int:
        return sum(1 for r in self.rows if r.tight)


def audit(g: Graph, config: AuditConfig | None = None) -> AuditReport:
    """Check every applicable catalog bound against one unicyclic graph.

    Bounds are instantiated at the graph's own maximum degree and
    pendant count. n=3 short-circuits to an empty report: the triangle
    is the entire class and no entry applies below n=4.
    """
    if not is_unicyclic(g):
        raise ValueError("audit needs a unicyclic graph")
    config = config or AuditConfig()
    from .graphs import degree_sequence

    seq = degree_sequence(g)
    d = max_degree(g)
    p = pendant_count(g)
    gid = canonical_code(g).hex()
    if g.n == 3:
        return AuditReport(gid, 3, d, p, seq, (), (), "n=3: no applicable bounds")
    rows = []
    skipped = []
    for bound in catalog():
        if not bound.applies_to(g.n, d, p):
            skipped.append(bound.id)
            continue
        family = bound.sharp_family(g.n, d, p)
        member = seq == tuple(family.defining_sequence)
        for param, label, note in bound.param_grid(config):
            value = bound.graph_value(g, param)
            ref = bound.bound_value(g.n, d, p, param)
            if bound.side == "lower":
                satisfied = leq_with_tol(ref, value, config.tolerance)
            else:
                satisfied = leq_with_tol(value, ref, config.tolerance)
            tight = values_close(value, ref, config.tolerance)
            rows.append(
                AuditRow(
                    bound.id, label, value, ref, satisfied, tight, member,
                    bound.iff_sharp, note,
                )
            )
    return AuditReport(gid, g.n, d, p, seq, tuple(rows), tuple(skipped))


TABULAR_COLUMNS = (
    "graph_id",
    "bound_id",
    "param",
    "value",
    "bound_value",
    "satisfied",
    "tight",
    "member",
)


def _fmt_value(v: Value) -> str:
    if isinstance(v, Fraction):
        return f"{float(v):.12g}"
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def tabular_rows(report: AuditReport) -> list[tuple[str, ...]]:
    """Rows matching TABULAR_COLUMNS, one per applicable (bound, param)."""
    out = []
    for r in report.rows:
        out.append(
            (
                report.graph_id,
                r.bound_id,
                r.param_label,
                _fmt_value(r.value),
                _fmt_value(r.bound_value),
                "yes" if r.satisfied else "NO",
                "yes" if r.tight else "no",
                "yes" if r.member else "no",
            )
        )
    return out


def render_report_text(report: AuditReport) -> str:
    lines = [
        f"graph {report.graph_id}: n={report.n} max_degree={report.max_degree} "
        f"pendants={report.pendants} degrees={report.degree_sequence}"
    ]
    if report.note:
        lines.append(f"  {report.note}")
    for r in report.rows:
        status = "ok " if r.satisfied else "VIOLATION"
        marks = []
        if r.tight:
            marks.append("tight")
        if r.member:
            marks.append("extremal-member")
        if r.iff_sharp and not r.iff_consistent:
            marks.append("SHARPNESS-MISMATCH")
        if r.note:
            marks.append(r.note)
        suffix = f"  [{', '.join(marks)}]" if marks else ""
        param = f" {r.param_label}" if r.param_label else ""
        lines.append(
            f"  {status} {r.bound_id}{param}: value={_fmt_value(r.value)} "
            f"({value_mode(r.value)}) bound={_fmt_value(r.bound_value)}{suffix}"
        )
    lines.append(
        f"  summary: {len(report.rows)} checks, {len(report.violations)} violations, "
        f"{report.tight_count} tight, {len(report.sharpness_mismatches)} sharpness mismatches"
    )
    return "\n".join(lines)
