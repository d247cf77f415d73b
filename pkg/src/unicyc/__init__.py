"""Degree-based topological indices and sharp extremal bounds on unicyclic graphs.

The package splits into small layers:

- graphs: immutable Graph type, parsing, degree utilities, canonical codes
- majorization: value handling, term-function specs, convexity classes,
  the majorization order and Schur-style monotonicity checks
- indices: index specs (M1^alpha, M2^alpha, SEI, NK, NK*, Wiener) and
  evaluation in exact or float arithmetic
- extremal: extremal degree sequences, graph constructions, and the
  families attaining the catalog bounds
- enumeration: exhaustive unicyclic generation up to n = 9 with
  canonical deduplication, plus brute-force extremal search
- bounds: the machine-readable bounds catalog and per-graph audits
"""

from .graphs import (
    CANONICAL_MAX_N,
    Graph,
    ParseError,
    canonical_code,
    degree_sequence,
    degrees,
    is_connected,
    is_unicyclic,
    max_degree,
    parse_edge_list,
    pendant_count,
    relabel,
    serialize_edge_list,
)
from .majorization import (
    DEFAULT_TOLERANCE,
    EXDEG_FLOOR1_LIMIT,
    EXDEG_FLOOR2_LIMIT,
    FunctionSpec,
    IDENTITY,
    NEITHER,
    OrderingReport,
    SELF_POWER,
    STRICTLY_CONCAVE,
    STRICTLY_CONVEX,
    SequenceClass,
    Value,
    convexity_class,
    exdeg,
    in_class,
    leq_with_tol,
    log_convexity_class,
    majorizes,
    pow_value,
    power,
    schur_value,
    value_mode,
    values_close,
    verify_schur_monotonicity,
)
from .indices import (
    F,
    ID,
    IndexSpec,
    M1,
    NK,
    NK_STAR,
    WIENER,
    additive_index,
    eval_edge_form,
    evaluate,
    m1_alpha,
    m2_alpha,
    multiplicative_index,
    parse_index,
    sei,
    vertex_function,
    wiener,
)
from .extremal import (
    BalancedPendants,
    Cycle,
    HubPaths,
    HubPendants,
    LoadedCycle,
    TriangleStar,
    balanced_pendant_sequence,
    build_cycle,
    build_hub_paths,
    build_hub_pendants,
    build_loaded_cycle,
    build_triangle_star,
    cycle_load_params,
    cycle_sequence,
    hub_path_sequence,
    hub_pendant_sequence,
    is_member,
    loaded_cycle_sequence,
    pendant_split,
    star_cycle_sequence,
)
from .enumeration import (
    MAX_CROSS_CHECK_N,
    MAX_ENUMERATION_N,
    ExtremalSearchResult,
    count_classes,
    enumerate_unicyclic,
    enumerate_unicyclic_edge_subsets,
    extremal_search,
    rooted_trees,
)
from .bounds import (
    AuditConfig,
    AuditReport,
    AuditRow,
    BoundSpec,
    DEFAULT_A_GRID,
    DEFAULT_ALPHA_GRID,
    TABULAR_COLUMNS,
    audit,
    catalog,
    catalog_entry,
    eval_bound,
    render_report_text,
    tabular_rows,
)

__version__ = "0.1.0"

__all__ = [
    "CANONICAL_MAX_N",
    "Graph",
    "ParseError",
    "canonical_code",
    "degree_sequence",
    "degrees",
    "is_connected",
    "is_unicyclic",
    "max_degree",
    "parse_edge_list",
    "pendant_count",
    "relabel",
    "serialize_edge_list",
    "DEFAULT_TOLERANCE",
    "EXDEG_FLOOR1_LIMIT",
    "EXDEG_FLOOR2_LIMIT",
    "FunctionSpec",
    "IDENTITY",
    "NEITHER",
    "OrderingReport",
    "SELF_POWER",
    "STRICTLY_CONCAVE",
    "STRICTLY_CONVEX",
    "SequenceClass",
    "Value",
    "convexity_class",
    "exdeg",
    "in_class",
    "leq_with_tol",
    "log_convexity_class",
    "majorizes",
    "pow_value",
    "power",
    "schur_value",
    "value_mode",
    "values_close",
    "verify_schur_monotonicity",
    "F",
    "ID",
    "IndexSpec",
    "M1",
    "NK",
    "NK_STAR",
    "WIENER",
    "additive_index",
    "eval_edge_form",
    "evaluate",
    "m1_alpha",
    "m2_alpha",
    "multiplicative_index",
    "parse_index",
    "sei",
    "vertex_function",
    "wiener",
    "BalancedPendants",
    "Cycle",
    "HubPaths",
    "HubPendants",
    "LoadedCycle",
    "TriangleStar",
    "balanced_pendant_sequence",
    "build_cycle",
    "build_hub_paths",
    "build_hub_pendants",
    "build_loaded_cycle",
    "build_triangle_star",
    "cycle_load_params",
    "cycle_sequence",
    "hub_path_sequence",
    "hub_pendant_sequence",
    "is_member",
    "loaded_cycle_sequence",
    "pendant_split",
    "star_cycle_sequence",
    "MAX_CROSS_CHECK_N",
    "MAX_ENUMERATION_N",
    "ExtremalSearchResult",
    "count_classes",
    "enumerate_unicyclic",
    "enumerate_unicyclic_edge_subsets",
    "extremal_search",
    "rooted_trees",
    "AuditConfig",
    "AuditReport",
    "AuditRow",
    "BoundSpec",
    "DEFAULT_A_GRID",
    "DEFAULT_ALPHA_GRID",
    "TABULAR_COLUMNS",
    "audit",
    "catalog",
    "catalog_entry",
    "eval_bound",
    "render_report_text",
    "tabular_rows",
]
