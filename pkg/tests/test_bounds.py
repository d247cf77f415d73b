import math
from fractions import Fraction

import pytest

from unicyc import (
    AuditConfig,
    AuditRow,
    Graph,
    IDENTITY,
    SELF_POWER,
    TABULAR_COLUMNS,
    audit,
    balanced_pendant_sequence,
    catalog,
    catalog_entry,
    cycle_sequence,
    degree_sequence,
    eval_bound,
    evaluate,
    exdeg,
    hub_path_sequence,
    hub_pendant_sequence,
    loaded_cycle_sequence,
    m1_alpha,
    max_degree,
    parse_index,
    pendant_count,
    power,
    render_report_text,
    schur_value,
    sei,
    star_cycle_sequence,
    tabular_rows,
    values_close,
)
from unicyc.extremal import (
    build_cycle,
    build_hub_paths,
    build_hub_pendants,
    build_loaded_cycle,
    build_triangle_star,
)

UNI_SEQS = {"lower_at": cycle_sequence, "upper_at": star_cycle_sequence}


def test_catalog_shape():
    entries = catalog()
    assert len(entries) == 58
    ids = [b.id for b in entries]
    assert len(set(ids)) == len(ids)
    for scope in ("uni", "maxdeg", "pend"):
        sides = [b.side for b in entries if b.scope == scope]
        assert sides.count("lower") == sides.count("upper")
    generic = [b for b in entries if b.param_kind == "function"]
    assert len(generic) == 24
    assert all(not b.iff_sharp for b in generic)
    named_iff = [b for b in entries if b.iff_sharp]
    assert len(named_iff) == 32


def test_catalog_entry_lookup():
    assert catalog_entry("m1-uni-lower").side == "lower"
    with pytest.raises(KeyError):
        catalog_entry("nope")


def test_applies_to():
    b = catalog_entry("m1-uni-lower")
    assert b.applies_to(4) and not b.applies_to(3)
    b = catalog_entry("m1-maxdeg-lower")
    assert b.applies_to(6, delta=4)
    assert not b.applies_to(6, delta=2)
    assert not b.applies_to(6)
    b = catalog_entry("sei-pend-lower")
    assert b.applies_to(6, p=2)
    assert not b.applies_to(6, p=0)
    assert not b.applies_to(6, p=4)


def test_eval_bound_validation():
    b = catalog_entry("m1a-convex-uni-lower")
    assert eval_bound(b, 6, param=2) == 24
    with pytest.raises(ValueError):
        eval_bound(b, 3, param=2)
    with pytest.raises(ValueError):
        eval_bound(b, 6)  # parameter required
    with pytest.raises(ValueError):
        eval_bound(b, 6, param=0.5)  # concave exponent on the convex entry
    b = catalog_entry("m1-uni-lower")
    with pytest.raises(ValueError):
        eval_bound(b, 6, param=2)  # no parameter expected


def closed_form_value(bound_id, n, d=None, p=None, param=None):
    return eval_bound(catalog_entry(bound_id), n, delta=d, p=p, param=param)


def test_named_uni_bounds_match_sequence_evaluation():
    # the closed forms must equal the plain sum/product over the
    # extremal degree sequence they are derived from
    for n in range(4, 10):
        lo, hi = cycle_sequence(n), star_cycle_sequence(n)
        for alpha in (-2, -1, 3, 2):
            assert closed_form_value("m1a-convex-uni-lower", n, param=alpha) == \
                schur_value(power(alpha), lo, "additive")
            assert closed_form_value("m1a-convex-uni-upper", n, param=alpha) == \
                schur_value(power(alpha), hi, "additive")
        assert closed_form_value("m1a-concave-uni-lower", n, param=0.5) == \
            pytest.approx(schur_value(power(0.5), hi, "additive"))
        assert closed_form_value("m1-uni-lower", n) == schur_value(power(2), lo, "additive")
        assert closed_form_value("m1-uni-upper", n) == schur_value(power(2), hi, "additive")
        assert closed_form_value("f-uni-upper", n) == schur_value(power(3), hi, "additive")
        assert closed_form_value("id-uni-lower", n) == schur_value(power(-1), lo, "additive")
        assert closed_form_value("id-uni-upper", n) == schur_value(power(-1), hi, "additive")
        for a in (0.1, 2.0):
            assert closed_form_value("sei-uni-lower", n, param=a) == \
                pytest.approx(schur_value(exdeg(a), lo, "additive"))
            assert closed_form_value("sei-uni-upper", n, param=a) == \
                pytest.approx(schur_value(exdeg(a), hi, "additive"))
        assert closed_form_value("nk-uni-upper", n) == \
            schur_value(IDENTITY, lo, "multiplicative")
        assert closed_form_value("nk-uni-lower", n) == \
            schur_value(IDENTITY, hi, "multiplicative")
        assert closed_form_value("nkstar-uni-lower", n) == \
            schur_value(SELF_POWER, lo, "multiplicative")
        assert closed_form_value("nkstar-uni-upper", n) == \
            schur_value(SELF_POWER, hi, "multiplicative")


def test_named_maxdeg_bounds_match_sequence_evaluation():
    for n in range(4, 10):
        for d in range(3, n):
            y, z = hub_path_sequence(n, d), loaded_cycle_sequence(n, d)
            assert closed_form_value("m1-maxdeg-lower", n, d=d) == \
                schur_value(power(2), y, "additive")
            assert closed_form_value("m1-maxdeg-upper", n, d=d) == \
                schur_value(power(2), z, "additive")
            assert closed_form_value("f-maxdeg-lower", n, d=d) == \
                schur_value(power(3), y, "additive")
            assert closed_form_value("f-maxdeg-upper", n, d=d) == \
                schur_value(power(3), z, "additive")
            assert closed_form_value("id-maxdeg-lower", n, d=d) == \
                schur_value(power(-1), y, "additive")
            assert closed_form_value("id-maxdeg-upper", n, d=d) == \
                schur_value(power(-1), z, "additive")
            assert closed_form_value("m1a-convex-maxdeg-upper", n, d=d, param=-2) == \
                schur_value(power(-2), z, "additive")
            assert closed_form_value("m1a-concave-maxdeg-lower", n, d=d, param=0.5) == \
                pytest.approx(schur_value(power(0.5), z, "additive"))
            assert closed_form_value("sei-maxdeg-lower", n, d=d, param=2.0) == \
                pytest.approx(schur_value(exdeg(2.0), y, "additive"))
            assert closed_form_value("sei-maxdeg-upper", n, d=d, param=2.0) == \
                pytest.approx(schur_value(exdeg(2.0), z, "additive"))
            assert closed_form_value("nk-maxdeg-upper", n, d=d) == \
                schur_value(IDENTITY, y, "multiplicative")
            assert closed_form_value("nk-maxdeg-lower", n, d=d) == \
                schur_value(IDENTITY, z, "multiplicative")
            assert closed_form_value("nkstar-maxdeg-lower", n, d=d) == \
                schur_value(SELF_POWER, y, "multiplicative")
            assert closed_form_value("nkstar-maxdeg-upper", n, d=d) == \
                schur_value(SELF_POWER, z, "multiplicative")


def test_named_pend_bounds_match_sequence_evaluation():
    for n in range(4, 10):
        for p in range(1, n - 2):
            a_seq = balanced_pendant_sequence(n, p)
            b_seq = hub_pendant_sequence(n, p)
            for a in (0.2, 2.0):
                assert closed_form_value("sei-pend-lower", n, p=p, param=a) == \
                    pytest.approx(schur_value(exdeg(a), a_seq, "additive"))
                assert closed_form_value("sei-pend-upper", n, p=p, param=a) == \
                    pytest.approx(schur_value(exdeg(a), b_seq, "additive"))


def test_frozen_bound_values():
    assert closed_form_value("m1-maxdeg-lower", 7, d=4) == 34
    assert closed_form_value("m1-maxdeg-upper", 7, d=3) == 34
    assert closed_form_value("m1-uni-upper", 5) == 26
    assert closed_form_value("f-uni-lower", 5) == 40
    assert closed_form_value("id-uni-lower", 6) == Fraction(3)
    assert closed_form_value("nkstar-uni-lower", 4) == 256
    assert closed_form_value("nkstar-uni-upper", 4) == 432
    assert closed_form_value("nk-uni-upper", 6) == 64
    assert closed_form_value("nk-uni-lower", 6) == 20
    assert values_close(closed_form_value("sei-uni-lower", 4, param=2.0), 32.0)
    # q=3 loaded triangles plus remainder 2: 3/3 + 1/2 + 3
    assert closed_form_value("id-maxdeg-upper", 7, d=3) == Fraction(9, 2)


def test_bounds_sharp_on_their_families():
    # each family member must land exactly on its bound value
    for n in (5, 7, 8):
        assert evaluate(m1_alpha(-2), build_cycle(n)) == \
            closed_form_value("m1a-convex-uni-lower", n, param=-2)
        assert evaluate(m1_alpha(-2), build_triangle_star(n)) == \
            closed_form_value("m1a-convex-uni-upper", n, param=-2)
        for d in range(3, n):
            assert evaluate(parse_index("M1"), build_hub_paths(n, d)) == \
                closed_form_value("m1-maxdeg-lower", n, d=d)
            assert evaluate(parse_index("M1"), build_loaded_cycle(n, d)) == \
                closed_form_value("m1-maxdeg-upper", n, d=d)
        for p in range(1, n - 2):
            got = evaluate(sei(2.0), build_hub_pendants(n, p))
            assert values_close(got, closed_form_value("sei-pend-upper", n, p=p, param=2.0))


def test_generic_bound_values_follow_sequences():
    b = catalog_entry("if-convex-uni-lower")
    assert b.bound_value(6, None, None, power(2)) == 24
    b = catalog_entry("if-concave-uni-upper")
    assert b.bound_value(6, None, None, power(0.5)) == \
        pytest.approx(6 * math.sqrt(2))
    b = catalog_entry("iif-logconvex-maxdeg-lower")
    assert b.bound_value(7, 4, None, SELF_POWER) == \
        schur_value(SELF_POWER, hub_path_sequence(7, 4), "multiplicative")
    # log-concave products peak at the majorization minimum sequence
    b = catalog_entry("iif-logconcave-pend-upper")
    assert b.bound_value(7, None, 2, IDENTITY) == \
        schur_value(IDENTITY, balanced_pendant_sequence(7, 2), "multiplicative")
    b = catalog_entry("iif-logconcave-pend-lower")
    assert b.bound_value(7, None, 2, IDENTITY) == \
        schur_value(IDENTITY, hub_pendant_sequence(7, 2), "multiplicative")


def test_param_grid_filters_by_convexity():
    config = AuditConfig()
    grid = [p for p, _, _ in catalog_entry("m1a-convex-uni-lower").param_grid(config)]
    assert grid == [-2.0, -1.0, -0.5, 2.0, 3.0]
    grid = [p for p, _, _ in catalog_entry("m1a-concave-uni-lower").param_grid(config)]
    assert grid == [0.5]
    # floor 1 admits a <= e^-2; floor 2 admits a <= e^-1
    grid = [p for p, _, _ in catalog_entry("sei-uni-lower").param_grid(config)]
    assert len(grid) == 3 and 2.0 in grid
    grid = [p for p, _, _ in catalog_entry("sei-pend-lower").param_grid(config)]
    assert len(grid) == 4
    labels = [f.label for f, _, _ in catalog_entry("if-convex-uni-lower").param_grid(config)]
    assert "power(2)" in labels and "self_power" in labels
    assert "power(0.5)" not in labels and "identity" not in labels


def test_audit_clean_on_extremal_graphs():
    for g in (
        build_cycle(6),
        build_triangle_star(7),
        build_hub_paths(8, 4),
        build_loaded_cycle(7, 3),
        build_hub_pendants(7, 2),
    ):
        report = audit(g)
        assert report.clean
        assert report.tight_count > 0
        assert report.violations == ()
        assert report.n == g.n
        assert report.max_degree == max_degree(g)
        assert report.pendants == pendant_count(g)


def test_audit_rejects_non_unicyclic():
    with pytest.raises(ValueError):
        audit(Graph(4, [(0, 1), (1, 2), (2, 3)]))


def test_audit_triangle_short_circuits():
    report = audit(build_cycle(3))
    assert report.rows == ()
    assert "n=3" in report.note
    assert report.clean


def test_audit_cycle_tight_on_lower_uni_bounds():
    report = audit(build_cycle(6))
    by_id = {}
    for r in report.rows:
        by_id.setdefault(r.bound_id, []).append(r)
    for r in by_id["m1-uni-lower"] + by_id["f-uni-lower"] + by_id["nk-uni-upper"]:
        assert r.tight and r.member
    for r in by_id["m1-uni-upper"]:
        assert not r.tight and not r.member
    # cycle has no pendants and max degree 2: scoped bounds don't apply
    assert "sei-pend-lower" in report.skipped
    assert "m1-maxdeg-lower" in report.skipped


def test_audit_boundary_note():
    a_boundary = math.exp(-2)
    report = audit(build_cycle(5), AuditConfig(a_grid=(a_boundary,)))
    noted = [r for r in report.rows if r.bound_id == "sei-uni-lower"]
    assert noted and all("boundary" in r.note for r in noted)


def test_audit_config_grids_flow_through():
    report = audit(build_cycle(5), AuditConfig(alpha_grid=(2.0,), a_grid=(2.0,)))
    labels = {r.param_label for r in report.rows if r.bound_id == "m1a-convex-uni-lower"}
    assert labels == {"alpha=2"}
    full = audit(build_cycle(5))
    assert len(full.rows) > len(report.rows)


def test_audit_row_iff_logic():
    ok = AuditRow("x", "", 1, 1, True, True, True, True)
    assert ok.iff_consistent
    tight_outside = AuditRow("x", "", 1, 1, True, True, False, True)
    assert not tight_outside.iff_consistent
    slack_member = AuditRow("x", "", 1, 2, True, False, True, True)
    assert not slack_member.iff_consistent
    not_iff = AuditRow("x", "", 1, 2, True, False, True, False)
    assert not_iff.iff_consistent


def test_scoped_bounds_nest_inside_global_ones(classes_by_n):
    # instantiating at the graph's own max degree or pendant count can
    # only pull the bounds inward
    for n in (6, 7):
        for g in classes_by_n[n]:
            d, p = max_degree(g), pendant_count(g)
            if d >= 3:
                assert closed_form_value("m1-maxdeg-lower", n, d=d) >= \
                    closed_form_value("m1-uni-lower", n)
                assert closed_form_value("m1-maxdeg-upper", n, d=d) <= \
                    closed_form_value("m1-uni-upper", n)
            if 1 <= p <= n - 3:
                pend_lo = schur_value(power(2), balanced_pendant_sequence(n, p), "additive")
                pend_hi = schur_value(power(2), hub_pendant_sequence(n, p), "additive")
                assert pend_lo >= closed_form_value("m1-uni-lower", n)
                assert pend_hi <= closed_form_value("m1-uni-upper", n)


def test_tabular_rows_shape():
    report = audit(build_cycle(5))
    rows = tabular_rows(report)
    assert len(rows) == len(report.rows)
    for row in rows:
        assert len(row) == len(TABULAR_COLUMNS)
        assert row[0] == report.graph_id
        assert row[5] in ("yes", "NO")


def test_render_report_text():
    report = audit(build_triangle_star(5))
    text = render_report_text(report)
    assert f"n={report.n}" in text
    assert "summary:" in text
    assert "VIOLATION" not in text
    assert "tight" in text
