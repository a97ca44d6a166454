"""Exact evaluation of the order bound: per-class reports, diagram scans,
and the extremal tables for the inner exceptional types."""

from __future__ import annotations

from fractions import Fraction

import pytest

from kacscope.affine import build_spec, catalog
from kacscope.kac import enumerate_classes, from_zero_set
from kacscope.thomae import (
    check_class,
    f_value,
    proper_subsets,
    scan_diagram,
    step1_table,
    step2_table,
    zero_set_data,
)


# ---------------------------------------------------------------------------
# per-class reports


def test_report_fields_principal_g2():
    g2 = build_spec("G2")
    r = check_class(g2, (1, 1, 1))
    assert r.m == 6
    assert tuple(r.zero_set) == ()
    assert r.fixed_type == "0"
    assert r.fixed_dim == 2  # the fixed subalgebra of a principal class is a torus
    assert r.tau == Fraction(1, 6)
    assert r.bound == Fraction(2, 12)
    assert r.f == 0
    assert r.holds and r.is_equality


def test_report_inadmissible_rejected():
    g2 = build_spec("G2")
    with pytest.raises(ValueError):
        check_class(g2, (0, 0, 0))
    with pytest.raises(ValueError):
        check_class(g2, (2, 2, 2))


# Order-2 and order-3 points with well-known fixed subalgebras.  In each
# block the first class is the equality case; the second is the larger
# fixed subalgebra at the same order, which the bound keeps strictly
# below 1/m... or rather strictly above, dim-wise.
KNOWN_CLASSES = [
    # spec, kac, order, fixed type, fixed dim, is_equality
    ("2E6", (0, 0, 0, 0, 1), 2, "B4", 36, True),
    ("2E6", (1, 0, 0, 0, 0), 2, "F4", 52, False),
    ("3D4", (0, 0, 1), 3, "A2", 8, True),
    ("3D4", (1, 0, 0), 3, "G2", 14, False),
    ("C3", (1, 0, 0, 1), 2, "A2", 9, True),
    ("C3", (0, 0, 1, 0), 2, "B2+A1", 13, False),
    ("2A2", (1, 0), 2, "A1", 3, True),
    ("D4", (0, 0, 1, 0, 0), 2, "4A1", 12, True),
    ("D4", (0, 0, 0, 1, 1), 2, "A3", 16, False),
    ("E6", (0, 0, 0, 0, 0, 1, 0), 2, "A5+A1", 38, False),
    ("E6", (0, 0, 0, 0, 1, 0, 1), 2, "D5", 46, False),
]


@pytest.mark.parametrize("spec,s,m,ftype,fdim,eq", KNOWN_CLASSES)
def test_known_fixed_subalgebras(spec, s, m, ftype, fdim, eq):
    d = build_spec(spec)
    r = check_class(d, s)
    assert r.m == m
    assert r.fixed_type == ftype
    assert r.fixed_dim == fdim
    assert r.holds
    assert r.is_equality == eq
    if eq:
        # at equality the fixed dimension is exactly (dim g - rank g)/m
        assert Fraction(fdim, d.base_root_count) == Fraction(1, m)


def test_fixed_dim_is_rank_plus_roots():
    b5 = build_spec("B5")
    for s in enumerate_classes(b5, 4):
        r = check_class(b5, s)
        roots, _, _ = zero_set_data(b5, r.zero_set)
        assert r.fixed_dim == b5.n_e + roots


# ---------------------------------------------------------------------------
# the f certificate


def test_f_empty_zero_set_is_zero():
    for spec in ("A5", "C4", "2D7", "E8"):
        assert f_value(build_spec(spec), frozenset()) == 0


def test_f_matches_bound_comparison():
    """f(J) has the same sign as bound - tau, scaled by positive factors,
    so f >= 0 exactly when the report says the bound holds."""
    d = build_spec("2A8")
    for J in proper_subsets(d):
        f = f_value(d, J)
        r = check_class(d, from_zero_set(d, J))
        assert (f == 0) == r.is_equality
        assert (f >= 0) == (r.bound >= r.tau)


NINE_ROWS = [
    # spec, kac, |R_J|, c^J, c_J, equality
    ("F4", (1, 0, 0, 0, 0), 48, 1, 11, False),
    ("F4", (0, 1, 0, 0, 0), 20, 2, 10, True),
    ("F4", (0, 0, 1, 0, 0), 12, 3, 9, True),
    ("F4", (1, 1, 0, 0, 0), 18, 3, 9, False),
    ("2E6", (0, 0, 0, 1, 1), 12, 3, 6, False),
    ("2E6", (0, 0, 0, 1, 0), 14, 2, 7, True),
    ("2E6", (0, 0, 0, 0, 1), 32, 1, 8, True),
    ("2E6", (1, 0, 0, 0, 1), 18, 2, 7, False),
    ("2E6", (0, 1, 0, 0, 1), 10, 3, 6, False),
]


@pytest.mark.parametrize("spec,s,roots,c_up,c_down,eq", NINE_ROWS)
def test_rank_four_inner_data(spec, s, roots, c_up, c_down, eq):
    d = build_spec(spec)
    assert d.n_e == 4
    J = frozenset(i for i, v in enumerate(s) if v == 0)
    got = zero_set_data(d, J)
    assert got == (roots, c_down, c_up)
    f = c_up * roots - d.n_e * c_down
    assert f == f_value(d, J)
    assert (f == 0) == eq
    assert f >= 0


# ---------------------------------------------------------------------------
# scans


def test_scan_g2():
    scan = scan_diagram(build_spec("G2"))
    assert scan.h_e == 6 and scan.n_e == 2 and scan.dim_g == 14
    assert scan.subsets_checked == 7
    assert scan.min_f == 0
    assert scan.all_nonnegative
    assert [(c.m, c.s) for c in scan.equality_classes] == [
        (6, (1, 1, 1)),
        (3, (1, 1, 0)),
        (2, (0, 1, 0)),
    ]
    assert [c.fixed_dim for c in scan.equality_classes] == [2, 4, 6]


def test_scan_equality_dims_divide_roots():
    for d in catalog(8):
        scan = scan_diagram(d)
        assert scan.all_nonnegative
        for cls in scan.equality_classes:
            assert cls.fixed_dim * cls.m == d.base_root_count


def test_scan_counts_proper_subsets():
    d = build_spec("B4")
    assert scan_diagram(d).subsets_checked == 2 ** len(d.nodes) - 1
    assert len(list(proper_subsets(d))) == 2 ** len(d.nodes) - 1


# ---------------------------------------------------------------------------
# extremal tables (inner exceptional types only)


E6_STEP1 = {
    2: (32, {"A5+A1"}, False),
    3: (18, {"3A2"}, True),
    4: (14, {"2A2+A1", "A3+A1"}, False),
    5: (10, {"A2+2A1"}, False),
}
E7_STEP1 = {
    2: (56, {"A7"}, True),
    3: (36, {"A5+A2"}, False),
    4: (26, {"2A3+A1", "A4+A2"}, False),
    5: (20, {"A3+A2+A1"}, False),
    6: (14, {"2A2+A1"}, True),
}
E8_STEP1 = {
    2: (112, {"D8"}, True),
    3: (72, {"A8"}, True),
    4: (52, {"D5+A3"}, True),
    5: (40, {"2A4"}, True),
    6: (32, {"A4+A3"}, True),
    7: (28, {"A4+A2+A1"}, False),
}
E7_STEP2 = {
    10: (8, {"5A1", "A2+2A1"}, False),
}
E8_STEP2 = {
    10: (14, {"5A1", "A2+2A1"}, False),
    12: (12, {"A2+3A1"}, True),
    14: (12, {"2A2+A1", "A2+4A1", "A3+A1"}, False),
    16: (10, {"2A2+2A1"}, True),
    18: (10, {"A3+3A1", "A3+A2"}, False),
    20: (9, {"3A2+A1", "A3+A2+A1"}, False),
    22: (8, {"A3+A2+2A1"}, True),
}


def _assert_table(table, expected):
    assert set(table) == set(expected)
    for key, (value, achievers, has_witness) in expected.items():
        row = table[key]
        assert row.value == value, key
        assert set(row.achievers) == achievers, key
        assert (row.witness is not None) == has_witness, key


def test_step1_tables():
    _assert_table(step1_table(build_spec("E6")), E6_STEP1)
    _assert_table(step1_table(build_spec("E7")), E7_STEP1)
    _assert_table(step1_table(build_spec("E8")), E8_STEP1)


def test_step2_tables():
    assert step2_table(build_spec("E6")) == {}
    _assert_table(step2_table(build_spec("E7")), E7_STEP2)
    _assert_table(step2_table(build_spec("E8")), E8_STEP2)


def test_step_witness_vectors():
    t6 = step1_table(build_spec("E6"))
    assert t6[3].witness == (0, 0, 1, 0, 0, 0, 0)
    t8 = step1_table(build_spec("E8"))
    assert t8[2].witness == (0, 0, 0, 0, 0, 0, 0, 1, 0)
    assert t8[3].witness == (0, 0, 0, 0, 0, 0, 0, 0, 1)
    assert t8[5].witness == (0, 0, 0, 0, 1, 0, 0, 0, 0)


def test_step1_bound_meaning():
    """Each row value r(m) satisfies m*(r(m)+n) >= |R|, with equality
    exactly on witness rows."""
    for spec in ("E6", "E7", "E8"):
        d = build_spec(spec)
        for m, row in step1_table(d).items():
            lhs = m * (row.value + d.n_e)
            assert lhs >= d.base_root_count
            assert (lhs == d.base_root_count) == (row.witness is not None)


def test_step2_bound_meaning():
    for spec in ("E7", "E8"):
        d = build_spec(spec)
        for r, row in step2_table(d).items():
            lhs = row.value * (r + d.n_e)
            assert lhs >= d.base_root_count
            assert (lhs == d.base_root_count) == (row.witness is not None)


def test_step_tables_reject_other_types():
    for spec in ("F4", "G2", "2E6", "D8"):
        with pytest.raises(ValueError):
            step1_table(build_spec(spec))


# ---------------------------------------------------------------------------
# the untwisted A series: f counts the zero set with room to spare


@pytest.mark.parametrize("n", range(1, 13))
def test_type_a_slack(n):
    d = build_spec(f"A{n}")
    for J in proper_subsets(d):
        if J:
            assert f_value(d, J) >= len(J) > 0
    assert f_value(d, frozenset()) == 0
