"""Tests for the bundled knot table."""

import math

import pytest

from biqknot.algebra import make_dihedral
from biqknot.coloring import count_colorings
from biqknot.knots import builtin_knot, builtin_table, parse_knot_table

# every bundled knot is 2-bridge, so the 2-bridge counting rule applies
TWO_BRIDGE = ("3_1", "4_1", "5_1", "5_2", "6_1", "7_1", "7_2", "8_1", "9_1", "9_24")


def test_table_contents():
    table = builtin_table()
    assert set(TWO_BRIDGE) <= set(table)
    for name, rec in table.items():
        crossings = int(name.split("_")[0])
        assert len(rec.diagram.crossings) == crossings
        assert rec.diagram.component_count() == 1
        assert rec.determinant is not None


def test_determinants():
    dets = {"3_1": 3, "4_1": 5, "5_1": 5, "5_2": 7, "6_1": 9,
            "7_1": 7, "7_2": 11, "8_1": 13, "9_1": 9, "9_24": 45}
    for name, det in dets.items():
        assert builtin_knot(name).determinant == det


def test_two_bridge_coloring_rule():
    # Col_{R_n}(K) = n * gcd(det, n) for 2-bridge knots; this pins the
    # bundled diagrams against their recorded determinants
    for name in TWO_BRIDGE:
        rec = builtin_knot(name)
        for n in range(3, 13):
            assert count_colorings(rec.diagram, make_dihedral(n)) == n * math.gcd(rec.determinant, n), name


def test_unknown_knot():
    with pytest.raises(KeyError):
        builtin_knot("10_139")


def test_parse_knot_table_errors():
    with pytest.raises(ValueError, match="line 1"):
        parse_knot_table("just one field\n")
    with pytest.raises(ValueError, match="duplicate"):
        parse_knot_table("a | X+ 0 1 1 0 | 1\na | X+ 0 1 1 0 | 1\n")


def test_table_without_determinant():
    recs = parse_knot_table("kink | X+ 0 1 1 0\n")
    assert recs["kink"].determinant is None
