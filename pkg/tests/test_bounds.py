import math

import pytest

from skewlap import matrices as mx
from skewlap.bounds import (
    Equality,
    bounds_report,
    classify_lower_equality,
    classify_upper_equality,
    comparison_bounds,
    make_check,
    sle_bounds,
    sle_coarse_bounds,
    verify_odd_eulerian_components,
)
from skewlap.digraph import Digraph, new_digraph
from skewlap.eigen import Spectrum, eigenvalues
from skewlap.families import directed_cycle, oriented_complete_bipartite, triangles_plus_isolated


def by_name(checks):
    return {c.name: c for c in checks}


def spec_of(values):
    return Spectrum(tuple(complex(v) for v in values), 0.0, 1e-8)


def test_make_check_semantics():
    c = make_check("x", "upper", 2.0, "e", 2.0 + 1e-9)
    assert c.tight and c.holds and c.slack == pytest.approx(1e-9)
    c = make_check("x", "upper", 2.0, "e", 2.1)
    assert not c.tight and not c.holds
    c = make_check("x", "lower", 2.0, "e", 2.1)
    assert not c.tight and c.holds
    c = make_check("x", "lower", None, "e", 1.0)
    assert c.holds and not c.tight and c.slack is None


def test_p4_lower_tight(p4):
    b = by_name(sle_bounds(p4))
    assert b["sle_lower"].bound == pytest.approx(2 * math.sqrt(2))
    assert b["sle_lower"].tight
    assert not b["sle_upper_components"].tight
    assert bounds_report(p4).classification is Equality.LOWER_TIGHT


def test_g1_lower_tight():
    for n in (1, 2, 3):
        b = by_name(sle_bounds(oriented_complete_bipartite(n)))
        assert b["sle_lower"].bound == pytest.approx(4 * n, abs=1e-12)
        assert b["sle_lower"].energy == pytest.approx(4 * n, abs=1e-8)
        assert b["sle_lower"].tight


def test_g2_upper_tight():
    g = triangles_plus_isolated(2, 1)
    b = by_name(sle_bounds(g))
    assert b["sle_upper_components"].bound == pytest.approx(4 * math.sqrt(3), abs=1e-12)
    assert b["sle_upper_components"].tight
    r = bounds_report(g)
    assert r.classification is Equality.UPPER_BALANCED
    assert r.odd_eulerian_components is True


def test_coarse_bounds(c4, p4):
    b = by_name(sle_coarse_bounds(c4))
    assert b["sle_upper"].bound == pytest.approx(math.sqrt(32))
    assert b["sle_upper_2m1"].bound == 8
    assert all(c.holds for c in b.values())
    b = by_name(sle_coarse_bounds(Digraph(3)))
    assert b["sle_upper"].bound == 0 and b["sle_upper"].holds
    assert "sle_upper_2m1" not in b
    b = by_name(sle_coarse_bounds(p4))
    assert b["sle_upper"].bound == pytest.approx(math.sqrt(32)) and b["sle_upper"].holds


def test_comparison_bounds_c4(c4):
    b = by_name(comparison_bounds(c4))
    assert b["leg_lower"].bound == pytest.approx(4)
    assert b["leg_lower"].energy == pytest.approx(4)
    assert b["leg_lower"].tight
    # M for SLE_g is -m + 0 < 0: the square-root lower bound is undefined
    assert b["sleg_lower"].bound is None


def test_comparison_bounds_edgeless():
    for c in comparison_bounds(Digraph(4)):
        if c.bound is not None:
            assert c.bound == 0 and c.energy == 0 and c.holds


def test_comparison_bounds_p4(p4):
    b = by_name(comparison_bounds(p4))
    assert b["sleg_upper_2m1"].holds
    assert all(c.holds for c in b.values())


def test_classify_lower_equality():
    n = 2
    assert classify_lower_equality(spec_of([2j * n, -2j * n] + [0] * (4 * n - 2)))
    assert classify_lower_equality(spec_of([1j * math.sqrt(2), -1j * math.sqrt(2), 0, 0]))
    # products i, -1-i, 1-i and squares -1, -1, 2i lie on different rays
    assert not classify_lower_equality(spec_of([1, 1j, -1 - 1j]))
    # {1, -1, 0}: one nonzero product and equal squares, and sum|mu| = 2 = 2 sqrt|M|
    assert classify_lower_equality(spec_of([1, -1, 0]))


def test_classify_upper_equality(p4):
    e = Digraph(4)
    assert classify_upper_equality(e, eigenvalues(mx.skew_laplacian_new(e))) is Equality.UPPER_ZERO_REGULAR
    g = triangles_plus_isolated(2, 1)
    s = eigenvalues(mx.skew_laplacian_new(g))
    assert classify_upper_equality(g, s) is Equality.UPPER_BALANCED
    assert sorted(abs(z) for z in s.values if abs(z) > 1e-8) == pytest.approx([math.sqrt(3)] * 4)
    s = eigenvalues(mx.skew_laplacian_new(p4))
    assert classify_upper_equality(p4, s) is Equality.UNCLASSIFIED
    c4 = directed_cycle(4)
    # balanced but zeros (2) exceed p (1)
    assert classify_upper_equality(c4, eigenvalues(mx.skew_laplacian_new(c4))) is Equality.UNCLASSIFIED


def test_odd_eulerian_components():
    assert verify_odd_eulerian_components(triangles_plus_isolated(3, 2))
    assert verify_odd_eulerian_components(Digraph(4))
    assert not verify_odd_eulerian_components(directed_cycle(4))
    assert not verify_odd_eulerian_components(new_digraph(3, [(0, 1), (1, 2)]))


def test_both_sides_tight_prefers_upper():
    r = bounds_report(Digraph(3))
    assert r.classification is Equality.UPPER_ZERO_REGULAR
    assert r.lower_equality is True
    r = bounds_report(triangles_plus_isolated(1, 0))
    assert r.check("sle_lower").tight and r.check("sle_upper_components").tight
    assert r.classification is Equality.UPPER_BALANCED
