import xml.etree.ElementTree as ET
from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from hnstrata.isodata import hodge_from_tuple, newton_from_slopes
from hnstrata.numvec import MalformedInstance, total
from hnstrata.permcomb import Perm
from hnstrata.polyio import Polygon, export_csv, export_svg, is_convex, polygon_of
from hnstrata.strata import NotInGamma, build_stratum, enumerate_gamma

from conftest import instances


def test_polygon_examples(d3):
    n, h = d3
    g1 = build_stratum((2,), Perm.identity(2), Perm.identity(3), n, h)
    assert polygon_of(g1).breakpoints == ((0, 0), (3, 4))
    g4 = build_stratum((1, 1), Perm.identity(2), Perm((1, 3, 2)), n, h)
    assert polygon_of(g4).breakpoints == ((0, 0), (2, 3), (3, 4))
    bad = build_stratum((1, 1), Perm.identity(2), Perm((1, 3, 2)), n, hodge_from_tuple([3, 1, 0]))
    with pytest.raises(NotInGamma):
        polygon_of(bad)


def test_convexity_examples():
    assert is_convex(Polygon(((0, 0), (2, 3), (3, 4))))
    assert is_convex(Polygon(((0, 0), (3, 4))))
    assert not is_convex(Polygon(((0, 0), (1, 0), (2, 1))))
    assert not is_convex(Polygon(((0, 0), (1, 1), (2, 2))))


def test_polygon_validation():
    with pytest.raises(MalformedInstance):
        Polygon(((1, 0), (2, 1)))
    with pytest.raises(MalformedInstance):
        Polygon(((0, 0), (2, 1), (2, 3)))


def test_csv():
    assert export_csv(Polygon(((0, 0), (3, 4)))) == "x,y\n0,0\n3,4\n"
    assert export_csv(Polygon(((0, 0), (2, F(7, 2))))) == "x,y\n0,0\n2,7/2\n"


def test_svg_wellformed_deterministic():
    p = Polygon(((0, 0), (2, F(7, 2)), (5, F(-7, 3))))
    a, b = export_svg(p, 300, 200), export_svg(p, 300, 200)
    assert a == b
    root = ET.fromstring(a.encode())
    ns = "{http://www.w3.org/2000/svg}"
    assert root.tag == ns + "svg"
    pts = root.find(ns + "polyline").get("points").split()
    assert len(pts) == 3
    labels = [t.text for t in root.iter(ns + "text")]
    assert "(2, 7/2)" in labels
    one = ET.fromstring(export_svg(Polygon(((0, 0), (3, 4))), 100, 100).encode())
    assert len(one.find(ns + "polyline").get("points").split()) == 2
    with pytest.raises(MalformedInstance):
        export_svg(p, 0, 10)


@settings(max_examples=60, deadline=None)
@given(instances(max_d=6, rational_mu=True))
def test_polygon_invariants(inst):
    n, h = inst
    end = total(h.mu_tuple) - total(n.nu_tuple)
    for s in enumerate_gamma(n, h):
        p = polygon_of(s)
        assert is_convex(p)
        assert p.endpoint == (n.d, end)
        assert tuple(p.slopes()) == s.avg_slopes
