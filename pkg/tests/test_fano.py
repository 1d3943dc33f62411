import pytest

from fanog2 import fano


def test_masks_and_lines():
    assert sorted(fano.MASK.values()) == list(range(1, 8))
    for d in fano.LINES:
        pts = fano.LINE_POINTS[d]
        assert len(pts) == 3
        acc = 0
        for p in pts:
            acc ^= fano.MASK[p]
        assert acc == 0
        assert fano.is_line(pts)


def test_add_and_wedge():
    for p in fano.POINTS:
        for q in fano.POINTS:
            if p == q:
                continue
            r = fano.add(p, q)
            assert fano.is_line((p, q, r))
            d = fano.wedge(p, q)
            assert {p, q, r} == set(fano.LINE_POINTS[d])


def test_line_add():
    for d1 in fano.LINES:
        for d2 in fano.LINES:
            if d1 == d2:
                continue
            d3 = fano.line_add(d1, d2)
            common = set(fano.LINE_POINTS[d1]) & set(fano.LINE_POINTS[d2])
            assert common <= set(fano.LINE_POINTS[d3])


def test_collineations_are_additive():
    group = fano.all_collineations()
    assert len(group) == 168
    for g in list(group)[:20]:
        assert fano.is_additive(g)
        for d in fano.LINES:
            img = {fano.apply(g, p) for p in fano.LINE_POINTS[d]}
            assert img == set(fano.LINE_POINTS[fano.line_image(g, d)])


def test_compose_inverse_order():
    a, b = fano.standard_generators()
    assert fano.order(a) == 2
    assert fano.order(b) == 3
    assert fano.compose(a, fano.inverse(a)) == fano.IDENTITY
    assert fano.compose(a, b) == fano.TAU
    assert fano.order(fano.TAU) == 7


def test_orientation_types():
    types = {fano.orientation_type(g)
             for g in fano.all_collineations() if fano.order(g) == 7}
    assert types == {(0, 1, 3), (0, 2, 3)}
    assert fano.orientation_type(fano.TAU) == (0, 1, 3)


def test_legendre7():
    assert [fano.legendre7(n) for n in range(1, 7)] == [1, 1, -1, 1, -1, -1]
    assert fano.legendre7(-3) == fano.legendre7(4)
    with pytest.raises(ValueError):
        fano.legendre7(0)


def test_minimal_polynomial_tags():
    tags = {fano.order7_minimal_polynomial(g)
            for g in fano.all_collineations() if fano.order(g) == 7}
    assert len(tags) == 2


def test_triangles():
    tris = fano.all_triangles()
    assert len(tris) == 28
    for t in tris:
        assert not fano.is_line(t)


def test_serialize_roundtrip():
    for g in list(fano.all_collineations())[:10]:
        assert fano.deserialize(fano.serialize(g)) == g


def test_conjugacy_class_sizes():
    sizes = set()
    seen = set()
    for g in fano.all_collineations():
        if g in seen:
            continue
        c = fano.conjugacy_class(g)
        seen |= c
        sizes.add((fano.order(g), len(c)))
    assert sizes == {(1, 1), (2, 21), (3, 56), (4, 42), (7, 24)}
