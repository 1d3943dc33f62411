import json

from fanog2 import compfactor, fano, octonion
from fanog2.scalars import QI, QQ, PrimeField


def test_unit_and_basis():
    one = octonion.unit()
    x = octonion.from_ints((3, -1, 0, 2, 0, 0, 5, -4))
    assert octonion.mul(one, x) == x
    assert octonion.mul(x, one) == x
    for p in fano.POINTS:
        e = octonion.basis(p)
        assert octonion.mul(e, e) == octonion.scale(-1, one)


def test_collinear_products():
    # e1 e2 = e4, e5 e2 = e3, e7 e3 = -e1
    assert octonion.mul(octonion.basis(1), octonion.basis(2)) == octonion.basis(4)
    assert octonion.mul(octonion.basis(5), octonion.basis(2)) == octonion.basis(3)
    assert octonion.mul(octonion.basis(7), octonion.basis(3)) == octonion.scale(
        -1, octonion.basis(1)
    )


def test_anticommutation():
    for p in fano.POINTS:
        for q in fano.POINTS:
            if p == q:
                continue
            xy = octonion.mul(octonion.basis(p), octonion.basis(q))
            yx = octonion.mul(octonion.basis(q), octonion.basis(p))
            assert xy == octonion.scale(-1, yx)


def test_norm_and_bilinear():
    x = octonion.from_ints((1, 2, 3, 4, 5, 6, 7, 8))
    y = octonion.from_ints((8, 7, 6, 5, 4, 3, 2, 1))
    assert octonion.norm(x) == sum(v * v for v in (1, 2, 3, 4, 5, 6, 7, 8))
    assert octonion.bilinear(x, x) == octonion.norm(x)
    assert (
        octonion.norm(octonion.add(x, y))
        == octonion.norm(x) + 2 * octonion.bilinear(x, y) + octonion.norm(y)
    )
    assert octonion.norm(octonion.mul(x, y)) == octonion.norm(x) * octonion.norm(y)


def test_conjugation():
    assert octonion.conjugation_is_antiautomorphism()
    x = octonion.from_ints((2, 1, -1, 0, 3, 0, 0, 1))
    n = octonion.norm(x)
    prod = octonion.mul(x, octonion.conjugate(x))
    assert prod == octonion.scale(n, octonion.unit())


def test_alternative_not_associative():
    assert octonion.is_alternative()
    x, y, z = octonion.basis(1), octonion.basis(2), octonion.basis(3)
    assert any(octonion.associator(x, y, z))


def test_clifford_property():
    for p in fano.POINTS:
        assert octonion.clifford_property(octonion.basis(p))
    assert octonion.clifford_property(octonion.from_ints((0, 1, 1, 0, -2, 0, 3, 0)))


def test_subalgebra_dimensions():
    assert len(octonion.subalgebra_generated([1])) == 2
    for d in fano.LINES:
        idx = octonion.quaternion_subalgebra(d)
        assert len(idx) == 4
        assert len(octonion.subalgebra_generated(sorted(set(idx) - {0}))) == 4
    assert len(octonion.subalgebra_generated([1, 2, 3])) == 8


def test_other_fields():
    f5 = PrimeField(5)
    x = tuple(f5.of(v) for v in (1, 2, 3, 4, 0, 1, 2, 3))
    y = tuple(f5.of(v) for v in (4, 0, 1, 3, 2, 2, 1, 0))
    assert octonion.norm(
        octonion.mul(x, y, compfactor.EPS_TAU, f5)
    ) == octonion.norm(x) * octonion.norm(y)
    i = QI.sqrt_minus_one()
    z = tuple(QI.of(0) for _ in range(7)) + (i,)
    assert octonion.norm(octonion.mul(z, z, compfactor.EPS_TAU, QI)) == QI.of(1)


def test_table_formats():
    t = octonion.table()
    assert len(t) == 7 and all(len(row) == 7 for row in t)
    assert all(t[i][i] == 0 for i in range(7))
    data = json.loads(octonion.table_json())
    assert len(data["table"]) == 7
    text = octonion.table_text()
    assert "e1" in text and len(text.splitlines()) == 8
