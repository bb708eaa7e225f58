import random

import pytest

from quiverpurity.exactlin import GF, QQ
from quiverpurity.kronecker import (
    GENERIC,
    INF,
    ClassifyError,
    I,
    P,
    R,
    classify,
    defect,
    elem,
    make,
    parse_descriptor,
    parse_point,
    points,
)
from quiverpurity.quiver import ParseError
from quiverpurity.randgen import random_conjugate
from quiverpurity.repmod import direct_sum, hom_dim


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_round_trip_under_conjugation(p):
    f = GF(p)
    rng = random.Random(p)
    for n in range(5):
        ds = [P(n), I(n)] + ([R(pt, n) for pt in points(f, 2)] if n else [])
        for d in ds:
            m, _ = random_conjugate(make(d, f), rng)
            assert classify(m) == d
            assert m.dims == d.dims


def test_dimension_vectors_and_defect():
    f = GF(5)
    assert make(P(2), f).dims == (3, 2)
    assert make(I(2), f).dims == (2, 3)
    assert defect(make(P(2), f)) == -1
    assert defect(make(I(0), f)) == 1
    assert defect(make(R(INF, 3), f)) == 0


def test_points_of_the_line():
    assert len(points(GF(5))) == 6
    # (9 - 3) / 2 = 3 monic irreducible quadratics over GF(3)
    assert len(points(GF(3), 2)) == 4 + 3
    pt = parse_point("x^2+1", GF(3))
    assert pt.degree == 2
    assert make(R(pt, 2), GF(3)).dims == (4, 4)
    with pytest.raises(ValueError):
        parse_point("x^2+1", GF(5))  # reducible
    with pytest.raises(ValueError):
        parse_point("2*x^2+1", GF(3))  # not monic


def test_decomposables_are_rejected():
    f = GF(5)
    rng = random.Random(1)
    for parts in ([R(elem(1)), R(elem(1))], [R(elem(1)), R(elem(2))], [P(1), P(0)], [I(0), R(INF)]):
        m, _ = random_conjugate(direct_sum(*[make(d, f) for d in parts])[0], rng)
        with pytest.raises(ClassifyError):
            classify(m)


def test_regular_homs_are_bricks():
    f = GF(5)
    for x in points(f):
        for y in points(f):
            assert hom_dim(make(R(x), f), make(R(y), f)) == (1 if x == y else 0)


def test_descriptor_text():
    f = GF(5)
    for text in ["P3", "I0", "R[2,1]", "R[inf,4]", "prufer[0]", "adic[inf]", "generic", "R[x^2+2,1]"]:
        assert str(parse_descriptor(text, f)) == text
    assert parse_descriptor("generic", f) == GENERIC
    with pytest.raises(ParseError):
        parse_descriptor("Q3", f, 7)
    with pytest.raises(ValueError):
        make(GENERIC, f)


def test_rational_field():
    m = make(R(elem(QQ.parse("1/2")), 2), QQ)
    assert classify(m) == R(elem(QQ.parse("1/2")), 2)
