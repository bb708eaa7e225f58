import random

import pytest

from quiverpurity.exactlin import GF
from quiverpurity.kronecker import I, P, R, elem, points
from quiverpurity.purity import (
    METHODS,
    MatrixSet,
    ShapeFamily,
    implies,
    ind_of_shape,
    ind_set,
    is_pure,
)
from quiverpurity.quiver import Quiver, kronecker, parse_matrix
from quiverpurity.randgen import random_algebra_matrix, random_ses

Q = kronecker()
F = GF(5)


def one(text, f=F):
    return parse_matrix(["matrix 1 1", text], Q, f, 1)


def test_split_sequences_are_pure_for_every_method():
    rng = random.Random(1)
    for _ in range(30):
        s = random_ses(Q, F, rng, 4, split=True)
        hs = [random_algebra_matrix(Q, F, rng.randint(1, 3), rng.randint(1, 3), rng) for _ in range(2)]
        rep = is_pure(s, hs, METHODS)
        assert rep.verdict == "pure"
        assert rep.witness is None


def test_methods_agree_on_random_instances():
    rng = random.Random(2)
    verdicts = set()
    for _ in range(120):
        f = rng.choice([GF(2), GF(3), GF(5)])
        s = random_ses(Q, f, rng, 4)
        hs = [random_algebra_matrix(Q, f, rng.randint(1, 3), rng.randint(1, 3), rng)
              for _ in range(rng.randint(1, 3))]
        rep = is_pure(s, hs, METHODS)
        assert rep.agree
        verdicts.add(rep.verdict)
    assert verdicts == {"pure", "impure"}


def test_impure_sequence_reports_a_witness():
    rng = random.Random(3)
    for _ in range(200):
        s = random_ses(Q, F, rng, 4, split=False)
        rep = is_pure(s, [one("e1+e2"), one("a")], ("hom", "tensor"))
        if rep.verdict == "impure":
            # the unit matrix gives L = 0, which never detects impurity
            assert rep.witness == 1
            assert "witness=H#2" in rep.lines()
            return
    pytest.fail("no impure sequence found")


def test_empty_matrix_set_is_always_pure():
    rng = random.Random(4)
    s = random_ses(Q, F, rng, 4, split=False)
    assert is_pure(s, MatrixSet([]), METHODS).verdict == "pure"


def test_unknown_method():
    rng = random.Random(5)
    with pytest.raises(ValueError):
        is_pure(random_ses(Q, F, rng), [one("a")], ("nope",))


def test_shape_family_text():
    assert str(ShapeFamily.parse("aleph0,1")) == "(aleph0,1)"
    assert ShapeFamily.parse("2,3") == ShapeFamily(2, 3)
    with pytest.raises(ValueError):
        ShapeFamily.parse("0,1")


def test_ind_of_shape_members():
    c = ind_of_shape(ShapeFamily(None, 2), F)
    for d in [P(0), P(1), P(2), I(0), I(1), R(elem(3), 2)]:
        assert d in c
    for d in [P(3), I(2), R(elem(3), 3)]:
        assert d not in c
    s4 = ind_of_shape(ShapeFamily(1, 1), F)
    assert sorted(s4.enumerate()) == sorted([P(0), P(1)] + [R(pt) for pt in points(F)])
    with pytest.raises(ValueError):
        ind_of_shape(ShapeFamily(2, 1), F)
    with pytest.raises(ValueError):
        ind_of_shape(ShapeFamily(1, None), F)


def test_ind_set_of_matrices():
    assert ind_set([one("a+2*b")]) == [P(0), R(elem(2))]
    assert ind_set(MatrixSet([])) == [P(0), P(1)]


def test_implies_with_witnesses():
    s4 = [one(f"a+{mu}*b") for mu in range(5)] + [one("b")]
    res = implies(s4, ShapeFamily(None, 1), F)
    assert not res and str(res.witness) == "I0"
    assert implies(ShapeFamily(None, 1), s4, F)
    assert implies(ShapeFamily(None, 2), ShapeFamily(None, 1), F)
    assert not implies(ShapeFamily(None, 1), ShapeFamily(None, 2), F)
    # projectives are free: the unit matrix implies nothing beyond projective purity
    assert implies([one("a")], [one("e1+e2")])


def test_implies_on_another_quiver():
    q3 = Quiver.from_spec(3, [("x", 1, 2), ("y", 2, 3)])
    f = GF(3)
    h = parse_matrix(["matrix 1 1", "x"], q3, f, 1)
    h2 = parse_matrix(["matrix 1 1", "y"], q3, f, 1)
    assert implies([h], [h])
    # L_(x) = P3 + P2 + S1 while L_(y) has the simple S2 as a summand
    res = implies([h], [h2])
    assert not res and res.witness.dims == (0, 1, 0)
    assert not implies([h2], [h])
