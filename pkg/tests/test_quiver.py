import random

import pytest

from quiverpurity.exactlin import GF
from quiverpurity.quiver import AlgebraElement, ParseError, Quiver, kronecker, parse_element, parse_matrix
from quiverpurity.randgen import random_element

F = GF(5)
Q = kronecker()


def el(text, q=Q):
    return parse_element(text, q, F)


def test_kronecker_paths():
    assert len(Q.paths) == 4
    assert {p.arrows for p in Q.paths_between(1, 0)} == {("a",), ("b",)}
    assert Q.paths_between(0, 1) == ()
    assert Q.is_kronecker()


def test_multiplication_composes_target_first():
    # a goes from vertex 2 to vertex 1, so a = e1 a e2
    assert el("e1") * el("a") == el("a")
    assert el("a") * el("e2") == el("a")
    assert (el("a") * el("e1")).is_zero()
    assert (el("a") * el("b")).is_zero()
    assert el("e1+e2") == AlgebraElement.one(Q, F)


def test_algebra_axioms():
    rng = random.Random(0)
    for _ in range(100):
        x, y, z = (random_element(Q, F, rng) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert AlgebraElement.one(Q, F) * x == x


def test_linear_quiver():
    q3 = Quiver.from_spec(3, [("x", 1, 2), ("y", 2, 3)])
    assert len(q3.paths) == 6  # three trivial, x, y, yx
    assert not q3.is_kronecker()
    assert q3.opposite().opposite().spec_text() == q3.spec_text()
    assert not (el("y", q3) * el("x", q3)).is_zero()


def test_parse_errors_have_lines():
    with pytest.raises(ParseError, match="unknown arrow"):
        el("a+c")
    with pytest.raises(ParseError, match="line 6"):
        parse_matrix(["matrix 2 2", "a, 0"], Q, F, 4)


def test_matrix_text_round_trip():
    h = parse_matrix(["matrix 2 2", "a+2*b, 0", "e1, b"], Q, F, 1)
    again = parse_matrix(h.to_text().split("\n"), Q, F, 1)
    assert again.entries == h.entries
    assert h.transpose().transpose().entries == h.entries
