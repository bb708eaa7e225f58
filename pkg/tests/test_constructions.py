import random

import pytest

from quiverpurity.constructions import (
    ar_translate,
    construct_D,
    construct_L,
    minimal_presentation,
    presentation_matrix,
    transpose,
)
from quiverpurity.decomp import decompose, is_isomorphic
from quiverpurity.exactlin import GF, Mat, rank
from quiverpurity.kronecker import INF, I, P, R, classify, elem, make, points
from quiverpurity.quiver import AlgebraElement, AlgebraMatrix, kronecker, parse_matrix
from quiverpurity.randgen import random_algebra_matrix, random_conjugate, random_rep
from quiverpurity.repmod import LEFT, RIGHT, gen_rel, projective

Q = kronecker()
F = GF(5)


def one(text, f=F):
    return parse_matrix(["matrix 1 1", text], Q, f, 1)


def summands(m):
    out = []
    for rep, k in decompose(m).classes:
        out += [classify(rep)] * k
    return sorted(out)


def l_dim_oracle(h):
    """dim R^m minus the span of all p e_i H, computed from path coordinates."""
    paths = list(Q.paths)
    vecs = []
    for i in range(h.n):
        for p in paths:
            vec = [0] * (len(paths) * h.m)
            for j in range(h.m):
                for path, c in (AlgebraElement.path(Q, h.field, p) * h[i, j]).terms:
                    k = j * len(paths) + paths.index(path)
                    vec[k] = h.field(vec[k] + c)
            vecs.append(vec)
    span = rank(Mat.from_rows(h.field, vecs, len(vecs), len(paths) * h.m)) if vecs else 0
    return len(paths) * h.m - span


def test_l_dimension_matches_row_span():
    rng = random.Random(1)
    for _ in range(60):
        f = rng.choice([GF(2), GF(3), GF(5)])
        h = random_algebra_matrix(Q, f, rng.randint(1, 3), rng.randint(1, 3), rng)
        assert construct_L(h).total == l_dim_oracle(h)
        assert construct_L(h).side == LEFT
        assert construct_D(h).side == RIGHT


def test_zero_and_unit_matrices():
    z = AlgebraMatrix.zero(Q, F, 1, 2)
    assert construct_L(z).dims == (6, 2)  # R^2
    assert construct_L(one("e1+e2")).total == 0


def test_one_by_one_pencils():
    # L_(a + mu b) is R[-1/mu, 1] + P0
    for mu in range(1, 5):
        assert summands(construct_L(one(f"a+{mu}*b"))) == sorted([P(0), R(elem(F(-F.inv(mu))))])
    assert summands(construct_L(one("a"))) == [P(0), R(INF)]
    assert summands(construct_L(one("b"))) == [P(0), R(elem(0))]


def test_presentation_matrix_round_trip():
    rng = random.Random(2)
    for _ in range(40):
        f = rng.choice([GF(2), GF(3)])
        m = random_rep(Q, f, [rng.randint(0, 3), rng.randint(0, 3)], rng)
        h = presentation_matrix(m)
        g = gen_rel(m)
        assert h.shape == (g.rel, g.gen)
        assert is_isomorphic(construct_L(h), m)


def test_minimal_presentation_counts():
    m = make(I(2), F)
    pres = minimal_presentation(m)
    g = gen_rel(m)
    assert len(pres.gen_vertices) == g.Gen
    assert len(pres.rel_vertices) == g.Rel


def test_transpose_kills_projectives_and_is_involutive():
    for v in range(2):
        assert transpose(projective(Q, F, v)).total == 0
    rng = random.Random(3)
    for d in [I(0), I(1), P(2), P(3), R(elem(1), 2), R(INF, 1)]:
        m, _ = random_conjugate(make(d, F), rng)
        assert transpose(m).side == RIGHT
        assert is_isomorphic(transpose(transpose(m)), m)


@pytest.mark.parametrize("n", range(4))
def test_translate_shifts_preprojectives_and_preinjectives(n):
    assert classify(ar_translate(make(P(n + 2), F))) == P(n)
    assert classify(ar_translate(make(I(n), F))) == I(n + 2)


def test_translate_fixes_homogeneous_simples():
    for pt in points(F):
        assert classify(ar_translate(make(R(pt), F))) == R(pt)
    assert ar_translate(make(P(1), F)).total == 0
    assert ar_translate(make(P(0), F)).total == 0
