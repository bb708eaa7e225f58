import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from quiverpurity.exactlin import (
    GF,
    QQ,
    Mat,
    NoSolution,
    cokernel,
    image_basis,
    inverse,
    kernel_basis,
    preimage,
    rank,
    solve,
    span_contains,
)

F2 = GF(2)


def gf2_matrices(max_r=4, max_c=4):
    return st.integers(0, max_r).flatmap(
        lambda r: st.integers(0, max_c).flatmap(
            lambda c: st.lists(st.lists(st.integers(0, 1), min_size=c, max_size=c),
                               min_size=r, max_size=r).map(lambda rows: Mat.from_rows(F2, rows, r, c))))


def brute_image_size(a: Mat) -> int:
    seen = set()
    for bits in itertools.product((0, 1), repeat=a.cols):
        x = Mat.from_rows(F2, [[b] for b in bits], a.cols, 1)
        seen.add(tuple(v[0] for v in (a @ x).tolist()))
    return len(seen)


@settings(max_examples=60, deadline=None)
@given(gf2_matrices())
def test_rank_matches_brute_force_image(a):
    assert 2 ** rank(a) == brute_image_size(a)


@settings(max_examples=60, deadline=None)
@given(gf2_matrices())
def test_kernel_basis_is_kernel(a):
    k = kernel_basis(a)
    assert k.cols == a.cols - rank(a)
    assert (a @ k).is_zero()
    assert rank(k) == k.cols


@pytest.mark.parametrize("f", [GF(2), GF(5), QQ])
def test_solve_and_inverse(f):
    rng = random.Random(1)
    for _ in range(50):
        n = rng.randint(1, 5)
        g = Mat.random_invertible(f, n, rng)
        assert g @ inverse(g) == Mat.identity(f, n)
        b = Mat.random(f, n, 1, rng)
        sol = solve(g, b)
        assert g @ sol.particular == b
        assert sol.kernel.cols == 0


def test_solve_inconsistent():
    a = Mat.from_rows(GF(3), [[1, 1], [2, 2]])
    b = Mat.from_rows(GF(3), [[1], [0]])
    with pytest.raises(NoSolution):
        solve(a, b)


def test_rationals_are_exact():
    a = Mat.from_rows(QQ, [[Fraction(1, 3), 1], [1, 3]])
    assert rank(a) == 1
    b = Mat.from_rows(QQ, [[Fraction(1, 2), 1], [1, 3]])
    assert rank(b) == 2
    assert inverse(b) @ b == Mat.identity(QQ, 2)


def test_field_rules():
    assert GF(7)(-1) == 6
    assert GF(7).inv(3) == 5
    with pytest.raises(ValueError):
        GF(4)
    with pytest.raises(ZeroDivisionError):
        GF(5).inv(0)
    assert list(GF(3).elements()) == [0, 1, 2]


def test_cokernel_and_images():
    f = GF(5)
    rng = random.Random(2)
    for _ in range(30):
        a = Mat.random(f, rng.randint(0, 4), rng.randint(0, 4), rng)
        comp, proj = cokernel(a)
        assert proj.rows == a.rows - rank(a)
        assert (proj @ a).is_zero()
        im = image_basis(a)
        assert im.cols == rank(a)
        assert span_contains(im, a)


def test_preimage():
    f = GF(3)
    m = Mat.from_rows(f, [[1, 0, 0], [0, 1, 0]])
    u = Mat.from_rows(f, [[1], [0]])
    pre = preimage(m, u)
    # x with m x in span(e1): x2 = 0, x1 and x3 free
    assert pre.cols == 2
    assert span_contains(u, m @ pre)
