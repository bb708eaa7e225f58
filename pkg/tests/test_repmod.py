import itertools
import math
import random

import pytest

from quiverpurity.exactlin import GF, Mat
from quiverpurity.quiver import kronecker
from quiverpurity.randgen import random_rep, random_ses
from quiverpurity.repmod import (
    LEFT,
    RIGHT,
    ModuleMap,
    direct_sum,
    dual,
    free_module,
    gen_rel,
    hom_basis,
    hom_dim,
    identity_map,
    projective,
    ses_validate,
    tensor,
    zero_map,
)
from quiverpurity.decomp import is_isomorphic

Q = kronecker()
F2 = GF(2)


def all_mats(r, c):
    for bits in itertools.product((0, 1), repeat=r * c):
        yield Mat.from_rows(F2, [bits[i * c:(i + 1) * c] for i in range(r)], r, c)


def brute_hom_count(m, n):
    """Number of commuting vertex-map tuples, by enumeration over GF(2)."""
    count = 0
    for comps in itertools.product(*[list(all_mats(n.dims[v], m.dims[v])) for v in range(2)]):
        if all(comps[a.target] @ ma == na @ comps[a.source]
               for a, ma, na in zip(m.wq.arrows, m.mats, n.mats)):
            count += 1
    return count


def test_hom_dim_against_enumeration():
    rng = random.Random(4)
    for _ in range(25):
        m = random_rep(Q, F2, [rng.randint(0, 2), rng.randint(0, 2)], rng)
        n = random_rep(Q, F2, [rng.randint(0, 2), rng.randint(0, 2)], rng)
        assert 2 ** hom_dim(m, n) == brute_hom_count(m, n)


def test_hom_basis_elements_are_maps():
    rng = random.Random(5)
    f = GF(3)
    for _ in range(20):
        m = random_rep(Q, f, [2, 2], rng)
        n = random_rep(Q, f, [2, 3], rng)
        basis = hom_basis(m, n)
        assert len(basis) == hom_dim(m, n)
        for h in basis:
            ModuleMap(m, n, h.comps)  # checks commutation


@pytest.mark.parametrize("side", [LEFT, RIGHT])
def test_projectives_represent_vertices(side):
    rng = random.Random(6)
    f = GF(5)
    for _ in range(20):
        m = random_rep(Q, f, [rng.randint(0, 3), rng.randint(0, 3)], rng, side)
        for v in range(2):
            assert hom_dim(projective(Q, f, v, side), m) == m.dims[v]


def test_projective_dimension_vectors():
    f = GF(5)
    assert projective(Q, f, 0).dims == (1, 0)
    assert projective(Q, f, 1).dims == (2, 1)
    assert free_module(Q, f, 2).dims == (6, 2)
    assert {projective(Q, f, v, RIGHT).dims for v in range(2)} == {(1, 2), (0, 1)}


def test_adjunction_identity():
    rng = random.Random(7)
    for _ in range(50):
        f = rng.choice([GF(2), GF(3)])
        w = random_rep(Q, f, [rng.randint(0, 3), rng.randint(0, 3)], rng, RIGHT)
        a = random_rep(Q, f, [rng.randint(0, 3), rng.randint(0, 3)], rng, LEFT)
        assert hom_dim(a, dual(w)) == tensor(w, a).dim


def test_tensor_with_regular_is_identity():
    rng = random.Random(8)
    f = GF(5)
    for _ in range(10):
        a = random_rep(Q, f, [rng.randint(0, 3), rng.randint(0, 3)], rng)
        assert tensor(free_module(Q, f, 1, RIGHT), a).dim == a.total


def test_double_dual():
    rng = random.Random(9)
    m = random_rep(Q, GF(7), [2, 3], rng)
    assert dual(m).side == RIGHT
    assert is_isomorphic(dual(dual(m)), m)


def test_gen_rel_of_small_modules():
    f = GF(5)
    assert gen_rel(free_module(Q, f, 1)) == (1, 0, 2, 0)
    # a simple projective needs one relation to kill the other summand of R
    assert gen_rel(projective(Q, f, 0))[:2] == (1, 1)
    assert gen_rel(projective(Q, f, 1))[:2] == (1, 1)


def test_ses_validation():
    rng = random.Random(10)
    f = GF(3)
    for _ in range(20):
        s = random_ses(Q, f, rng, 4)
        assert s.a.total + s.c.total == s.b.total
    m = random_rep(Q, f, [1, 1], rng)
    bad = ses_validate(identity_map(m), identity_map(m))
    assert not bad
    assert bad.reason


def test_direct_sum_maps():
    rng = random.Random(11)
    f = GF(5)
    a = random_rep(Q, f, [1, 2], rng)
    b = random_rep(Q, f, [2, 1], rng)
    s, incs, projs = direct_sum(a, b)
    assert (projs[0] @ incs[0]) == identity_map(a)
    assert (projs[1] @ incs[0]) == zero_map(a, b)
    assert math.prod(s.dims) == 9
