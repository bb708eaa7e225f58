import random
from collections import Counter

from quiverpurity.decomp import decompose, find_isomorphism, is_isomorphic, is_local_probe
from quiverpurity.exactlin import GF
from quiverpurity.kronecker import INF, I, P, R, classify, elem, make
from quiverpurity.quiver import Quiver, kronecker
from quiverpurity.randgen import random_conjugate, random_rep
from quiverpurity.repmod import RIGHT, direct_sum, free_module, hom_dim

Q = kronecker()


def test_regular_module_splits_into_projectives():
    f = GF(5)
    dec = decompose(free_module(Q, f, 1))
    assert dec.verify()
    assert sorted(classify(p) for p in dec.pieces) == [P(0), P(1)]
    right = decompose(free_module(Q, f, 2, RIGHT))
    assert sorted(p.dims for p in right.pieces) == [(0, 1), (0, 1), (1, 2), (1, 2)]


def test_known_sums_are_recovered_over_gf2():
    rng = random.Random(3)
    f = GF(2)
    pool = [P(0), P(1), P(2), I(0), I(1), I(2), R(elem(0)), R(elem(1)), R(INF), R(elem(1), 2)]
    for _ in range(40):
        ds = [rng.choice(pool) for _ in range(rng.randint(1, 3))]
        m, _ = random_conjugate(direct_sum(*[make(d, f) for d in ds])[0], rng)
        dec = decompose(m, 0)
        assert dec.verify()
        got = Counter()
        for rep, k in dec.classes:
            got[classify(rep)] += k
        assert got == Counter(ds)


def test_pieces_are_local():
    rng = random.Random(4)
    f = GF(3)
    m = direct_sum(make(R(elem(2), 2), f), make(P(1), f), make(I(1), f))[0]
    for piece in decompose(random_conjugate(m, rng)[0]).pieces:
        assert is_local_probe(piece)
    assert not is_local_probe(m)


def test_isomorphism_search_returns_an_isomorphism():
    rng = random.Random(5)
    f = GF(5)
    m = make(R(elem(3), 2), f)
    n, _ = random_conjugate(m, rng)
    iso = find_isomorphism(m, n)
    assert iso is not None and iso.is_iso()
    assert not is_isomorphic(make(R(elem(3)), f), make(R(elem(2)), f))
    assert not is_isomorphic(make(R(elem(3), 2), f), direct_sum(make(R(elem(3)), f), make(R(elem(3)), f))[0])


def test_non_kronecker_quiver():
    q3 = Quiver.from_spec(3, [("x", 1, 2), ("y", 2, 3)])
    f = GF(3)
    dec = decompose(free_module(q3, f, 1))
    assert dec.verify()
    assert sorted(p.total for p in dec.pieces) == [1, 2, 3]
    rng = random.Random(6)
    for _ in range(10):
        m = random_rep(q3, f, [rng.randint(0, 2) for _ in range(3)], rng)
        if m.total:
            dec = decompose(m)
            assert dec.verify()
            assert all(hom_dim(p, p) >= 1 for p in dec.pieces)


def test_decompose_is_deterministic():
    rng = random.Random(7)
    f = GF(3)
    m, _ = random_conjugate(direct_sum(make(P(2), f), make(R(elem(1)), f), make(I(0), f))[0], rng)
    a, b = decompose(m, 11), decompose(m, 11)
    assert [p.mats for p in a.pieces] == [p.mats for p in b.pieces]
