"""Seeded random representations, sequences and algebra matrices for property checks."""

from __future__ import annotations

import random

from .exactlin import Field, Mat, inverse
from .quiver import AlgebraElement, AlgebraMatrix, Quiver
from .repmod import (
    LEFT,
    ModuleMap,
    Representation,
    ShortExact,
    conjugate,
    direct_sum,
    ses_validate,
    subquotient,
    submodule_generated,
    working_quiver,
)


def random_dims(q: Quiver, rng: random.Random, max_dim: int) -> list[int]:
    return [rng.randint(0, max_dim) for _ in range(q.num_vertices)]


def random_rep(q: Quiver, f: Field, dims, rng: random.Random, side: str = LEFT) -> Representation:
    wq = working_quiver(q, side)
    mats = [Mat.random(f, dims[a.target], dims[a.source], rng) for a in wq.arrows]
    return Representation(q, f, side, dims, mats)


def random_conjugate(m: Representation, rng: random.Random) -> tuple[Representation, ModuleMap]:
    gs = [Mat.random_invertible(m.field, d, rng) for d in m.dims]
    return conjugate(m, gs)


def random_ses(q: Quiver, f: Field, rng: random.Random, max_dim: int = 5,
               split: bool | None = None) -> ShortExact:
    """A random short exact sequence of left modules with dim B at most ``max_dim`` per vertex.

    Non-split draws take the submodule of a random B generated by a few
    random vectors; split draws conjugate ``A + C``.
    """
    if split is None:
        split = rng.random() < 0.3
    if split:
        da = [rng.randint(0, max_dim // 2) for _ in range(q.num_vertices)]
        dc = [rng.randint(0, max_dim - x) for x in da]
        a, c = random_rep(q, f, da, rng), random_rep(q, f, dc, rng)
        b, (ia, _), (_, pc) = _split(a, c)
        b2, iso = random_conjugate(b, rng)
        inv = ModuleMap(b2, b, [inverse(g) for g in iso.comps], check=False)
        s = ses_validate(iso @ ia, pc @ inv)
    else:
        b = random_rep(q, f, random_dims(q, rng, max_dim), rng)
        gens = []
        for _ in range(rng.randint(0, 2)):
            v = rng.randrange(q.num_vertices)
            if b.dims[v]:
                gens.append((v, Mat.random(f, b.dims[v], 1, rng)))
        a, inc = submodule_generated(b, gens)
        c, proj = subquotient(inc, "cokernel")
        s = ses_validate(inc, proj)
    assert s, s
    return s


def _split(a: Representation, c: Representation):
    b, incs, projs = direct_sum(a, c)
    return b, (incs[0], projs[0]), (incs[1], projs[1])


def random_element(q: Quiver, f: Field, rng: random.Random, density: float = 0.5) -> AlgebraElement:
    terms = [(p, f.random(rng)) for p in q.paths if rng.random() < density]
    return AlgebraElement(q, f, terms)


def random_algebra_matrix(q: Quiver, f: Field, n: int, m: int, rng: random.Random,
                          density: float = 0.5) -> AlgebraMatrix:
    rows = [[random_element(q, f, rng, density) for _ in range(m)] for _ in range(n)]
    return AlgebraMatrix(q, f, rows, n, m)
