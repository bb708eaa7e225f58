"""Modules attached to matrices over the path algebra, transposes and AR translates.

Conventions: for an ``n x m`` matrix H, ``L_H = R^m / {x H : x in R^n}`` is a
left module and ``D_H = R^n / {H y : y in R^m}`` a right module.
"""

from __future__ import annotations

from typing import NamedTuple

from .exactlin import Mat
from .quiver import AlgebraElement, AlgebraMatrix, Path, Quiver
from .repmod import (
    LEFT,
    RIGHT,
    ModuleMap,
    Representation,
    dual,
    presented,
    top_and_cover,
    working_quiver,
)

__all__ = [
    "construct_L",
    "construct_D",
    "Presentation",
    "minimal_presentation",
    "transpose",
    "ar_translate",
    "presentation_matrix",
]


def _split_by_idempotents(h: AlgebraMatrix) -> tuple[list[list[AlgebraElement]], list[int], list[int]]:
    nv = h.quiver.num_vertices
    src = [v for _ in range(h.n) for v in range(nv)]
    tgt = [u for _ in range(h.m) for u in range(nv)]
    K = [[h[i, j].sandwich(v, u) for j in range(h.m) for u in range(nv)]
         for i in range(h.n) for v in range(nv)]
    return K, src, tgt


def _construct(h: AlgebraMatrix, side: str) -> Representation:
    """Cokernel of ``rho_h`` over h's own quiver, relabelled as a module of ``side``."""
    K, src, tgt = _split_by_idempotents(h)
    mod, _ = presented(h.quiver, h.field, LEFT, K, src, tgt)
    if side == LEFT:
        return mod
    return Representation(h.quiver.opposite(), h.field, RIGHT, mod.dims, mod.mats)


def construct_L(h: AlgebraMatrix) -> Representation:
    """The left module ``L_H``: m generators, one relation per row of H."""
    return _construct(h, LEFT)


def construct_D(h: AlgebraMatrix) -> Representation:
    """The right module ``D_H``: n generators, one relation per column of H."""
    return _construct(h.opposite(), RIGHT)


class Presentation(NamedTuple):
    """``sum P(rel_vertices) --rho_phi--> sum P(gen_vertices) -> M -> 0``.

    ``phi[g][k]`` lies in ``e_{rel_g} W e_{gen_k}`` for the working quiver W.
    """

    phi: tuple[tuple[AlgebraElement, ...], ...]
    gen_vertices: tuple[int, ...]
    rel_vertices: tuple[int, ...]
    quiver: Quiver  # working quiver


def minimal_presentation(m: Representation) -> Presentation:
    """Minimal projective presentation read off the projective cover.

    Over a hereditary algebra the syzygy is projective, so its own cover is
    an isomorphism and the composite gives the relation matrix.
    """
    f = m.field
    wq = m.wq
    cov = top_and_cover(m)
    syz_cov = top_and_cover(cov.syzygy)
    if syz_cov.syzygy.total:
        raise ArithmeticError("second syzygy is nonzero; algebra is not hereditary")
    phi_map = cov.inclusion @ syz_cov.cover  # P1 -> P0
    p0 = cov.cover.source
    gen_v = cov.generators
    rel_v = syz_cov.generators
    # basis of P0 at vertex u, in the order produced by repmod._ProjSum
    basis = _proj_basis(wq, gen_v)
    p1_basis = _proj_basis(wq, rel_v)
    phi = []
    for g, j in enumerate(rel_v):
        col = p1_basis[j].index((g, ()))
        vec = phi_map.comps[j].column(col)
        row: list[list] = [[] for _ in gen_v]
        for idx, (k, p) in enumerate(basis[j]):
            c = vec[idx, 0]
            if c != 0:
                row[k].append((Path(gen_v[k], j, p), c))
        phi.append(tuple(AlgebraElement(wq, f, terms) for terms in row))
    assert p0.dims == tuple(len(b) for b in basis)
    return Presentation(tuple(phi), tuple(gen_v), tuple(rel_v), wq)


def _proj_basis(wq: Quiver, vertices) -> list[list[tuple[int, tuple[str, ...]]]]:
    out: list[list[tuple[int, tuple[str, ...]]]] = [[] for _ in range(wq.num_vertices)]
    for k, v in enumerate(vertices):
        for u in range(wq.num_vertices):
            for p in wq.paths_between(v, u):
                out[u].append((k, p.arrows))
    return out


def transpose(m: Representation) -> Representation:
    """Auslander-Bridger transpose from the minimal presentation; lands on the other side."""
    pres = minimal_presentation(m)
    op = pres.quiver.opposite()
    # Hom(-, R) turns rho_phi into left multiplication by phi, i.e. rho over the
    # opposite algebra with the transposed, entrywise-opposite matrix.
    K = [[pres.phi[g][k].opposite() for g in range(len(pres.rel_vertices))]
         for k in range(len(pres.gen_vertices))]
    out, _ = presented(op, m.field, LEFT, K, pres.gen_vertices, pres.rel_vertices)
    side = RIGHT if m.side == LEFT else LEFT
    return Representation(m.quiver, m.field, side, out.dims, out.mats)


def ar_translate(m: Representation) -> Representation:
    """``tau M = dual(Tr M)``."""
    return dual(transpose(m))


def presentation_matrix(m: Representation) -> AlgebraMatrix:
    """An ``rel(M) x gen(M)`` matrix H over the algebra with ``L_H`` isomorphic to M.

    Left modules only. The generators of ``R^gen(M)`` cover M through its
    projective cover; the rows generate the syzygy plus the unused
    projective complement, with rows at different vertices added together.
    """
    if m.side != LEFT:
        raise ValueError("presentation_matrix expects a left module")
    q, f = m.quiver, m.field
    pres = minimal_presentation(m)
    nv = q.num_vertices
    top = [pres.gen_vertices.count(v) for v in range(nv)]
    gen = max(top) if top else 0
    # copy index inside R^gen for each summand of P(M)
    seen = [0] * nv
    slot = []
    for v in pres.gen_vertices:
        slot.append(seen[v])
        seen[v] += 1
    zero = AlgebraElement.zero(q, f)
    # rows grouped by the vertex v with e_v row = row
    by_vertex: list[list[list[AlgebraElement]]] = [[] for _ in range(nv)]
    for g, j in enumerate(pres.rel_vertices):
        row = [zero] * gen
        for k, x in enumerate(pres.phi[g]):
            row[slot[k]] = row[slot[k]] + x
        by_vertex[j].append(row)
    for v in range(nv):
        for c in range(top[v], gen):
            row = [zero] * gen
            row[c] = AlgebraElement.idempotent(q, f, v)
            by_vertex[v].append(row)
    # e_v recovers each homogeneous piece of a sum, so one row per index suffices
    rows = []
    for i in range(max((len(b) for b in by_vertex), default=0)):
        row = [zero] * gen
        for b in by_vertex:
            if i < len(b):
                row = [x + y for x, y in zip(row, b[i])]
        rows.append(row)
    return AlgebraMatrix(q, f, rows, len(rows), gen)
