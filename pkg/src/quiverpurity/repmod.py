"""Finite-dimensional modules over path algebras as quiver representations.

A right kQ-module is stored as a left module over kQ^op, so every algorithm
below runs on left modules over the *working quiver* ``rep.wq``. The
``side`` tag and the algebra quiver are kept so that duals, tensor products
and transposes can flip between the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

import numpy as np

from .exactlin import Field, Mat, cokernel, image_basis, kernel_basis, rank, solve, span_contains
from .quiver import AlgebraElement, AlgebraMatrix, Path, Quiver

__all__ = [
    "LEFT",
    "RIGHT",
    "Representation",
    "ModuleMap",
    "ShortExact",
    "SesDiagnostic",
    "Cover",
    "GenRel",
    "TensorProduct",
    "working_quiver",
    "zero_module",
    "projective",
    "free_module",
    "projective_sum",
    "presented",
    "element_action",
    "matrix_action",
    "hom_basis",
    "hom_dim",
    "tensor",
    "tensor_map",
    "dual",
    "dual_map",
    "top_and_cover",
    "radical",
    "gen_rel",
    "subquotient",
    "ses_validate",
    "direct_sum",
    "conjugate",
    "identity_map",
    "zero_map",
]

LEFT = "left"
RIGHT = "right"


def working_quiver(q: Quiver, side: str) -> Quiver:
    if side == LEFT:
        return q
    if side == RIGHT:
        return q.opposite()
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def _flip(side: str) -> str:
    return RIGHT if side == LEFT else LEFT


class Representation:
    """A module given by one vector space per vertex and one matrix per arrow.

    ``mats[i]`` belongs to ``quiver.arrows[i]`` and maps the source space to
    the target space of that arrow *in the working quiver*.
    """

    __slots__ = ("quiver", "field", "side", "dims", "mats", "__dict__")

    def __init__(self, quiver: Quiver, fld: Field, side: str, dims: Sequence[int],
                 mats: Sequence[Mat] | dict[str, Mat] | None = None):
        wq = working_quiver(quiver, side)
        dims = tuple(int(d) for d in dims)
        if len(dims) != quiver.num_vertices or any(d < 0 for d in dims):
            raise ValueError(f"bad dimension vector {dims}")
        if mats is None:
            mats = {}
        if isinstance(mats, dict):
            unknown = set(mats) - {a.name for a in quiver.arrows}
            if unknown:
                raise ValueError(f"unknown arrows {sorted(unknown)}")
            mats = [mats.get(a.name) for a in wq.arrows]
        if len(mats) != len(wq.arrows):
            raise ValueError("one matrix per arrow is required")
        fixed = []
        for a, m in zip(wq.arrows, mats):
            shape = (dims[a.target], dims[a.source])
            if m is None:
                m = Mat.zeros(fld, *shape)
            if m.field != fld:
                raise ValueError(f"arrow {a.name}: field mismatch")
            if m.shape != shape:
                raise ValueError(f"arrow {a.name}: matrix shape {m.shape}, expected {shape}")
            fixed.append(m)
        self.quiver = quiver
        self.field = fld
        self.side = side
        self.dims = dims
        self.mats = tuple(fixed)

    @property
    def wq(self) -> Quiver:
        return working_quiver(self.quiver, self.side)

    @property
    def total(self) -> int:
        return sum(self.dims)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out, acc = [], 0
        for d in self.dims:
            out.append(acc)
            acc += d
        return tuple(out)

    def arrow(self, name: str) -> Mat:
        for a, m in zip(self.wq.arrows, self.mats):
            if a.name == name:
                return m
        raise KeyError(name)

    def path_matrix(self, p: Path) -> Mat:
        """Matrix of the path ``p`` (a path in the working quiver)."""
        cache = self.__dict__.setdefault("_pm", {})
        key = (p.source, p.arrows)
        if key not in cache:
            m = Mat.identity(self.field, self.dims[p.source])
            for name in reversed(p.arrows):
                m = self.arrow(name) @ m
            cache[key] = m
        return cache[key]

    def is_zero(self) -> bool:
        return self.total == 0

    def same_category(self, other: "Representation") -> bool:
        return (self.quiver == other.quiver and self.field == other.field
                and self.side == other.side)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Representation):
            return NotImplemented
        return self.same_category(other) and self.dims == other.dims and self.mats == other.mats

    def __hash__(self) -> int:
        return hash((self.quiver, self.field, self.side, self.dims, self.mats))

    def __repr__(self) -> str:
        return f"Representation({self.side}, dims={self.dims}, {self.field.short})"


def _require_same(m: Representation, n: Representation) -> None:
    if not m.same_category(n):
        raise ValueError("modules live over different quivers, fields or sides")


class ModuleMap:
    """A homomorphism given by one matrix per vertex."""

    __slots__ = ("source", "target", "comps")

    def __init__(self, source: Representation, target: Representation, comps: Sequence[Mat],
                 check: bool = True):
        _require_same(source, target)
        comps = tuple(comps)
        if len(comps) != len(source.dims):
            raise ValueError("one component per vertex is required")
        for v, c in enumerate(comps):
            if c.shape != (target.dims[v], source.dims[v]):
                raise ValueError(f"vertex {v + 1}: component shape {c.shape}")
        self.source = source
        self.target = target
        self.comps = comps
        if check:
            for a, ms, nt in zip(source.wq.arrows, source.mats, target.mats):
                if comps[a.target] @ ms != nt @ comps[a.source]:
                    raise ValueError(f"square for arrow {a.name} does not commute")

    def __matmul__(self, other: "ModuleMap") -> "ModuleMap":
        """Composition ``self o other``."""
        if other.target != self.source:
            raise ValueError("maps are not composable")
        return ModuleMap(other.source, self.target,
                         [a @ b for a, b in zip(self.comps, other.comps)], check=False)

    def __add__(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(self.source, self.target,
                         [a + b for a, b in zip(self.comps, other.comps)], check=False)

    def scale(self, c) -> "ModuleMap":
        return ModuleMap(self.source, self.target, [a.scale(c) for a in self.comps], check=False)

    def total(self) -> Mat:
        return Mat.block_diag(self.source.field, self.comps)

    def rank(self) -> int:
        return sum(rank(c) for c in self.comps)

    def is_injective(self) -> bool:
        return all(rank(c) == c.cols for c in self.comps)

    def is_surjective(self) -> bool:
        return all(rank(c) == c.rows for c in self.comps)

    def is_iso(self) -> bool:
        return all(c.rows == c.cols and rank(c) == c.rows for c in self.comps)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.comps)

    def power(self, k: int) -> "ModuleMap":
        return ModuleMap(self.source, self.target, [c ** k for c in self.comps], check=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleMap):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.comps == other.comps

    def __hash__(self) -> int:
        return hash(self.comps)


def identity_map(m: Representation) -> ModuleMap:
    return ModuleMap(m, m, [Mat.identity(m.field, d) for d in m.dims], check=False)


def zero_map(m: Representation, n: Representation) -> ModuleMap:
    return ModuleMap(m, n, [Mat.zeros(m.field, n.dims[v], m.dims[v]) for v in range(len(m.dims))],
                     check=False)


def zero_module(q: Quiver, f: Field, side: str = LEFT) -> Representation:
    return Representation(q, f, side, [0] * q.num_vertices)


# projectives and free modules ------------------------------------------


class _ProjSum:
    """Basis bookkeeping for ``P(v_0) + P(v_1) + ...`` over a working quiver."""

    def __init__(self, wq: Quiver, vertices: Sequence[int]):
        self.wq = wq
        self.vertices = tuple(vertices)
        self.basis: list[list[tuple[int, Path]]] = [[] for _ in range(wq.num_vertices)]
        for k, v in enumerate(self.vertices):
            for u in range(wq.num_vertices):
                for p in wq.paths_between(v, u):
                    self.basis[u].append((k, p))
        self.index = [{(k, p.arrows): i for i, (k, p) in enumerate(b)} for b in self.basis]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.basis)

    def module(self, q: Quiver, f: Field, side: str) -> Representation:
        mats = []
        for a in self.wq.arrows:
            arr = f.zeros_array(len(self.basis[a.target]), len(self.basis[a.source]))
            for col, (k, p) in enumerate(self.basis[a.source]):
                row = self.index[a.target][(k, (a.name,) + p.arrows)]
                arr[row, col] = f.one
            mats.append(Mat(f, arr, _trusted=True))
        return Representation(q, f, side, self.dims, mats)


def projective_sum(q: Quiver, f: Field, vertices: Sequence[int], side: str = LEFT) -> Representation:
    """``P(v_0) + P(v_1) + ...``; for right modules ``P(v) = e_v R``."""
    return _ProjSum(working_quiver(q, side), vertices).module(q, f, side)


def projective(q: Quiver, f: Field, v: int, side: str = LEFT) -> Representation:
    """Indecomposable projective at the 0-based vertex ``v``."""
    return projective_sum(q, f, [v], side)


def free_module(q: Quiver, f: Field, r: int, side: str = LEFT) -> Representation:
    """The free module of rank ``r``; each copy of R splits as the sum of all P(v)."""
    return projective_sum(q, f, list(range(q.num_vertices)) * r, side)


def _to_working(x: AlgebraElement, m_quiver: Quiver, side: str) -> AlgebraElement:
    wq = working_quiver(m_quiver, side)
    if x.quiver == wq and (side == LEFT or wq != m_quiver):
        return x
    if x.quiver == m_quiver:
        return x.opposite()
    raise ValueError("algebra element over a different quiver")


def presented(q: Quiver, f: Field, side: str, K: Sequence[Sequence[AlgebraElement]],
              src: Sequence[int], tgt: Sequence[int]) -> tuple[Representation, ModuleMap]:
    """Cokernel of the map ``sum_g P(src_g) -> sum_k P(tgt_k)`` sending generator g to ``sum_k K[g][k]``.

    ``K[g][k]`` must be an element of the working algebra lying in
    ``e_{src_g} R e_{tgt_k}``; entries outside that corner are cut down to it.
    Returns the cokernel and the projection from the target projective.
    """
    wq = working_quiver(q, side)
    s_sum = _ProjSum(wq, src)
    t_sum = _ProjSum(wq, tgt)
    source = s_sum.module(q, f, side)
    target = t_sum.module(q, f, side)
    comps = []
    for u in range(wq.num_vertices):
        arr = f.zeros_array(len(t_sum.basis[u]), len(s_sum.basis[u]))
        for col, (g, p) in enumerate(s_sum.basis[u]):
            row_k = K[g] if g < len(K) else ()
            for k, x in enumerate(row_k):
                for qp, c in x.terms:
                    if qp.target != src[g] or qp.source != tgt[k]:
                        continue
                    row = t_sum.index[u][(k, p.arrows + qp.arrows)]
                    arr[row, col] = f.reduce(arr[row, col] + c) if f.is_finite else arr[row, col] + c
        comps.append(Mat(f, arr, _trusted=True))
    phi = ModuleMap(source, target, comps, check=False)
    return subquotient(phi, "cokernel")


# actions -----------------------------------------------------------------


def element_action(x: AlgebraElement, m: Representation) -> Mat:
    """The k-linear endomorphism of the total space of ``m`` given by ``x``.

    For right modules this is ``v -> v.x``.
    """
    x = _to_working(x, m.quiver, m.side)
    f = m.field
    out = Mat.zeros(f, m.total, m.total)
    off = m.offsets
    for p, c in x.terms:
        pm = m.path_matrix(p)
        if pm.rows == 0 or pm.cols == 0:
            continue
        blk = out.block(off[p.target], off[p.target] + pm.rows, off[p.source], off[p.source] + pm.cols)
        out = out.with_block(off[p.target], off[p.source], blk + pm.scale(c))
    return out


def matrix_action(h: AlgebraMatrix, m: Representation) -> Mat:
    """Linear map of ``h`` on tuples of module elements.

    Left modules: ``M^m -> M^n``, ``x -> Hx``. Right modules: ``M^n -> M^m``,
    ``x -> xH`` (read as ``H^op`` acting from the left on kQ^op-modules).
    """
    if h.field != m.field:
        raise ValueError("field mismatch")
    if m.side == RIGHT:
        if h.quiver != m.quiver:
            raise ValueError("quiver mismatch")
        h = h.opposite()
    elif h.quiver != m.quiver:
        raise ValueError("quiver mismatch")
    n_rows, n_cols = h.shape
    t = m.total
    blocks = Mat.zeros(m.field, n_rows * t, n_cols * t)
    for i in range(n_rows):
        for j in range(n_cols):
            if h[i, j].is_zero():
                continue
            blocks = blocks.with_block(i * t, j * t, element_action(h[i, j], m))
    return blocks


# Hom ---------------------------------------------------------------------


def _hom_system(m: Representation, n: Representation) -> tuple[Mat, list[int]]:
    _require_same(m, n)
    f = m.field
    sizes = [n.dims[v] * m.dims[v] for v in range(len(m.dims))]
    offs = [sum(sizes[:v]) for v in range(len(sizes))]
    nunk = sum(sizes)
    blocks = []
    for a, ma, na in zip(m.wq.arrows, m.mats, n.mats):
        s, t = a.source, a.target
        rows = n.dims[t] * m.dims[s]
        if rows == 0:
            continue
        arr = f.zeros_array(rows, nunk)
        if sizes[t]:
            arr[:, offs[t] : offs[t] + sizes[t]] = np.kron(
                np.eye(n.dims[t], dtype=np.int64).astype(f.dtype) if f.is_finite else _eye_obj(n.dims[t]),
                ma.a.T)
        if sizes[s]:
            left = np.kron(na.a, np.eye(m.dims[s], dtype=np.int64).astype(f.dtype) if f.is_finite
                           else _eye_obj(m.dims[s]))
            arr[:, offs[s] : offs[s] + sizes[s]] = f.reduce(arr[:, offs[s] : offs[s] + sizes[s]] - left)
        blocks.append(Mat(f, f.reduce(arr), _trusted=True))
    system = Mat.vstack(f, blocks, cols=nunk)
    return system, offs


def _eye_obj(n: int) -> np.ndarray:
    from fractions import Fraction

    out = np.empty((n, n), dtype=object)
    out.fill(Fraction(0))
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def hom_dim(m: Representation, n: Representation) -> int:
    system, _ = _hom_system(m, n)
    return system.cols - rank(system)


def hom_basis(m: Representation, n: Representation) -> list[ModuleMap]:
    """A basis of Hom(m, n) over the ground field."""
    system, offs = _hom_system(m, n)
    ker = kernel_basis(system)
    out = []
    for j in range(ker.cols):
        col = ker.a[:, j]
        comps = []
        for v in range(len(m.dims)):
            size = n.dims[v] * m.dims[v]
            blk = col[offs[v] : offs[v] + size].reshape(n.dims[v], m.dims[v]).copy()
            comps.append(Mat(m.field, blk, _trusted=True))
        out.append(ModuleMap(m, n, comps, check=False))
    return out


# tensor products -----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class TensorProduct:
    """``W (x)_R V`` as a quotient of ``sum_v W_v (x) V_v``."""

    right: Representation
    left: Representation
    proj: Mat  # dim x ambient
    section: Mat  # ambient x dim

    @property
    def dim(self) -> int:
        return self.proj.rows


def tensor(w: Representation, v: Representation) -> TensorProduct:
    if w.side != RIGHT or v.side != LEFT:
        raise ValueError("tensor needs a right module and a left module")
    if w.quiver != v.quiver or w.field != v.field:
        raise ValueError("tensor factors over different algebras")
    f = v.field
    q = v.quiver
    sizes = [w.dims[i] * v.dims[i] for i in range(q.num_vertices)]
    offs = [sum(sizes[:i]) for i in range(len(sizes))]
    amb = sum(sizes)
    rels = []
    for a in q.arrows:
        s, t = a.source, a.target
        ncol = w.dims[t] * v.dims[s]
        if ncol == 0:
            continue
        arr = f.zeros_array(amb, ncol)
        wa = w.arrow(a.name)  # W_t -> W_s
        va = v.arrow(a.name)  # V_s -> V_t
        if sizes[s]:
            arr[offs[s] : offs[s] + sizes[s]] = wa.kron(Mat.identity(f, v.dims[s])).a
        if sizes[t]:
            blk = Mat.identity(f, w.dims[t]).kron(va).a
            arr[offs[t] : offs[t] + sizes[t]] = f.reduce(arr[offs[t] : offs[t] + sizes[t]] - blk)
        rels.append(Mat(f, arr, _trusted=True))
    relmat = Mat.hstack(f, rels, rows=amb)
    section, proj = cokernel(relmat)
    return TensorProduct(w, v, proj, section)


def tensor_map(src: TensorProduct, dst: TensorProduct, h: ModuleMap) -> Mat:
    """The map ``W (x) V -> W' (x) V'`` induced by ``h`` on one factor."""
    f = src.left.field
    if h.source == src.left and h.target == dst.left and src.right == dst.right:
        blocks = [Mat.identity(f, src.right.dims[i]).kron(h.comps[i]) for i in range(len(h.comps))]
    elif h.source == src.right and h.target == dst.right and src.left == dst.left:
        blocks = [h.comps[i].kron(Mat.identity(f, src.left.dims[i])) for i in range(len(h.comps))]
    else:
        raise ValueError("map does not connect the two tensor products")
    return dst.proj @ Mat.block_diag(f, blocks) @ src.section


# duality ---------------------------------------------------------------------


def dual(m: Representation) -> Representation:
    """k-linear dual: arrow matrices transposed and the side flipped."""
    return Representation(m.quiver, m.field, _flip(m.side), m.dims, [x.T for x in m.mats])


def dual_map(h: ModuleMap) -> ModuleMap:
    return ModuleMap(dual(h.target), dual(h.source), [c.T for c in h.comps], check=False)


# subquotients ------------------------------------------------------------------


def _coords(basis: Mat, vecs: Mat) -> Mat:
    return solve(basis, vecs).particular


def subquotient(h: ModuleMap, which: str) -> tuple[Representation, ModuleMap]:
    """Kernel, image or cokernel of ``h`` with its inclusion or projection."""
    src, tgt = h.source, h.target
    f = src.field
    wq = src.wq
    if which == "kernel":
        bases = [kernel_basis(c) for c in h.comps]
        mats = [_coords(bases[a.target], ma @ bases[a.source]) for a, ma in zip(wq.arrows, src.mats)]
        sub = Representation(src.quiver, f, src.side, [b.cols for b in bases], mats)
        return sub, ModuleMap(sub, src, bases, check=False)
    if which == "image":
        bases = [image_basis(c) for c in h.comps]
        mats = [_coords(bases[a.target], na @ bases[a.source]) for a, na in zip(wq.arrows, tgt.mats)]
        sub = Representation(src.quiver, f, src.side, [b.cols for b in bases], mats)
        return sub, ModuleMap(sub, tgt, bases, check=False)
    if which == "cokernel":
        pairs = [cokernel(c) for c in h.comps]
        mats = [pairs[a.target][1] @ na @ pairs[a.source][0] for a, na in zip(wq.arrows, tgt.mats)]
        quo = Representation(src.quiver, f, src.side, [p[1].rows for p in pairs], mats)
        return quo, ModuleMap(tgt, quo, [p[1] for p in pairs], check=False)
    raise ValueError(f"unknown subquotient {which!r}")


def submodule_generated(m: Representation, gens: Sequence[tuple[int, Mat]]) -> tuple[Representation, ModuleMap]:
    """Smallest submodule containing the given (vertex, column-vectors) pairs."""
    f = m.field
    spans = [Mat.zeros(f, d, 0) for d in m.dims]
    for v, vecs in gens:
        spans[v] = Mat.hstack(f, [spans[v], vecs])
    changed = True
    spans = [image_basis(s) for s in spans]
    while changed:
        changed = False
        for a, ma in zip(m.wq.arrows, m.mats):
            if spans[a.source].cols == 0:
                continue
            img = ma @ spans[a.source]
            if not span_contains(spans[a.target], img):
                spans[a.target] = image_basis(Mat.hstack(f, [spans[a.target], img]))
                changed = True
    mats = [_coords(spans[a.target], ma @ spans[a.source]) for a, ma in zip(m.wq.arrows, m.mats)]
    sub = Representation(m.quiver, f, m.side, [s.cols for s in spans], mats)
    incl = ModuleMap(sub, m, spans, check=False)
    return sub, incl


# direct sums and conjugation -------------------------------------------------


def direct_sum(*mods: Representation) -> tuple[Representation, list[ModuleMap], list[ModuleMap]]:
    """Direct sum with its inclusions and projections."""
    if not mods:
        raise ValueError("direct sum of nothing; use zero_module")
    first = mods[0]
    for x in mods[1:]:
        _require_same(first, x)
    f = first.field
    dims = [sum(x.dims[v] for x in mods) for v in range(len(first.dims))]
    mats = [Mat.block_diag(f, [x.mats[i] for x in mods]) for i in range(len(first.mats))]
    total = Representation(first.quiver, f, first.side, dims, mats)
    incs, projs = [], []
    starts = [0] * len(dims)
    for x in mods:
        comps_i, comps_p = [], []
        for v in range(len(dims)):
            e = Mat.zeros(f, dims[v], x.dims[v])
            e = e.with_block(starts[v], 0, Mat.identity(f, x.dims[v]))
            comps_i.append(e)
            comps_p.append(e.T)
            starts[v] += x.dims[v]
        incs.append(ModuleMap(x, total, comps_i, check=False))
        projs.append(ModuleMap(total, x, comps_p, check=False))
    return total, incs, projs


def conjugate(m: Representation, gs: Sequence[Mat]) -> tuple[Representation, ModuleMap]:
    """Transport ``m`` along invertible vertex maps ``gs``; returns the copy and the isomorphism."""
    from .exactlin import inverse

    invs = [inverse(g) for g in gs]
    mats = [gs[a.target] @ ma @ invs[a.source] for a, ma in zip(m.wq.arrows, m.mats)]
    out = Representation(m.quiver, m.field, m.side, m.dims, mats)
    return out, ModuleMap(m, out, gs, check=False)


# radical, top, covers ------------------------------------------------------------


def radical(m: Representation) -> list[Mat]:
    """Basis of ``rad m`` at each vertex: the span of all incoming arrow images."""
    f = m.field
    out = []
    for v in range(len(m.dims)):
        ims = [ma for a, ma in zip(m.wq.arrows, m.mats) if a.target == v and ma.cols]
        out.append(image_basis(Mat.hstack(f, ims, rows=m.dims[v])) if ims
                   else Mat.zeros(f, m.dims[v], 0))
    return out


class Cover(NamedTuple):
    top: tuple[int, ...]
    cover: ModuleMap  # P(M) -> M
    syzygy: Representation
    inclusion: ModuleMap  # syzygy -> P(M)
    generators: tuple[int, ...]  # vertex of each summand of P(M)


def top_and_cover(m: Representation) -> Cover:
    """Top multiplicities, projective cover and first syzygy."""
    f = m.field
    wq = m.wq
    rad = radical(m)
    gens = []
    vertices = []
    top = []
    for v in range(len(m.dims)):
        comp, _ = cokernel(rad[v])
        top.append(comp.cols)
        for j in range(comp.cols):
            gens.append(comp.column(j))
            vertices.append(v)
    psum = _ProjSum(wq, vertices)
    pm = psum.module(m.quiver, f, m.side)
    comps = []
    for u in range(len(m.dims)):
        cols = [m.path_matrix(p) @ gens[k] for k, p in psum.basis[u]]
        comps.append(Mat.hstack(f, cols, rows=m.dims[u]))
    cov = ModuleMap(pm, m, comps, check=False)
    syz, inc = subquotient(cov, "kernel")
    prad = radical(pm)
    for v in range(len(m.dims)):
        assert span_contains(prad[v], inc.comps[v]), "syzygy not superfluous"
    return Cover(tuple(top), cov, syz, inc, tuple(vertices))


class GenRel(NamedTuple):
    gen: int
    rel: int
    Gen: int
    Rel: int


def gen_rel(m: Representation) -> GenRel:
    """Minimal generator/relation counts (free and Warfield versions)."""
    cov = top_and_cover(m)
    t = cov.top
    gen = max(t) if t else 0
    top_syz = top_and_cover(cov.syzygy).top
    # R^gen = P(M) + Q with Q = sum_i P(i)^(gen - t_i); rel = gen(syzygy + Q)
    rel = max((s + gen - ti for s, ti in zip(top_syz, t)), default=0) if gen else 0
    return GenRel(gen, rel, sum(t), sum(top_syz))


# short exact sequences ---------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ShortExact:
    f: ModuleMap
    g: ModuleMap

    @property
    def a(self) -> Representation:
        return self.f.source

    @property
    def b(self) -> Representation:
        return self.f.target

    @property
    def c(self) -> Representation:
        return self.g.target

    def dual(self) -> "ShortExact":
        """``0 -> C* -> B* -> A* -> 0``."""
        return ShortExact(dual_map(self.g), dual_map(self.f))


@dataclass(frozen=True)
class SesDiagnostic:
    reason: str  # not-composable | not-injective | not-surjective | homology-nonzero
    detail: str = ""

    def __bool__(self) -> bool:
        return False


def ses_validate(f: ModuleMap, g: ModuleMap) -> ShortExact | SesDiagnostic:
    if f.target != g.source:
        return SesDiagnostic("not-composable", "target of f differs from source of g")
    for v, c in enumerate(f.comps):
        if rank(c) != c.cols:
            return SesDiagnostic("not-injective", f"f fails to be injective at vertex {v + 1}")
    for v, c in enumerate(g.comps):
        if rank(c) != c.rows:
            return SesDiagnostic("not-surjective", f"g fails to be surjective at vertex {v + 1}")
    for v, (cf, cg) in enumerate(zip(f.comps, g.comps)):
        if not (cg @ cf).is_zero() or cf.rows != cf.cols + cg.rows:
            return SesDiagnostic("homology-nonzero", f"im f != ker g at vertex {v + 1}")
    return ShortExact(f, g)
