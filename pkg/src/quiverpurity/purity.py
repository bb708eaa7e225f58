"""Relative purity of short exact sequences, and comparison of purities.

For a matrix H (n x m) and a sequence 0 -> A -f-> B -g-> C -> 0 of left
modules, each method below decides whether the sequence is L_H-pure:

* ``hom``: Hom(L_H, -) stays exact, by dimension count.
* ``eq2``: every a in A^n with f(a) in H.B^m already lies in H.A^m.
* ``tensor``: D_H (x) A -> D_H (x) B is injective.
* ``eq4``: every c in C^m with Hc = 0 lifts to some b with Hb = 0.
* ``dual``: the dual sequence of right modules is D_H-pure (Hom test).
* ``dualinj``: Hom(-, dual(D_H)) stays exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .classes import ClassDescriptor, Subset
from .constructions import construct_D, construct_L
from .decomp import decompose, is_isomorphic
from .exactlin import Mat, kernel_basis, preimage, rank
from .kronecker import I, P, classify
from .quiver import AlgebraMatrix, Quiver
from .repmod import (
    LEFT,
    Representation,
    ShortExact,
    free_module,
    hom_dim,
    matrix_action,
    tensor,
    tensor_map,
    dual,
)

__all__ = [
    "METHODS",
    "DEFAULT_METHODS",
    "MatrixSet",
    "ShapeFamily",
    "PurityReport",
    "is_pure",
    "ind_set",
    "ind_class",
    "implies",
    "ind_of_shape",
    "ImpliesResult",
]

METHODS = ("hom", "eq2", "tensor", "eq4", "dual", "dualinj")
DEFAULT_METHODS = ("hom", "tensor")


@dataclass(frozen=True)
class ShapeFamily:
    """All matrices with ``rows`` rows and ``cols`` columns; None stands for aleph_0."""

    rows: int | None
    cols: int | None

    def __post_init__(self) -> None:
        for x in (self.rows, self.cols):
            if x is not None and x < 1:
                raise ValueError("shape bounds must be positive")
        if self.rows is None and self.cols is None:
            raise ValueError("at most one bound may be aleph0")

    @classmethod
    def parse(cls, text: str) -> "ShapeFamily":
        parts = [p.strip() for p in text.strip("() ").split(",")]
        if len(parts) != 2:
            raise ValueError(f"shape {text!r}: expected 'rows,cols'")
        vals = [None if p.lower() in ("aleph0", "ℵ0", "ℵ₀", "inf") else int(p) for p in parts]
        return cls(*vals)

    def __str__(self) -> str:
        def one(x):
            return "aleph0" if x is None else str(x)

        return f"({one(self.rows)},{one(self.cols)})"


@dataclass
class MatrixSet:
    matrices: list[AlgebraMatrix]
    shape: ShapeFamily | None = None

    def __post_init__(self) -> None:
        for h in self.matrices[1:]:
            if h.quiver != self.matrices[0].quiver or h.field != self.matrices[0].field:
                raise ValueError("matrices over different algebras")

    def __iter__(self):
        return iter(self.matrices)

    def __len__(self) -> int:
        return len(self.matrices)


@dataclass
class PurityReport:
    verdicts: dict[str, bool]
    witnesses: dict[str, int | None] = dc_field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return len(set(self.verdicts.values())) <= 1

    @property
    def verdict(self) -> str:
        if not self.agree:
            return "disagreement"
        return "pure" if all(self.verdicts.values()) else "impure"

    @property
    def witness(self) -> int | None:
        found = [w for w in self.witnesses.values() if w is not None]
        return min(found) if found else None

    def lines(self) -> list[str]:
        out = [f"{m}={'pure' if v else 'impure'}" for m, v in self.verdicts.items()]
        out.append(f"verdict={self.verdict}")
        if self.witness is not None:
            out.append(f"witness=H#{self.witness + 1}")
        return out


# single-matrix tests ------------------------------------------------------


def _hom_exact(l: Representation, s: ShortExact) -> bool:
    return hom_dim(l, s.b) == hom_dim(l, s.a) + hom_dim(l, s.c)


def _contra_exact(e: Representation, s: ShortExact) -> bool:
    return hom_dim(s.b, e) == hom_dim(s.a, e) + hom_dim(s.c, e)


def _power(f: Mat, k: int) -> Mat:
    return Mat.identity(f.field, k).kron(f)


def _eq2(h: AlgebraMatrix, s: ShortExact) -> bool:
    ha, hb = matrix_action(h, s.a), matrix_action(h, s.b)
    if ha.rows == 0:
        return True
    fn = _power(s.f.total(), h.n)
    # a with f(a) in im H_B always contains im H_A; purity is equality
    return preimage(fn, hb).cols == rank(ha)


def _tensor(d: Representation, s: ShortExact) -> bool:
    ta, tb = tensor(d, s.a), tensor(d, s.b)
    return rank(tensor_map(ta, tb, s.f)) == ta.dim


def _eq4(h: AlgebraMatrix, s: ShortExact) -> bool:
    hb, hc = matrix_action(h, s.b), matrix_action(h, s.c)
    kb = kernel_basis(hb)
    gm = _power(s.g.total(), h.m)
    lifted = rank(gm @ kb) if kb.cols else 0
    return lifted == hc.cols - rank(hc)


def is_pure(s: ShortExact, hs: MatrixSet | Sequence[AlgebraMatrix],
            methods: Iterable[str] = DEFAULT_METHODS) -> PurityReport:
    """Run each requested method over every matrix; a method fails on its first failing H."""
    if isinstance(hs, MatrixSet) and hs.shape is not None and None in (hs.shape.rows, hs.shape.cols):
        raise ValueError("infinite shape families cannot be checked on sequences; use implies")
    if s.a.side != LEFT:
        raise ValueError("sequences of left modules are expected")
    methods = list(methods)
    for m in methods:
        if m not in METHODS:
            raise ValueError(f"unknown method {m!r}")
    mats = list(hs)
    for h in mats:
        if h.quiver != s.b.quiver or h.field != s.b.field:
            raise ValueError("matrix and sequence over different algebras")
    dual_seq = s.dual() if "dual" in methods else None
    verdicts = {m: True for m in methods}
    witnesses: dict[str, int | None] = {m: None for m in methods}
    for k, h in enumerate(mats):
        l = construct_L(h) if "hom" in methods else None
        d = construct_D(h) if {"tensor", "dual", "dualinj"} & set(methods) else None
        for m in methods:
            if not verdicts[m]:
                continue
            if m == "hom":
                ok = _hom_exact(l, s)
            elif m == "eq2":
                ok = _eq2(h, s)
            elif m == "tensor":
                ok = _tensor(d, s)
            elif m == "eq4":
                ok = _eq4(h, s)
            elif m == "dual":
                ok = _hom_exact(d, dual_seq)
            else:
                ok = _contra_exact(dual(d), s)
            if not ok:
                verdicts[m] = False
                witnesses[m] = k
    return PurityReport(verdicts, witnesses)


# ind sets and comparison ----------------------------------------------------


def _modules(src) -> list[Representation]:
    if isinstance(src, (MatrixSet, list, tuple)) and all(isinstance(x, AlgebraMatrix) for x in src):
        mats = list(src)
        if not mats:
            return []
        return [construct_L(h) for h in mats]
    return list(src)


def ind_set(src, seed: int = 0, quiver: Quiver | None = None, fld=None):
    """Indecomposable summands of the modules in ``src`` (or of each L_H).

    Kronecker input yields sorted descriptors; other quivers yield one
    representative module per isomorphism type. An empty matrix set stands
    for the regular module.
    """
    mods = _modules(src)
    if not mods:
        if quiver is None or fld is None:
            from .quiver import kronecker
            from .exactlin import GF

            quiver = quiver or kronecker()
            fld = fld or GF(5)
        mods = [free_module(quiver, fld, 1, LEFT)]
    q = mods[0].quiver
    if q.is_kronecker():
        out = set()
        for m in mods:
            for rep, _ in decompose(m, seed).classes:
                out.add(classify(rep))
        return sorted(out)
    reps: list[Representation] = []
    for m in mods:
        for rep, _ in decompose(m, seed).classes:
            if not any(is_isomorphic(rep, r, seed) for r in reps):
                reps.append(rep)
    return reps


def ind_class(src, fld, seed: int = 0) -> ClassDescriptor:
    """Symbolic Kronecker class of a source: a shape, a class, or finite data."""
    if isinstance(src, ClassDescriptor):
        return src
    if isinstance(src, ShapeFamily):
        return ind_of_shape(src, fld)
    if isinstance(src, MatrixSet) and src.shape is not None and not src.matrices:
        return ind_of_shape(src.shape, fld)
    return ClassDescriptor.of(fld, ind_set(src, seed, fld=fld))


def ind_of_shape(fam: ShapeFamily, fld, quiver: Quiver | None = None) -> ClassDescriptor:
    """Indecomposable summands of all L_H with H of the given shape (Kronecker only)."""
    if quiver is not None and not quiver.is_kronecker():
        raise ValueError("symbolic shapes are resolved for the Kronecker algebra only")
    m, n = fam.rows, fam.cols
    if n is None:
        raise ValueError(f"shape {fam}: no closed form is known for a countable column bound")
    if m is not None and m == 1 and n == 1:
        return ClassDescriptor.of(fld, [P(0), P(1)], regular_upto=1)
    if m is not None and m < 2 * n + 1:
        raise ValueError(f"shape {fam}: closed form known only for rows >= 2*cols+1 or (1,1)")
    members = [P(i) for i in range(n + 1)] + [I(i) for i in range(n)]
    return ClassDescriptor.of(fld, members, regular_upto=n)


@dataclass(frozen=True)
class ImpliesResult:
    holds: bool
    witness: object = None

    def __bool__(self) -> bool:
        return self.holds


def _projectives(q: Quiver, fld, seed: int) -> list[Representation]:
    return [rep for rep, _ in decompose(free_module(q, fld, 1, LEFT), seed).classes]


def implies(t_src, s_src, fld=None, seed: int = 0) -> ImpliesResult:
    """T-purity implies S-purity iff every indecomposable of S is one of T or projective."""
    sym = any(isinstance(x, (ClassDescriptor, ShapeFamily)) for x in (t_src, s_src)) or any(
        isinstance(x, MatrixSet) and x.shape is not None and not x.matrices for x in (t_src, s_src))
    mods_t = None if sym else _modules(t_src)
    mods_s = None if sym else _modules(s_src)
    if not sym:
        sample = (mods_t or []) + (mods_s or [])
        if sample and not sample[0].quiver.is_kronecker():
            q, f = sample[0].quiver, sample[0].field
            have = ind_set(t_src, seed, q, f) + _projectives(q, f, seed)
            for rep in ind_set(s_src, seed, q, f):
                if not any(is_isomorphic(rep, r, seed) for r in have):
                    return ImpliesResult(False, rep)
            return ImpliesResult(True)
        if fld is None and sample:
            fld = sample[0].field
    if fld is None:
        raise ValueError("a field is needed to resolve symbolic classes")
    t = ind_class(t_src, fld, seed).union(ClassDescriptor.of(fld, [P(0), P(1)]))
    s = ind_class(s_src, fld, seed)
    sub: Subset = s.issubset(t)
    return ImpliesResult(sub.holds, sub.witness)
