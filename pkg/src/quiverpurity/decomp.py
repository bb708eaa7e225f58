"""Krull-Schmidt decomposition by Fitting splitting, and isomorphism testing."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field

from .exactlin import Mat, rank
from .poly import evaluate, factor, minpoly, poly_pow
from .repmod import (
    ModuleMap,
    Representation,
    hom_basis,
    hom_dim,
    identity_map,
    subquotient,
    zero_map,
)

__all__ = ["Decomposition", "decompose", "is_isomorphic", "find_isomorphism", "is_local_probe", "ROUNDS"]

ROUNDS = 100
_EXHAUSTIVE_LIMIT = 2048
_RANDOM_TRIES = 200


@dataclass
class Decomposition:
    """Indecomposable summands of a module, grouped by isomorphism type.

    ``pieces[i]`` embeds into the input via ``inclusions[i]``; ``classes`` lists
    one representative per type with its multiplicity and ``class_of[i]`` the
    type of piece i.
    """

    module: Representation
    pieces: list[Representation]
    inclusions: list[ModuleMap]
    classes: list[tuple[Representation, int]] = dc_field(default_factory=list)
    class_of: list[int] = dc_field(default_factory=list)

    def witness(self) -> Mat:
        """Block matrix of the inclusions; invertible exactly when the pieces are a decomposition."""
        f = self.module.field
        cols = []
        for v in range(len(self.module.dims)):
            cols.append(Mat.hstack(f, [inc.comps[v] for inc in self.inclusions], rows=self.module.dims[v]))
        return Mat.block_diag(f, cols)

    def verify(self) -> bool:
        w = self.witness()
        return w.rows == w.cols and rank(w) == w.rows


def _combine(basis: list[ModuleMap], coeffs) -> ModuleMap:
    f = basis[0].source.field
    comps = []
    for v in range(len(basis[0].comps)):
        r, c = basis[0].comps[v].shape
        if r == 0 or c == 0:
            comps.append(Mat.zeros(f, r, c))
            continue
        acc = sum((basis[i].comps[v].a * coeffs[i] for i in range(len(basis)) if coeffs[i] != 0),
                  start=f.zeros_array(r, c))
        comps.append(Mat(f, acc))
    return ModuleMap(basis[0].source, basis[0].target, comps, check=False)


def _fitting_split(m: Representation, endo: ModuleMap):
    """Split along a primary factor of the minimal polynomial, or None if ``endo`` is local."""
    mp = minpoly(endo.total())
    facs = factor(mp, m.field)
    if len(facs) < 2:
        return None
    g, e = facs[0]
    u = ModuleMap(m, m, [evaluate(poly_pow(g, e, m.field), c) for c in endo.comps], check=False)
    u = u.power(m.total)
    ker, inc_k = subquotient(u, "kernel")
    img, inc_i = subquotient(u, "image")
    return (ker, inc_k), (img, inc_i)


def _split_once(m: Representation, rng: random.Random, rounds: int):
    basis = hom_basis(m, m)
    if len(basis) <= 1:
        return None
    for b in basis:
        s = _fitting_split(m, b)
        if s:
            return s
    f = m.field
    for _ in range(rounds):
        coeffs = [f.random(rng) for _ in basis]
        s = _fitting_split(m, _combine(basis, coeffs))
        if s:
            return s
    return None


def _pieces(m: Representation, rng: random.Random, rounds: int) -> list[tuple[Representation, ModuleMap]]:
    if m.total == 0:
        return []
    s = _split_once(m, rng, rounds)
    if s is None:
        return [(m, identity_map(m))]
    out = []
    for sub, inc in s:
        for piece, pinc in _pieces(sub, rng, rounds):
            out.append((piece, inc @ pinc))
    return out


def decompose(m: Representation, seed: int = 0, rounds: int = ROUNDS) -> Decomposition:
    """Split ``m`` into indecomposables and group them up to isomorphism."""
    rng = random.Random(seed)
    found = _pieces(m, rng, rounds)
    pieces = [p for p, _ in found]
    incs = [i for _, i in found]
    reps: list[Representation] = []
    counts: list[int] = []
    class_of = []
    for p in pieces:
        for k, r in enumerate(reps):
            if is_isomorphic(p, r, seed=seed):
                counts[k] += 1
                class_of.append(k)
                break
        else:
            reps.append(p)
            counts.append(1)
            class_of.append(len(reps) - 1)
    return Decomposition(m, pieces, incs, list(zip(reps, counts)), class_of)


def _invertible(h: ModuleMap) -> bool:
    return all(c.rows == c.cols and rank(c) == c.rows for c in h.comps)


def find_isomorphism(m: Representation, n: Representation, seed: int = 0) -> ModuleMap | None:
    """An invertible homomorphism ``m -> n`` or None.

    Dimension and Hom-dimension invariants are compared first. Over small
    finite fields the whole of Hom(m, n) is searched; otherwise random
    combinations are tried, which can only err towards None.
    """
    if not m.same_category(n):
        raise ValueError("modules live over different quivers, fields or sides")
    if m.dims != n.dims:
        return None
    basis = hom_basis(m, n)
    d = len(basis)
    if m.total == 0:
        return zero_map(m, n)
    if d == 0 or d != hom_dim(n, m) or d != hom_dim(m, m):
        return None
    f = m.field
    rng = random.Random(seed)
    for _ in range(min(_RANDOM_TRIES, 20)):
        h = _combine(basis, [f.random(rng) for _ in basis])
        if _invertible(h):
            return h
    if f.is_finite and f.p ** d <= _EXHAUSTIVE_LIMIT:
        for coeffs in itertools.product(range(f.p), repeat=d):
            if any(coeffs):
                h = _combine(basis, coeffs)
                if _invertible(h):
                    return h
        return None
    for k in range(_RANDOM_TRIES):
        bound = 3 + k // 20  # widen integer range over Q
        h = _combine(basis, [f.random(rng, bound) for _ in basis])
        if _invertible(h):
            return h
    return None


def is_isomorphic(m: Representation, n: Representation, seed: int = 0) -> bool:
    return find_isomorphism(m, n, seed) is not None


def is_local_probe(m: Representation, tries: int = 50, seed: int = 0) -> bool:
    """Each of ``tries`` random endomorphisms is nilpotent or invertible."""
    basis = hom_basis(m, m)
    if not basis:
        return m.total == 0
    rng = random.Random(seed)
    f = m.field
    for _ in range(tries):
        h = _combine(basis, [f.random(rng) for _ in basis])
        if not (_invertible(h) or h.power(max(m.total, 1)).is_zero()):
            return False
    return True
