"""Exact dense linear algebra over GF(p) and the rationals.

Matrices are immutable wrappers around numpy arrays: ``int64`` for prime
fields (entries kept in ``[0, p)``), ``object`` arrays of ``Fraction`` for Q.
Nothing in here ever touches floating point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "Field",
    "GF",
    "QQ",
    "Mat",
    "NoSolution",
    "Solution",
    "FieldMismatch",
    "rref",
    "rank",
    "solve",
    "kernel_basis",
    "image_basis",
    "cokernel",
    "inverse",
    "span_contains",
    "preimage",
]

_INT64_SAFE = 2**62


class FieldMismatch(ValueError):
    """Raised when two operands live over different fields."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """A prime field GF(p) (``kind='gf'``) or the rationals (``kind='q'``)."""

    kind: str
    p: int = 0

    def __post_init__(self) -> None:
        if self.kind == "gf":
            if not (2 <= self.p < 2**31) or not _is_prime(self.p):
                raise ValueError(f"GF(p) needs a prime p < 2^31, got {self.p}")
        elif self.kind == "q":
            if self.p != 0:
                raise ValueError("the rationals carry no modulus")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def is_finite(self) -> bool:
        return self.kind == "gf"

    @property
    def dtype(self):
        return np.int64 if self.kind == "gf" else object

    def __str__(self) -> str:
        return f"gf {self.p}" if self.kind == "gf" else "q"

    @property
    def short(self) -> str:
        return f"gf{self.p}" if self.kind == "gf" else "q"

    # scalar arithmetic -------------------------------------------------

    def __call__(self, x) -> int | Fraction:
        """Canonical representative of ``x`` (int, Fraction, or numeric str)."""
        if isinstance(x, str):
            return self.parse(x)
        if self.kind == "gf":
            if isinstance(x, Fraction):
                return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
            return int(x) % self.p
        return Fraction(x)

    def parse(self, text: str) -> int | Fraction:
        text = text.strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                frac = Fraction(int(num), int(den))
            else:
                frac = Fraction(int(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed scalar {text!r}") from exc
        if self.kind == "gf" and frac.denominator % self.p == 0:
            raise ValueError(f"scalar {text!r} is undefined in GF({self.p})")
        return self(frac)

    def fmt(self, x) -> str:
        return str(x)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def inv(self, x):
        if self.kind == "gf":
            x = int(x) % self.p
            if x == 0:
                raise ZeroDivisionError("inverse of zero")
            return pow(x, -1, self.p)
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(x)

    def elements(self) -> Iterator[int]:
        if self.kind != "gf":
            raise ValueError("the rationals cannot be enumerated")
        return iter(range(self.p))

    def random(self, rng: random.Random, bound: int = 3):
        """Uniform element of GF(p); a small integer in [-bound, bound] for Q."""
        if self.kind == "gf":
            return rng.randrange(self.p)
        return Fraction(rng.randint(-bound, bound))

    def random_nonzero(self, rng: random.Random, bound: int = 3):
        while True:
            x = self.random(rng, bound)
            if x != 0:
                return x

    # array helpers -----------------------------------------------------

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        if self.kind == "gf":
            return np.mod(arr, self.p)
        return arr

    def array(self, rows, r: int | None = None, c: int | None = None) -> np.ndarray:
        if self.kind == "gf":
            out = np.array(
                [[self(x) for x in row] for row in rows], dtype=np.int64
            )
        else:
            out = np.empty((len(rows), len(rows[0]) if len(rows) else 0), dtype=object)
            for i, row in enumerate(rows):
                for j, x in enumerate(row):
                    out[i, j] = self(x)
        if out.size == 0:
            out = self.zeros_array(r if r is not None else len(rows), c or 0)
        return out

    def zeros_array(self, r: int, c: int) -> np.ndarray:
        if self.kind == "gf":
            return np.zeros((r, c), dtype=np.int64)
        out = np.empty((r, c), dtype=object)
        out.fill(Fraction(0))
        return out


def GF(p: int) -> Field:
    return Field("gf", p)


QQ = Field("q")


class Mat:
    """Immutable matrix over a :class:`Field`."""

    __slots__ = ("field", "a")

    def __init__(self, field: Field, arr: np.ndarray, *, _trusted: bool = False):
        if not _trusted:
            arr = np.asarray(arr)
            if arr.ndim != 2:
                raise ValueError("Mat needs a 2-d array")
            if field.kind == "gf":
                arr = np.mod(arr.astype(np.int64), field.p)
            else:
                conv = np.empty(arr.shape, dtype=object)
                for idx, x in np.ndenumerate(arr):
                    conv[idx] = Fraction(x)
                arr = conv
        arr.setflags(write=False)
        self.field = field
        self.a = arr

    # constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence], r: int | None = None,
                  c: int | None = None) -> "Mat":
        rows = [list(row) for row in rows]
        if r is None:
            r = len(rows)
        if c is None:
            c = len(rows[0]) if rows else 0
        if any(len(row) != c for row in rows) or len(rows) != r:
            raise ValueError("ragged or mis-sized rows")
        if r == 0 or c == 0:
            return cls.zeros(field, r, c)
        return cls(field, field.array(rows), _trusted=True)

    @classmethod
    def zeros(cls, field: Field, r: int, c: int) -> "Mat":
        return cls(field, field.zeros_array(r, c), _trusted=True)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Mat":
        arr = field.zeros_array(n, n)
        for i in range(n):
            arr[i, i] = field.one
        return cls(field, arr, _trusted=True)

    @classmethod
    def random(cls, field: Field, r: int, c: int, rng: random.Random) -> "Mat":
        return cls.from_rows(field, [[field.random(rng) for _ in range(c)] for _ in range(r)], r, c)

    @classmethod
    def random_invertible(cls, field: Field, n: int, rng: random.Random) -> "Mat":
        while True:
            m = cls.random(field, n, n, rng)
            if rank(m) == n:
                return m

    # basic protocol ----------------------------------------------------

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.a.shape

    def __getitem__(self, idx):
        out = self.a[idx]
        if isinstance(out, np.ndarray):
            if out.ndim == 2:
                return Mat(self.field, out.copy(), _trusted=True)
            return out
        return int(out) if self.field.kind == "gf" else out

    def tolist(self) -> list[list]:
        if self.field.kind == "gf":
            return [[int(x) for x in row] for row in self.a]
        return [list(row) for row in self.a]

    def __repr__(self) -> str:
        return f"Mat({self.field.short}, {self.tolist()})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and bool(np.all(self.a == other.a)))

    def __hash__(self) -> int:
        return hash((self.field, self.shape, tuple(map(tuple, self.tolist()))))

    def _check(self, other: "Mat") -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    # arithmetic --------------------------------------------------------

    def __add__(self, other: "Mat") -> "Mat":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return Mat(self.field, self.field.reduce(self.a + other.a), _trusted=True)

    def __sub__(self, other: "Mat") -> "Mat":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} - {other.shape}")
        return Mat(self.field, self.field.reduce(self.a - other.a), _trusted=True)

    def __neg__(self) -> "Mat":
        return Mat(self.field, self.field.reduce(-self.a), _trusted=True)

    def scale(self, c) -> "Mat":
        c = self.field(c)
        return Mat(self.field, self.field.reduce(self.a * c), _trusted=True)

    def __matmul__(self, other: "Mat") -> "Mat":
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        f = self.field
        if self.cols == 0 or self.rows == 0 or other.cols == 0:
            return Mat.zeros(f, self.rows, other.cols)
        if f.kind == "gf" and (f.p - 1) ** 2 * self.cols >= _INT64_SAFE:
            prod = self.a.astype(object) @ other.a.astype(object)
            return Mat(f, np.mod(prod, f.p).astype(np.int64), _trusted=True)
        return Mat(f, f.reduce(self.a @ other.a), _trusted=True)

    def __pow__(self, k: int) -> "Mat":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        result = Mat.identity(self.field, self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    @property
    def T(self) -> "Mat":
        return Mat(self.field, self.a.T.copy(), _trusted=True)

    def is_zero(self) -> bool:
        return not bool(np.any(self.a != 0))

    def column(self, j: int) -> "Mat":
        return Mat(self.field, self.a[:, j : j + 1].copy(), _trusted=True)

    def select_cols(self, idx: Iterable[int]) -> "Mat":
        idx = list(idx)
        return Mat(self.field, self.a[:, idx].reshape(self.rows, len(idx)).copy(), _trusted=True)

    def select_rows(self, idx: Iterable[int]) -> "Mat":
        idx = list(idx)
        return Mat(self.field, self.a[idx, :].reshape(len(idx), self.cols).copy(), _trusted=True)

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "Mat":
        return Mat(self.field, self.a[r0:r1, c0:c1].copy(), _trusted=True)

    def kron(self, other: "Mat") -> "Mat":
        self._check(other)
        return Mat(self.field, self.field.reduce(np.kron(self.a, other.a)).reshape(
            self.rows * other.rows, self.cols * other.cols), _trusted=True)

    # stacking ----------------------------------------------------------

    @staticmethod
    def hstack(field: Field, mats: Sequence["Mat"], rows: int | None = None) -> "Mat":
        if not mats:
            return Mat.zeros(field, rows or 0, 0)
        r = mats[0].rows
        if any(m.rows != r for m in mats):
            raise ValueError("hstack row mismatch")
        return Mat(field, np.hstack([m.a for m in mats]).reshape(r, sum(m.cols for m in mats)),
                   _trusted=True)

    @staticmethod
    def vstack(field: Field, mats: Sequence["Mat"], cols: int | None = None) -> "Mat":
        if not mats:
            return Mat.zeros(field, 0, cols or 0)
        c = mats[0].cols
        if any(m.cols != c for m in mats):
            raise ValueError("vstack column mismatch")
        return Mat(field, np.vstack([m.a for m in mats]).reshape(sum(m.rows for m in mats), c),
                   _trusted=True)

    @staticmethod
    def block_diag(field: Field, mats: Sequence["Mat"]) -> "Mat":
        r = sum(m.rows for m in mats)
        c = sum(m.cols for m in mats)
        arr = field.zeros_array(r, c)
        i = j = 0
        for m in mats:
            arr[i : i + m.rows, j : j + m.cols] = m.a
            i += m.rows
            j += m.cols
        return Mat(field, arr, _trusted=True)

    def with_block(self, r0: int, c0: int, blk: "Mat") -> "Mat":
        arr = self.a.copy()
        arr[r0 : r0 + blk.rows, c0 : c0 + blk.cols] = blk.a
        return Mat(self.field, arr, _trusted=True)


# elimination -----------------------------------------------------------


def _rref_array(arr: np.ndarray, field: Field, ncols: int | None = None):
    """Row-reduce a copy of ``arr``; pivots are searched in the first ``ncols`` columns."""
    a = arr.copy()
    r, c = a.shape
    limit = c if ncols is None else ncols
    pivots: list[int] = []
    row = 0
    for j in range(limit):
        if row == r:
            break
        nz = np.nonzero(a[row:, j])[0]
        if len(nz) == 0:
            continue
        k = row + int(nz[0])
        if k != row:
            a[[row, k]] = a[[k, row]]
        inv = field.inv(a[row, j])
        a[row] = field.reduce(a[row] * inv)
        colv = a[:, j].copy()
        colv[row] = 0
        hit = np.nonzero(colv)[0]
        if len(hit):
            a[hit] = field.reduce(a[hit] - np.outer(colv[hit], a[row]))
        pivots.append(j)
        row += 1
    return a, pivots


def rref(m: Mat) -> tuple[Mat, list[int]]:
    """Reduced row echelon form and pivot columns."""
    if m.rows == 0 or m.cols == 0:
        return m, []
    a, piv = _rref_array(m.a, m.field)
    return Mat(m.field, a, _trusted=True), piv


def rank(m: Mat) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return len(_rref_array(m.a, m.field)[1])


def kernel_basis(a: Mat) -> Mat:
    """Columns spanning ker(a); one column per free variable, that entry set to 1."""
    f = a.field
    n = a.cols
    if a.rows == 0:
        return Mat.identity(f, n)
    r, piv = _rref_array(a.a, f)
    free = [j for j in range(n) if j not in set(piv)]
    out = f.zeros_array(n, len(free))
    for k, j in enumerate(free):
        out[j, k] = f.one
        for i, pj in enumerate(piv):
            out[pj, k] = f.reduce(-r[i, j]) if f.kind == "gf" else -r[i, j]
    return Mat(f, out, _trusted=True)


def image_basis(a: Mat) -> Mat:
    """Canonical basis of the column space: the reduced rows of ``a.T`` as columns."""
    f = a.field
    if a.rows == 0 or a.cols == 0:
        return Mat.zeros(f, a.rows, 0)
    r, piv = _rref_array(a.a.T.copy(), f)
    return Mat(f, r[: len(piv)].T.copy(), _trusted=True)


def cokernel(a: Mat) -> tuple[Mat, Mat]:
    """Complement of im(a) and the quotient projection.

    Returns ``(comp, proj)``: ``comp`` has columns that are standard basis
    vectors completing a basis of im(a); ``proj`` satisfies ``proj @ a == 0``
    and ``proj @ comp == I``.
    """
    f = a.field
    n = a.rows
    if a.cols == 0 or n == 0:
        return Mat.identity(f, n), Mat.identity(f, n)
    r, piv = _rref_array(a.a.T.copy(), f)
    basis = r[: len(piv)]  # rank x n, identity on pivot coordinates
    pset = set(piv)
    nonpiv = [j for j in range(n) if j not in pset]
    comp = f.zeros_array(n, len(nonpiv))
    proj = f.zeros_array(len(nonpiv), n)
    for k, j in enumerate(nonpiv):
        comp[j, k] = f.one
        proj[k, j] = f.one
        for i, pj in enumerate(piv):
            proj[k, pj] = f.reduce(-basis[i, j]) if f.kind == "gf" else -basis[i, j]
    return Mat(f, comp, _trusted=True), Mat(f, proj, _trusted=True)


class NoSolution(ArithmeticError):
    """The system ``a x = b`` is inconsistent for target column ``column``."""

    def __init__(self, column: int):
        super().__init__(f"no solution for target column {column}")
        self.column = column


@dataclass(frozen=True)
class Solution:
    particular: Mat  # a.cols x b.cols
    kernel: Mat  # a.cols x dim ker a


def solve(a: Mat, b: Mat) -> Solution:
    """Solve ``a x = b`` column by column; raise :class:`NoSolution` on the first bad column."""
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    if a.rows != b.rows:
        raise ValueError(f"a has {a.rows} rows but b has {b.rows}")
    f = a.field
    n = a.cols
    ker = kernel_basis(a)
    if b.cols == 0:
        return Solution(Mat.zeros(f, n, 0), ker)
    if a.rows == 0:
        return Solution(Mat.zeros(f, n, b.cols), ker)
    aug = np.hstack([a.a, b.a])
    r, piv = _rref_array(aug, f, ncols=n)
    rk = len(piv)
    tail = r[rk:, n:]
    bad = np.nonzero(np.any(tail != 0, axis=0))[0] if tail.size else []
    if len(bad):
        raise NoSolution(int(bad[0]))
    x = f.zeros_array(n, b.cols)
    for i, pj in enumerate(piv):
        x[pj] = r[i, n:]
    return Solution(Mat(f, x, _trusted=True), ker)


def inverse(m: Mat) -> Mat:
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    sol = solve(m, Mat.identity(m.field, m.rows))
    if sol.kernel.cols:
        raise ZeroDivisionError("singular matrix")
    return sol.particular


def span_contains(u: Mat, v: Mat) -> bool:
    """True when every column of ``v`` lies in the column span of ``u``."""
    if v.cols == 0:
        return True
    if u.cols == 0:
        return v.is_zero()
    return rank(Mat.hstack(u.field, [u, v])) == rank(u)


def preimage(f_map: Mat, u: Mat) -> Mat:
    """Basis of {x : f_map x in span(u)}."""
    fld = f_map.field
    n = f_map.cols
    stacked = Mat.hstack(fld, [f_map, -u]) if u.cols else f_map
    ker = kernel_basis(stacked)
    return image_basis(ker.block(0, n, 0, ker.cols)) if ker.cols else Mat.zeros(fld, n, 0)
