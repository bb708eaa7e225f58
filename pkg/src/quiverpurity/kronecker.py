"""Kronecker indecomposables: descriptors, constructors and the classifier.

Vertex 1 is the sink and vertex 2 the source of the arrows a, b. Dimension
vectors are written (dim at vertex 1, dim at vertex 2).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .exactlin import Field, Mat, inverse, rank
from .poly import companion, factor, fmt_poly, is_irreducible, minpoly, monic_irreducibles, poly_pow
from .quiver import ParseError, Quiver, kronecker
from .repmod import LEFT, Representation, hom_dim

__all__ = [
    "Point",
    "INF",
    "IndecompDescriptor",
    "ClassifyError",
    "P",
    "I",
    "R",
    "make",
    "classify",
    "defect",
    "parse_point",
    "parse_descriptor",
    "points",
    "FAMILIES",
    "GENERIC",
    "elem",
]

FAMILIES = ("P", "I", "R", "prufer", "adic", "generic")


class ClassifyError(ValueError):
    """Raised when a module is not one of the Kronecker indecomposables."""


@dataclass(frozen=True)
class Point:
    """A closed point of the projective line: a field element, infinity, or a monic irreducible."""

    kind: str  # "elem" | "inf" | "poly"
    value: object = None

    @property
    def degree(self) -> int:
        return len(self.value) - 1 if self.kind == "poly" else 1

    def sort_key(self):
        if self.kind == "elem":
            return (0, 0, (self.value,))
        if self.kind == "inf":
            return (1, 0, ())
        return (2, self.degree, self.value)

    def __lt__(self, other: "Point") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if self.kind == "elem":
            return str(self.value)
        if self.kind == "inf":
            return "inf"
        return fmt_poly(self.value)


INF = Point("inf")


def elem(x) -> Point:
    return Point("elem", x)


_TERM = re.compile(r"^([0-9/]*)\*?(x(?:\^([0-9]+))?)?$")


def _parse_poly(text: str, f: Field) -> tuple:
    s = text.replace(" ", "").replace("-", "+-")
    coeffs: dict[int, object] = {}
    for raw in filter(None, s.split("+")):
        neg = raw.startswith("-")
        t = raw[1:] if neg else raw
        mt = _TERM.match(t)
        if not mt or (not mt.group(1) and not mt.group(2)):
            raise ValueError(f"bad polynomial term {raw!r}")
        c = f.parse(mt.group(1)) if mt.group(1) else f.one
        deg = 0 if not mt.group(2) else int(mt.group(3) or 1)
        coeffs[deg] = f(coeffs.get(deg, f.zero) + (-c if neg else c))
    top = max((d for d, c in coeffs.items() if c != 0), default=0)
    return tuple(coeffs.get(d, f.zero) for d in range(top, -1, -1))


def parse_point(text: str, f: Field) -> Point:
    t = text.strip()
    if t in ("inf", "∞"):
        return INF
    if "x" in t:
        poly = _parse_poly(t, f)
        if poly[0] != 1:
            raise ValueError(f"polynomial point {t!r} is not monic")
        if len(poly) < 3:
            raise ValueError(f"degree-1 point {t!r}: write the root instead")
        if not is_irreducible(poly, f):
            raise ValueError(f"polynomial point {t!r} is reducible over {f}")
        return Point("poly", poly)
    return elem(f.parse(t))


def points(f: Field, max_degree: int = 1) -> list[Point]:
    """All points of degree at most ``max_degree`` (finite fields only)."""
    out = [elem(x) for x in f.elements()] + [INF]
    for d in range(2, max_degree + 1):
        out.extend(Point("poly", g) for g in monic_irreducibles(f, d))
    return out


@dataclass(frozen=True)
class IndecompDescriptor:
    """Name of a Kronecker indecomposable, finite- or infinite-dimensional."""

    family: str
    n: int = 0
    point: Point | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family in ("P", "I") and self.n < 0:
            raise ValueError("index must be >= 0")
        if self.family == "R" and self.n < 1:
            raise ValueError("regular length must be >= 1")
        if self.family in ("R", "prufer", "adic") and self.point is None:
            raise ValueError(f"{self.family} needs a point")

    @property
    def finite_dimensional(self) -> bool:
        return self.family in ("P", "I", "R")

    @property
    def dims(self) -> tuple[int, int]:
        if self.family == "P":
            return (self.n + 1, self.n)
        if self.family == "I":
            return (self.n, self.n + 1)
        if self.family == "R":
            d = self.n * self.point.degree
            return (d, d)
        raise ValueError(f"{self} is infinite-dimensional")

    def sort_key(self):
        fam = FAMILIES.index(self.family)
        pk = self.point.sort_key() if self.point is not None else ()
        if self.family == "R":
            return (fam, pk, self.n)
        return (fam, self.n, pk)

    def __lt__(self, other: "IndecompDescriptor") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if self.family in ("P", "I"):
            return f"{self.family}{self.n}"
        if self.family == "R":
            return f"R[{self.point},{self.n}]"
        if self.family == "generic":
            return "generic"
        return f"{self.family}[{self.point}]"


def P(n: int) -> IndecompDescriptor:
    return IndecompDescriptor("P", n)


def I(n: int) -> IndecompDescriptor:  # noqa: E743
    return IndecompDescriptor("I", n)


def R(point: Point, n: int = 1) -> IndecompDescriptor:
    return IndecompDescriptor("R", n, point)


GENERIC = IndecompDescriptor("generic")

_DESC = re.compile(r"^(P|I)(\d+)$|^R\[(.+),\s*(\d+)\]$|^(prufer|adic)\[(.+)\]$|^generic$")


def parse_descriptor(text: str, f: Field, line: int | None = None) -> IndecompDescriptor:
    t = text.strip()
    m = _DESC.match(t)
    if not m:
        raise ParseError(f"unrecognised descriptor {t!r}", line)
    try:
        if m.group(1):
            return IndecompDescriptor(m.group(1), int(m.group(2)))
        if m.group(3) is not None:
            return R(parse_point(m.group(3), f), int(m.group(4)))
        if m.group(5):
            return IndecompDescriptor(m.group(5), 0, parse_point(m.group(6), f))
    except ValueError as exc:
        raise ParseError(str(exc), line) from None
    return GENERIC


# constructors ---------------------------------------------------------------


def _jordan(f: Field, n: int, lam) -> Mat:
    rows = [[f.zero] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = f(lam)
        if i + 1 < n:
            rows[i][i + 1] = f.one
    return Mat.from_rows(f, rows, n, n)


def make(d: IndecompDescriptor, f: Field, q: Quiver | None = None) -> Representation:
    """The standard representation of a finite-dimensional descriptor."""
    q = q or kronecker()
    if not d.finite_dimensional:
        raise ValueError(f"{d} is infinite-dimensional and only symbolic")
    n = d.n
    eye = Mat.identity(f, n)
    if d.family == "P":
        z = Mat.zeros(f, 1, n)
        a, b = Mat.vstack(f, [eye, z], cols=n), Mat.vstack(f, [z, eye], cols=n)
    elif d.family == "I":
        z = Mat.zeros(f, n, 1)
        a, b = Mat.hstack(f, [eye, z], rows=n), Mat.hstack(f, [z, eye], rows=n)
    else:
        pt = d.point
        if pt.kind == "inf":
            a, b = _jordan(f, n, 0), eye
        elif pt.kind == "elem":
            a, b = eye, _jordan(f, n, pt.value)
        else:
            big = companion(poly_pow(pt.value, n, f), f)
            a, b = Mat.identity(f, big.rows), big
    return Representation(q, f, LEFT, d.dims, [a, b])


# classifier -------------------------------------------------------------------


def _check_kronecker(m: Representation) -> None:
    if not m.quiver.is_kronecker():
        raise ValueError("module is not over the Kronecker quiver")


def defect(m: Representation) -> int:
    _check_kronecker(m)
    return m.dims[1] - m.dims[0]


def _regular_point(x: Mat, f: Field):
    mp = minpoly(x)
    if len(mp) - 1 != x.rows:
        return None  # not cyclic, hence decomposable
    facs = factor(mp, f)
    if len(facs) != 1:
        return None
    g, e = facs[0]
    if len(g) == 2:
        return elem(f(-g[1])), e
    return Point("poly", g), e


def classify(m: Representation) -> IndecompDescriptor:
    """Name an indecomposable left Kronecker module; raises ClassifyError otherwise."""
    _check_kronecker(m)
    if m.side != LEFT:
        raise ValueError("classify expects a left module")
    d1, d2 = m.dims
    if d1 + d2 == 0:
        raise ClassifyError("zero module")
    delta = d2 - d1
    f = m.field
    if delta in (-1, 1):
        if hom_dim(m, m) != 1:
            raise ClassifyError(f"dims {m.dims}: endomorphism ring is not k, module decomposes")
        return P(d2) if delta == -1 else I(d1)
    if delta != 0:
        raise ClassifyError(f"defect {delta} is not that of an indecomposable")
    a, b = m.mats
    n = d1
    if rank(a) == n:
        got = _regular_point(inverse(a) @ b, f)
    elif rank(b) == n:
        y = inverse(b) @ a
        got = (INF, n) if (y ** n).is_zero() and len(minpoly(y)) - 1 == n else None
    else:
        got = None
    if got is None:
        raise ClassifyError(f"dims {m.dims}: regular pencil is not a single Jordan-type block")
    return R(got[0], got[1])
