"""Quivers, path algebras, and matrices over path algebras.

Vertices are stored 0-based and shown 1-based (``e1`` is vertex 0). A path
``(a1, ..., ak)`` denotes the product ``a1 * ... * ak``: ``ak`` is traversed
first, so paths compose right to left like maps acting on left modules.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .exactlin import Field

__all__ = [
    "Arrow",
    "Quiver",
    "Path",
    "AlgebraElement",
    "AlgebraMatrix",
    "kronecker",
    "parse_element",
    "parse_matrix",
    "ParseError",
]


class ParseError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Path:
    source: int
    target: int
    arrows: tuple[str, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arrows)

    def label(self) -> str:
        if not self.arrows:
            return f"e{self.source + 1}"
        return "*".join(self.arrows)


@dataclass(frozen=True)
class Quiver:
    """A finite acyclic quiver."""

    num_vertices: int
    arrows: tuple[Arrow, ...]
    name: str = field(default="custom", compare=False)

    def __post_init__(self) -> None:
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("arrow names must be unique")
        for a in self.arrows:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", a.name) or re.fullmatch(r"e\d+", a.name):
                raise ValueError(f"bad arrow name {a.name!r}")
            if not (0 <= a.source < self.num_vertices and 0 <= a.target < self.num_vertices):
                raise ValueError(f"arrow {a.name} leaves the vertex range")
        if self._has_cycle():
            raise ValueError("quiver has a directed cycle")

    @classmethod
    def from_spec(cls, num_vertices: int, arrows: Iterable[tuple[str, int, int]],
                  name: str = "custom") -> "Quiver":
        """Build from 1-based ``(name, source, target)`` triples."""
        return cls(num_vertices, tuple(Arrow(n, s - 1, t - 1) for n, s, t in arrows), name)

    def _has_cycle(self) -> bool:
        indeg = [0] * self.num_vertices
        for a in self.arrows:
            indeg[a.target] += 1
        queue = [v for v in range(self.num_vertices) if indeg[v] == 0]
        seen = 0
        while queue:
            v = queue.pop()
            seen += 1
            for a in self.arrows:
                if a.source == v:
                    indeg[a.target] -= 1
                    if indeg[a.target] == 0:
                        queue.append(a.target)
        return seen != self.num_vertices

    def arrow(self, name: str) -> Arrow:
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError(f"unknown arrow {name!r}") from None

    @cached_property
    def _by_name(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    def opposite(self) -> "Quiver":
        return self._opposite

    @cached_property
    def _opposite(self) -> "Quiver":
        op = Quiver(self.num_vertices, tuple(Arrow(a.name, a.target, a.source) for a in self.arrows),
                    self.name + "^op" if not self.name.endswith("^op") else self.name[:-3])
        object.__setattr__(op, "_opposite", self)
        return op

    @cached_property
    def paths(self) -> tuple[Path, ...]:
        """All paths, trivial ones first, then by length and arrow names."""
        out = [Path(v, v) for v in range(self.num_vertices)]
        frontier = list(out)
        while frontier:
            nxt = []
            for p in frontier:
                for a in self.arrows:
                    if a.source == p.target:
                        nxt.append(Path(p.source, a.target, (a.name,) + p.arrows))
            nxt.sort(key=lambda q: (q.source, q.target, q.arrows))
            out.extend(nxt)
            frontier = nxt
        return tuple(out)

    @cached_property
    def _paths_between(self) -> dict[tuple[int, int], tuple[Path, ...]]:
        table: dict[tuple[int, int], list[Path]] = {}
        for p in self.paths:
            table.setdefault((p.source, p.target), []).append(p)
        return {k: tuple(v) for k, v in table.items()}

    def paths_between(self, source: int, target: int) -> tuple[Path, ...]:
        return self._paths_between.get((source, target), ())

    def path_index(self, source: int, target: int) -> dict[tuple[str, ...], int]:
        return {p.arrows: i for i, p in enumerate(self.paths_between(source, target))}

    def compose(self, p: Path, q: Path) -> Path | None:
        """``p * q`` (q first), or None when the product vanishes."""
        if q.target != p.source:
            return None
        return Path(q.source, p.target, p.arrows + q.arrows)

    def is_kronecker(self) -> bool:
        return (self.num_vertices == 2 and len(self.arrows) == 2
                and all(a.source == 1 and a.target == 0 for a in self.arrows))

    def spec_text(self) -> str:
        if self.name == "kronecker" and self == kronecker():
            return "kronecker"
        parts = [f"custom {self.num_vertices}"]
        parts += [f"{a.name} {a.source + 1} {a.target + 1}" for a in self.arrows]
        return " ; ".join(parts)


_KRONECKER = Quiver(2, (Arrow("a", 1, 0), Arrow("b", 1, 0)), "kronecker")


def kronecker() -> Quiver:
    """The Kronecker quiver: vertices 1, 2 and arrows a, b: 2 -> 1."""
    return _KRONECKER


class AlgebraElement:
    """An element of the path algebra kQ in canonical form."""

    __slots__ = ("quiver", "field", "terms")

    def __init__(self, quiver: Quiver, fld: Field, terms: Iterable[tuple[Path, object]] = ()):
        acc: dict[Path, object] = {}
        for p, c in terms:
            c = fld(c)
            acc[p] = fld(acc.get(p, fld.zero) + c)
        self.quiver = quiver
        self.field = fld
        self.terms: tuple[tuple[Path, object], ...] = tuple(sorted(
            ((p, c) for p, c in acc.items() if c != 0),
            key=lambda pc: (pc[0].length, pc[0].source, pc[0].target, pc[0].arrows)))

    @classmethod
    def zero(cls, q: Quiver, f: Field) -> "AlgebraElement":
        return cls(q, f)

    @classmethod
    def one(cls, q: Quiver, f: Field) -> "AlgebraElement":
        return cls(q, f, [(Path(v, v), 1) for v in range(q.num_vertices)])

    @classmethod
    def idempotent(cls, q: Quiver, f: Field, v: int) -> "AlgebraElement":
        return cls(q, f, [(Path(v, v), 1)])

    @classmethod
    def path(cls, q: Quiver, f: Field, p: Path, c=1) -> "AlgebraElement":
        return cls(q, f, [(p, c)])

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "AlgebraElement") -> None:
        if self.quiver != other.quiver or self.field != other.field:
            raise ValueError("algebra elements over different quivers or fields")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(self.quiver, self.field, self.terms + other.terms)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.quiver, self.field, [(p, -c) for p, c in self.terms])

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, c) -> "AlgebraElement":
        return AlgebraElement(self.quiver, self.field, [(p, c * x) for p, x in self.terms])

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        out = []
        for p, c in self.terms:
            for q, d in other.terms:
                pq = self.quiver.compose(p, q)
                if pq is not None:
                    out.append((pq, c * d))
        return AlgebraElement(self.quiver, self.field, out)

    def sandwich(self, left: int, right: int) -> "AlgebraElement":
        """``e_left * self * e_right``."""
        return AlgebraElement(self.quiver, self.field,
                              [(p, c) for p, c in self.terms if p.target == left and p.source == right])

    def opposite(self) -> "AlgebraElement":
        """The same element read in the opposite algebra."""
        op = self.quiver.opposite()
        return AlgebraElement(op, self.field,
                              [(Path(p.target, p.source, p.arrows[::-1]), c) for p, c in self.terms])

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (self.quiver == other.quiver and self.field == other.field
                and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.quiver, self.field, self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for p, c in self.terms:
            lab = p.label()
            parts.append(lab if c == 1 else f"{c}*{lab}")
        return " + ".join(parts)

    __repr__ = __str__


class AlgebraMatrix:
    """An ``n x m`` matrix with entries in the path algebra."""

    __slots__ = ("quiver", "field", "entries", "n", "m")

    def __init__(self, quiver: Quiver, fld: Field, entries: Sequence[Sequence[AlgebraElement]],
                 n: int | None = None, m: int | None = None):
        rows = tuple(tuple(r) for r in entries)
        self.n = len(rows) if n is None else n
        self.m = (len(rows[0]) if rows else 0) if m is None else m
        if len(rows) != self.n or any(len(r) != self.m for r in rows):
            raise ValueError("ragged algebra matrix")
        for r in rows:
            for x in r:
                if x.quiver != quiver or x.field != fld:
                    raise ValueError("entry over a different quiver or field")
        self.quiver = quiver
        self.field = fld
        self.entries = rows

    @property
    def shape(self) -> tuple[int, int]:
        return self.n, self.m

    def __getitem__(self, ij) -> AlgebraElement:
        i, j = ij
        return self.entries[i][j]

    @classmethod
    def zero(cls, q: Quiver, f: Field, n: int = 1, m: int = 1) -> "AlgebraMatrix":
        z = AlgebraElement.zero(q, f)
        return cls(q, f, [[z] * m for _ in range(n)], n, m)

    def transpose(self) -> "AlgebraMatrix":
        return AlgebraMatrix(self.quiver, self.field,
                             [[self.entries[i][j] for i in range(self.n)] for j in range(self.m)],
                             self.m, self.n)

    def opposite(self) -> "AlgebraMatrix":
        """Entrywise opposite, transposed: the matrix of the same map read over kQ^op."""
        return AlgebraMatrix(self.quiver.opposite(), self.field,
                             [[self.entries[i][j].opposite() for i in range(self.n)]
                              for j in range(self.m)], self.m, self.n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraMatrix):
            return NotImplemented
        return (self.quiver == other.quiver and self.field == other.field
                and self.shape == other.shape and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash((self.quiver, self.field, self.shape, self.entries))

    def to_text(self) -> str:
        lines = [f"matrix {self.n} {self.m}"]
        for r in self.entries:
            lines.append(", ".join(str(x) for x in r))
        return "\n".join(lines)

    def __repr__(self) -> str:
        return "AlgebraMatrix(" + "; ".join(", ".join(map(str, r)) for r in self.entries) + ")"


# parsing -----------------------------------------------------------------

_SCALAR = re.compile(r"\d+(/\d+)?")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def _factor_path(q: Quiver, name: str, line: int | None) -> Path:
    m = re.fullmatch(r"e(\d+)", name)
    if m:
        v = int(m.group(1)) - 1
        if not 0 <= v < q.num_vertices:
            raise ParseError(f"unknown vertex {name!r}", line)
        return Path(v, v)
    try:
        a = q.arrow(name)
    except KeyError:
        raise ParseError(f"unknown arrow {name!r}", line) from None
    return Path(a.source, a.target, (a.name,))


def parse_element(text: str, q: Quiver, f: Field, line: int | None = None) -> AlgebraElement:
    """Parse ``term (('+'|'-') term)*`` with ``term = [scalar '*'] path``.

    A bare scalar stands for that multiple of the unit, so ``0`` and ``1`` are
    accepted as matrix entries.
    """
    s = text.replace(" ", "").replace("\t", "")
    if not s:
        raise ParseError("empty algebra element", line)
    tokens = re.findall(r"[+-]|[^+-]+", s)
    terms: list[tuple[Path, object]] = []
    sign = 1
    expect_term = True
    unit = AlgebraElement.one(q, f)
    for tok in tokens:
        if tok in ("+", "-"):
            if tok == "-":
                sign = -sign
            expect_term = True
            continue
        factors = tok.split("*")
        if any(not x for x in factors):
            raise ParseError(f"malformed term {tok!r}", line)
        coef = f(sign)
        idx = 0
        if _SCALAR.fullmatch(factors[0]):
            try:
                coef = f(coef * f.parse(factors[0]))
            except ValueError as exc:
                raise ParseError(str(exc), line) from None
            idx = 1
        names = factors[idx:]
        if not names:
            terms.extend((p, f(coef * c)) for p, c in unit.terms)
        else:
            path = None
            for nm in names:
                if not _NAME.fullmatch(nm):
                    raise ParseError(f"malformed factor {nm!r}", line)
                fp = _factor_path(q, nm, line)
                if path is None:
                    path = fp
                else:
                    prod = q.compose(path, fp)
                    if prod is None:
                        raise ParseError(f"non-composable path product in {tok!r}", line)
                    path = prod
            terms.append((path, coef))
        sign = 1
        expect_term = False
    if expect_term:
        raise ParseError("dangling operator", line)
    return AlgebraElement(q, f, terms)


def parse_matrix(lines: Sequence[str], q: Quiver, f: Field, first_line: int = 1) -> AlgebraMatrix:
    """Parse ``matrix <n> <m>`` followed by n comma-separated rows."""
    if not lines:
        raise ParseError("expected 'matrix <n> <m>'", first_line)
    head = lines[0].split()
    if len(head) != 3 or head[0] != "matrix":
        raise ParseError("expected 'matrix <n> <m>'", first_line)
    try:
        n, m = int(head[1]), int(head[2])
    except ValueError:
        raise ParseError("matrix dimensions must be integers", first_line) from None
    if n < 0 or m < 0:
        raise ParseError("matrix dimensions must be nonnegative", first_line)
    if len(lines) < n + 1:
        raise ParseError(f"expected {n} matrix rows", first_line + len(lines))
    rows = []
    for i in range(n):
        ln = first_line + 1 + i
        cells = [c for c in lines[1 + i].split(",")] if m else []
        if m and len(cells) != m:
            raise ParseError(f"expected {m} entries, got {len(cells)}", ln)
        rows.append([parse_element(c, q, f, ln) for c in cells])
    return AlgebraMatrix(q, f, rows, n, m)
