"""Symbolic classes of Kronecker indecomposables, possibly infinite."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Iterator

from .exactlin import Field
from .kronecker import (
    IndecompDescriptor,
    Point,
    I,
    P,
    R,
    elem,
    parse_descriptor,
    parse_point,
    points,
)
from .quiver import ParseError

__all__ = ["ClassDescriptor", "parse_class", "Subset"]


@dataclass(frozen=True)
class Subset:
    """Outcome of an inclusion test; falsy on failure, with a missing member as witness."""

    holds: bool
    witness: IndecompDescriptor | None = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class ClassDescriptor:
    """A finite set of descriptors plus cofinite families.

    ``preproj_from``/``preinj_from``: all P_n / I_n with n at least the value.
    ``tube_tails``: (point, n0) pairs meaning all R[point, n] with n >= n0.
    ``regular_upto``: every regular module with dimension vector (d, d), d <= value.
    ``all_prufer``: every Pruefer module.
    """

    field: Field
    members: frozenset = frozenset()
    preproj_from: int | None = None
    preinj_from: int | None = None
    tube_tails: tuple = ()
    regular_upto: int | None = None
    all_prufer: bool = False

    # construction ------------------------------------------------------

    @classmethod
    def of(cls, fld: Field, members: Iterable[IndecompDescriptor] = (), **families) -> "ClassDescriptor":
        tails = families.pop("tube_tails", ())
        if isinstance(tails, dict):
            tails = tuple(tails.items())
        return cls(fld, frozenset(members), tube_tails=tuple(tails), **families).canonical()

    def canonical(self) -> "ClassDescriptor":
        mem = set(self.members)
        pp, pi = self.preproj_from, self.preinj_from
        while pp is not None and pp > 0 and P(pp - 1) in mem:
            pp -= 1
        while pi is not None and pi > 0 and I(pi - 1) in mem:
            pi -= 1
        tails: dict[Point, int] = {}
        for pt, n0 in self.tube_tails:
            tails[pt] = min(n0, tails.get(pt, n0))
        for pt in tails:
            while tails[pt] > 1 and R(pt, tails[pt] - 1) in mem:
                tails[pt] -= 1
        out = ClassDescriptor(self.field, frozenset(), pp, pi, tuple(sorted(tails.items())),
                              self.regular_upto, self.all_prufer)
        kept = frozenset(d for d in mem if not out._family_contains(d))
        return replace(out, members=kept)

    def union(self, other: "ClassDescriptor") -> "ClassDescriptor":
        def lo(a, b):
            return b if a is None else a if b is None else min(a, b)

        def hi(a, b):
            return b if a is None else a if b is None else max(a, b)

        return ClassDescriptor(
            self.field,
            self.members | other.members,
            lo(self.preproj_from, other.preproj_from),
            lo(self.preinj_from, other.preinj_from),
            self.tube_tails + other.tube_tails,
            hi(self.regular_upto, other.regular_upto),
            self.all_prufer or other.all_prufer,
        ).canonical()

    # membership --------------------------------------------------------

    def _family_contains(self, d: IndecompDescriptor) -> bool:
        if d.family == "P":
            return self.preproj_from is not None and d.n >= self.preproj_from
        if d.family == "I":
            return self.preinj_from is not None and d.n >= self.preinj_from
        if d.family == "R":
            if self.regular_upto is not None and d.dims[0] <= self.regular_upto:
                return True
            return any(pt == d.point and d.n >= n0 for pt, n0 in self.tube_tails)
        if d.family == "prufer":
            return self.all_prufer
        return False

    def __contains__(self, d: IndecompDescriptor) -> bool:
        return d in self.members or self._family_contains(d)

    @property
    def is_finite(self) -> bool:
        return (self.preproj_from is None and self.preinj_from is None and not self.tube_tails
                and not self.all_prufer
                and (self.regular_upto is None or self.field.is_finite))

    def enumerate(self) -> list[IndecompDescriptor]:
        """All members of a finite class, sorted."""
        if not self.is_finite:
            raise ValueError("class is infinite")
        out = set(self.members)
        if self.regular_upto:
            out.update(_bounded_regulars(self.field, self.regular_upto))
        return sorted(out)

    @property
    def regular_part_finite(self) -> bool:
        return not self.tube_tails and (self.regular_upto is None or self.field.is_finite)

    # inclusion -----------------------------------------------------------

    def _all_points(self) -> Iterator[Point]:
        """Every point, in order of degree (integers by size over Q)."""
        if self.field.is_finite:
            deg = 1
            while True:
                for pt in points(self.field, deg):
                    if pt.degree == deg or deg == 1:
                        yield pt
                deg += 1
        for k in itertools.count():
            for x in ((Fraction(k), Fraction(-k)) if k else (Fraction(0),)):
                yield elem(x)

    def issubset(self, other: "ClassDescriptor") -> Subset:
        """Decide ``self <= other``; on failure name a member of self missing from other."""
        for d in sorted(self.members):
            if d not in other:
                return Subset(False, d)
        tails = dict(other.tube_tails)
        checks = [(P, self.preproj_from, other.preproj_from), (I, self.preinj_from, other.preinj_from)]
        checks += [(lambda k, pt=pt: R(pt, k), n0, tails.get(pt)) for pt, n0 in self.tube_tails]
        for ctor, start, cover_from in checks:
            if start is not None:
                w = _first_missing(ctor, start, other, cover_from)
                if w is not None:
                    return Subset(False, w)
        if self.regular_upto is not None and (other.regular_upto or 0) < self.regular_upto:
            w = self._missing_regular(other)
            if w is not None:
                return Subset(False, w)
        if self.all_prufer and not other.all_prufer:
            used = {d.point for d in other.members if d.family == "prufer"}
            for pt in self._all_points():
                if pt not in used:
                    return Subset(False, IndecompDescriptor("prufer", 0, pt))
        return Subset(True)

    def _missing_regular(self, other: "ClassDescriptor") -> IndecompDescriptor | None:
        if self.field.is_finite:
            for d in _bounded_regulars(self.field, self.regular_upto):
                if d not in other:
                    return d
            return None
        mentioned = {d.point for d in other.members if d.family == "R"} | {p for p, _ in other.tube_tails}
        for pt in self._all_points():
            if pt not in mentioned:
                return R(pt, 1)
        return None

    # text ------------------------------------------------------------------

    def tokens(self) -> list[str]:
        out = [str(d) for d in sorted(self.members)]
        if self.preproj_from is not None:
            out.append(f"P*>={self.preproj_from}")
        if self.preinj_from is not None:
            out.append(f"I*>={self.preinj_from}")
        out.extend(f"tube[{pt}]>={n0}" for pt, n0 in self.tube_tails)
        if self.regular_upto is not None:
            out.append(f"R*<={self.regular_upto}")
        if self.all_prufer:
            out.append("prufer[*]")
        return out

    def __str__(self) -> str:
        return " ".join(self.tokens()) if self.tokens() else "{}"


def _first_missing(ctor, start: int, other: ClassDescriptor, cover_from: int | None):
    k = start
    while cover_from is None or k < cover_from:
        if ctor(k) not in other:
            return ctor(k)
        k += 1
    return None


def _bounded_regulars(f: Field, bound: int) -> list[IndecompDescriptor]:
    out = []
    for pt in points(f, bound):
        for n in range(1, bound // pt.degree + 1):
            out.append(R(pt, n))
    return out


_FAM = re.compile(r"^(P|I)\*>=(\d+)$|^tube\[(.+)\]>=(\d+)$|^R\*<=(\d+)$|^prufer\[\*\]$")


def _split_tokens(text: str) -> list[str]:
    """Whitespace/comma separated tokens; commas inside brackets are kept."""
    out, cur, depth = [], [], 0
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if depth == 0 and (ch.isspace() or ch == ","):
            if cur:
                out.append("".join(cur))
                cur = []
            continue
        cur.append(ch)
    if cur:
        out.append("".join(cur))
    return out


def parse_class(text: str, f: Field, line: int | None = None) -> ClassDescriptor:
    members = []
    fam: dict = {"tube_tails": []}
    for tok in _split_tokens(text):
        if tok == "{}":
            continue
        m = _FAM.match(tok)
        if not m:
            members.append(parse_descriptor(tok, f, line))
            continue
        if m.group(1) == "P":
            fam["preproj_from"] = int(m.group(2))
        elif m.group(1) == "I":
            fam["preinj_from"] = int(m.group(2))
        elif m.group(3) is not None:
            try:
                pt = parse_point(m.group(3), f)
            except ValueError as exc:
                raise ParseError(str(exc), line) from None
            n0 = int(m.group(4))
            if n0 < 1:
                raise ParseError("tube tails start at length 1 or more", line)
            fam["tube_tails"].append((pt, n0))
        elif m.group(5) is not None:
            fam["regular_upto"] = int(m.group(5))
        else:
            fam["all_prufer"] = True
    return ClassDescriptor.of(f, members, **fam)
