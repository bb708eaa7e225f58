"""Plain-text formats for representations, algebra matrices, sequences and classes.

Every file starts with a header::

    field gf 5            # or: field q
    quiver kronecker      # or: quiver custom 3 ; a 1 2 ; b 2 3

and ``#`` starts a comment. A representation continues with ``side``,
``dims`` and one ``arrow <name>`` block per arrow of the working quiver
(the opposite quiver for right modules), ``dim(target)`` rows of
``dim(source)`` integers each.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classes import ClassDescriptor, parse_class
from .exactlin import QQ, Field, GF, Mat
from .quiver import AlgebraMatrix, ParseError, Quiver, kronecker, parse_matrix
from .repmod import LEFT, RIGHT, ModuleMap, Representation, ShortExact, ses_validate, working_quiver

__all__ = [
    "parse_field",
    "parse_quiver",
    "read_rep",
    "write_rep",
    "write_modules",
    "read_matrix_set",
    "write_matrix",
    "read_sequence",
    "write_sequence",
    "read_source",
    "Source",
]


def parse_field(text: str, line: int | None = None) -> Field:
    t = text.replace(" ", "").lower()
    try:
        if t in ("q", "qq", "rationals"):
            return QQ
        if t.startswith("gf"):
            return GF(int(t[2:]))
    except ValueError as exc:
        raise ParseError(str(exc), line) from None
    raise ParseError(f"unknown field {text!r}; use 'gf <p>' or 'q'", line)


def parse_quiver(text: str, line: int | None = None) -> Quiver:
    parts = [p.strip() for p in text.split(";")]
    head = parts[0].split()
    if head == ["kronecker"]:
        return kronecker()
    if len(head) != 2 or head[0] != "custom":
        raise ParseError("expected 'kronecker' or 'custom <nv> ; <name> <src> <tgt> ; ...'", line)
    try:
        nv = int(head[1])
        arrows = []
        for p in parts[1:]:
            name, s, t = p.split()
            arrows.append((name, int(s), int(t)))
        return Quiver.from_spec(nv, arrows)
    except ValueError as exc:
        raise ParseError(f"bad quiver: {exc}", line) from None


class _Lines:
    """Cursor over meaningful lines, keeping 1-based line numbers."""

    def __init__(self, text: str):
        self.items = []
        for i, raw in enumerate(text.splitlines(), start=1):
            s = raw.split("#", 1)[0].strip()
            if s:
                self.items.append((i, s))
        self.pos = 0

    def peek(self):
        return self.items[self.pos] if self.pos < len(self.items) else (None, None)

    def next(self, what: str):
        if self.pos >= len(self.items):
            last = self.items[-1][0] if self.items else 1
            raise ParseError(f"unexpected end of file, expected {what}", last)
        self.pos += 1
        return self.items[self.pos - 1]

    def keyword(self, kw: str) -> tuple[int, str]:
        ln, s = self.next(f"'{kw}'")
        word, _, rest = s.partition(" ")
        if word != kw:
            raise ParseError(f"expected '{kw}', got {word!r}", ln)
        return ln, rest.strip()

    def done(self) -> bool:
        return self.pos >= len(self.items)


def _header(cur: _Lines) -> tuple[Field, Quiver]:
    ln, rest = cur.keyword("field")
    f = parse_field(rest, ln)
    ln, rest = cur.keyword("quiver")
    return f, parse_quiver(rest, ln)


def _ints(s: str, ln: int, count: int) -> list[str]:
    toks = s.split()
    if len(toks) != count:
        raise ParseError(f"expected {count} entries, got {len(toks)}", ln)
    return toks


def _matrix_block(cur: _Lines, f: Field, rows: int, cols: int) -> Mat:
    if not cols:
        return Mat.zeros(f, rows, 0)
    data = []
    for _ in range(rows):
        ln, s = cur.next("a matrix row")
        toks = _ints(s, ln, cols)
        try:
            data.append([f.parse(t) for t in toks])
        except ValueError as exc:
            raise ParseError(str(exc), ln) from None
    return Mat.from_rows(f, data, rows, cols)


def _rep_body(cur: _Lines, f: Field, q: Quiver, side: str | None = None) -> Representation:
    if cur.peek()[1] and cur.peek()[1].startswith("side"):
        ln, rest = cur.keyword("side")
        if rest not in (LEFT, RIGHT):
            raise ParseError("side must be 'left' or 'right'", ln)
        side = rest
    side = side or LEFT
    ln, rest = cur.keyword("dims")
    try:
        dims = [int(t) for t in _ints(rest, ln, q.num_vertices)]
    except ValueError:
        raise ParseError("dims must be integers", ln) from None
    if any(d < 0 for d in dims):
        raise ParseError("dims must be nonnegative", ln)
    wq = working_quiver(q, side)
    mats = {}
    for _ in wq.arrows:
        ln, name = cur.keyword("arrow")
        try:
            a = wq.arrow(name)
        except KeyError:
            raise ParseError(f"unknown arrow {name!r}", ln) from None
        if name in mats:
            raise ParseError(f"arrow {name!r} given twice", ln)
        mats[name] = _matrix_block(cur, f, dims[a.target], dims[a.source])
    return Representation(q, f, side, dims, mats)


def read_rep(text: str) -> Representation:
    cur = _Lines(text)
    f, q = _header(cur)
    rep = _rep_body(cur, f, q)
    if not cur.done():
        raise ParseError("trailing content after representation", cur.peek()[0])
    return rep


def _fmt_mat(m: Mat) -> list[str]:
    if m.cols == 0:
        return []
    return [" ".join(str(x) for x in row) for row in m.tolist()]


def _header_lines(f: Field, q: Quiver) -> list[str]:
    return [f"field {'q' if not f.is_finite else f'gf {f.p}'}", f"quiver {q.spec_text()}"]


def _rep_lines(m: Representation) -> list[str]:
    out = [f"side {m.side}", "dims " + " ".join(map(str, m.dims))]
    for a, mat in zip(m.wq.arrows, m.mats):
        out.append(f"arrow {a.name}")
        out.extend(_fmt_mat(mat))
    return out


def write_rep(m: Representation) -> str:
    return "\n".join(_header_lines(m.field, m.quiver) + _rep_lines(m)) + "\n"


def write_modules(mods) -> str:
    """Several representations as ``module`` blocks under one header."""
    mods = list(mods)
    out = _header_lines(mods[0].field, mods[0].quiver)
    for m in mods:
        out.append("module")
        out.extend(_rep_lines(m))
    return "\n".join(out) + "\n"


def write_matrix(h: AlgebraMatrix) -> str:
    return "\n".join(_header_lines(h.field, h.quiver) + [h.to_text()]) + "\n"


def _matrix_from(cur: _Lines, f: Field, q: Quiver) -> AlgebraMatrix:
    ln, s = cur.next("'matrix <n> <m>'")
    head = s.split()
    try:
        n = int(head[1]) if len(head) == 3 and head[0] == "matrix" else -1
    except ValueError:
        n = -1
    if n < 0:
        raise ParseError("expected 'matrix <n> <m>'", ln)
    block = [s]
    first = ln
    for _ in range(n):
        ln, row = cur.next("a matrix row")
        block.append(row)
    return parse_matrix(block, q, f, first)


def read_matrix_set(text: str):
    """Matrices of a matrix-set file, with an optional ``shape r,c`` tag."""
    from .purity import MatrixSet, ShapeFamily

    cur = _Lines(text)
    f, q = _header(cur)
    mats = []
    shape = None
    while not cur.done():
        ln, s = cur.peek()
        if s.startswith("shape"):
            cur.next("shape")
            try:
                shape = ShapeFamily.parse(s[5:])
            except ValueError as exc:
                raise ParseError(str(exc), ln) from None
            continue
        mats.append(_matrix_from(cur, f, q))
    return MatrixSet(mats, shape), f, q


def read_sequence(text: str) -> ShortExact:
    """Modules A, B, C then maps f: A -> B and g: B -> C, one matrix per vertex."""
    cur = _Lines(text)
    f, q = _header(cur)
    mods = {}
    for name in "ABC":
        ln, rest = cur.keyword("module")
        if rest != name:
            raise ParseError(f"expected 'module {name}'", ln)
        mods[name] = _rep_body(cur, f, q)
    maps = {}
    for name, (src, tgt) in (("f", ("A", "B")), ("g", ("B", "C"))):
        ln, rest = cur.keyword("map")
        if rest != name:
            raise ParseError(f"expected 'map {name}'", ln)
        comps = []
        for v in range(q.num_vertices):
            ln, rest = cur.keyword("vertex")
            if rest != str(v + 1):
                raise ParseError(f"expected 'vertex {v + 1}'", ln)
            comps.append(_matrix_block(cur, f, mods[tgt].dims[v], mods[src].dims[v]))
        try:
            maps[name] = ModuleMap(mods[src], mods[tgt], comps)
        except ValueError as exc:
            raise ParseError(f"map {name}: {exc}", ln) from None
    s = ses_validate(maps["f"], maps["g"])
    if not s:
        raise ParseError(f"not a short exact sequence: {s.reason} ({s.detail})", ln)
    return s


def write_sequence(s: ShortExact) -> str:
    out = _header_lines(s.b.field, s.b.quiver)
    for name, m in zip("ABC", (s.a, s.b, s.c)):
        out.append(f"module {name}")
        out.extend(_rep_lines(m))
    for name, h in (("f", s.f), ("g", s.g)):
        out.append(f"map {name}")
        for v, c in enumerate(h.comps):
            out.append(f"vertex {v + 1}")
            out.extend(_fmt_mat(c))
    return "\n".join(out) + "\n"


@dataclass
class Source:
    """Something with an ind-class: matrices, modules, a shape or a symbolic class."""

    kind: str  # matrices | modules | shape | class
    value: object
    field: Field
    quiver: Quiver


def read_source(text: str) -> Source:
    """A matrix-set file, a representation file, ``module`` blocks, ``shape r,c`` or ``class <tokens>``."""
    from .purity import ShapeFamily

    cur = _Lines(text)
    f, q = _header(cur)
    ln, s = cur.peek()
    if s is None:
        from .purity import MatrixSet

        return Source("matrices", MatrixSet([]), f, q)
    if s.startswith("class"):
        body = " ".join(t for _, t in cur.items[cur.pos:])[len("class"):]
        return Source("class", parse_class(body, f, ln), f, q)
    if s.startswith("shape") and len(cur.items) == cur.pos + 1:
        try:
            return Source("shape", ShapeFamily.parse(s[5:]), f, q)
        except ValueError as exc:
            raise ParseError(str(exc), ln) from None
    if s.startswith(("side", "dims")):
        return Source("modules", [read_rep(text)], f, q)
    if s.startswith("module"):
        mods = []
        while not cur.done():
            cur.keyword("module")
            mods.append(_rep_body(cur, f, q))
        return Source("modules", mods, f, q)
    ms, _, _ = read_matrix_set(text)
    return Source("matrices", ms, f, q)
