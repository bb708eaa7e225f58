"""Command-line front end.

Exit codes: 0 success, 1 verdict or property failure, 2 input error.
Every report carries the seed; ``--format machine`` prints ``key=value`` lines.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import checks
from .classes import ClassDescriptor, parse_class
from .closure import NotDefinable, closure_notes, fsc_closure, generic_status, is_definable, pinj_basis
from .constructions import ar_translate, construct_D, construct_L, transpose
from .decomp import decompose
from .exactlin import Field
from .fileio import (
    Source,
    parse_field,
    read_matrix_set,
    read_rep,
    read_sequence,
    read_source,
    write_modules,
    write_rep,
)
from .kronecker import ClassifyError, classify, make, parse_descriptor
from .purity import DEFAULT_METHODS, METHODS, ShapeFamily, implies, ind_class, ind_of_shape, is_pure
from .quiver import ParseError
from .repmod import gen_rel

DEFAULT_FIELD = "gf5"


class InputError(Exception):
    """Bad user input; exit code 2."""


class Report:
    def __init__(self, seed: int):
        self.pairs: list[tuple[str, object]] = [("seed", seed)]
        self.text: list[str] | None = None  # overrides the default text rendering
        self.status = 0
        self.payload: str | None = None  # a file printed instead of the report

    def add(self, key: str, value) -> None:
        if isinstance(value, bool):
            value = str(value).lower()
        self.pairs.append((key, value))

    def render(self, fmt: str) -> str:
        if fmt == "machine":
            return "".join(f"{k}={v}\n" for k, v in self.pairs)
        body = self.text if self.text is not None else [f"{k}: {v}" for k, v in self.pairs[1:]]
        return "".join(f"{line}\n" for line in body) + f"seed: {self.pairs[0][1]}\n"


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _field(args, found: Field | None = None) -> Field:
    if found is not None:
        if args.field is not None and parse_field(args.field) != found:
            raise InputError(f"--field {args.field} conflicts with the input file field {found}")
        return found
    return parse_field(args.field or DEFAULT_FIELD)


def _need(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise InputError(f"--{name.replace('_', '-')} is required")
    return value


def _rep(args):
    m = read_rep(_read_text(_need(args, "input")))
    _field(args, m.field)
    return m


def _single_matrix(args):
    ms, f, _ = read_matrix_set(_read_text(_need(args, "input")))
    _field(args, f)
    if len(ms) != 1:
        raise InputError(f"expected exactly one matrix, found {len(ms)}")
    return ms.matrices[0]


def _emit(args, rep: Report, payload: str) -> Report:
    """Write a file payload to --output, or print it after a seed comment."""
    if args.output:
        Path(args.output).write_text(payload)
        rep.add("output", args.output)
    else:
        rep.payload = f"# seed={rep.pairs[0][1]}\n" + payload
    return rep


# subcommands ------------------------------------------------------------------


def cmd_construct(args, rep: Report, which: str) -> Report:
    h = _single_matrix(args)
    m = construct_L(h) if which == "l" else construct_D(h)
    return _emit(args, rep, write_rep(m))


def cmd_make(args, rep: Report) -> Report:
    f = _field(args)
    d = parse_descriptor(_need(args, "descriptor"), f)
    return _emit(args, rep, write_rep(make(d, f)))


def cmd_decompose(args, rep: Report) -> Report:
    m = _rep(args)
    dec = decompose(m, args.seed)
    kron = m.quiver.is_kronecker() and m.side == "left"
    rep.text = []
    for k, (piece, mult) in enumerate(dec.classes, start=1):
        name = str(classify(piece)) if kron else "dims(" + ",".join(map(str, piece.dims)) + ")"
        rep.add(f"summand.{k}", name)
        rep.add(f"multiplicity.{k}", mult)
        rep.text.append(f"{name}" + (f" ^{mult}" if mult > 1 else ""))
    ok = dec.verify()
    rep.add("verified", ok)
    rep.text.append(f"witness verified: {str(ok).lower()}")
    if args.output and dec.classes:
        Path(args.output).write_text(write_modules(p for p, _ in dec.classes))
        rep.add("output", args.output)
    rep.status = 0 if ok else 1
    return rep


def cmd_classify(args, rep: Report) -> Report:
    m = _rep(args)
    try:
        d = classify(m)
    except ClassifyError as exc:
        rep.add("indecomposable", False)
        rep.add("reason", exc)
        rep.status = 1
        return rep
    rep.add("descriptor", d)
    rep.text = [str(d)]
    return rep


def cmd_transpose(args, rep: Report, tau: bool) -> Report:
    m = _rep(args)
    return _emit(args, rep, write_rep(ar_translate(m) if tau else transpose(m)))


def cmd_gen_rel(args, rep: Report) -> Report:
    g = gen_rel(_rep(args))
    for k in ("gen", "rel", "Gen", "Rel"):
        rep.add(k, getattr(g, k))
    return rep


def _methods(text: str | None) -> tuple[str, ...]:
    if text is None:
        return DEFAULT_METHODS
    if text == "all":
        return METHODS
    out = tuple(t.strip() for t in text.split(",") if t.strip())
    bad = [t for t in out if t not in METHODS]
    if bad or not out:
        raise InputError(f"unknown method(s) {','.join(bad) or text!r}; choose from {','.join(METHODS)} or all")
    return out


def cmd_is_pure(args, rep: Report) -> Report:
    s = read_sequence(_read_text(_need(args, "seq")))
    ms, f, _ = read_matrix_set(_read_text(_need(args, "matrices")))
    _field(args, s.b.field)
    if f != s.b.field:
        raise InputError("sequence and matrices are over different fields")
    res = is_pure(s, ms, _methods(args.method))
    for line in res.lines():
        k, _, v = line.partition("=")
        rep.add(k, v)
    rep.status = 0 if res.verdict == "pure" else 1
    return rep


def _source(spec: str, args):
    """A file path, or inline ``shape=r,c`` / ``class=<tokens>``."""
    if spec.startswith("shape="):
        return ShapeFamily.parse(spec[6:]), _field(args)
    if spec.startswith("class="):
        f = _field(args)
        return parse_class(spec[6:], f), f
    src: Source = read_source(_read_text(spec))
    return src.value, _field(args, src.field)


def cmd_compare(args, rep: Report) -> Report:
    (t, ft), (s, fs) = _source(args.t, args), _source(args.s, args)
    if ft != fs:
        raise InputError("the two sources are over different fields")
    fwd = implies(t, s, ft, args.seed)
    back = implies(s, t, ft, args.seed)
    rep.add("t_implies_s", fwd.holds)
    if not fwd:
        rep.add("witness_s_not_t", fwd.witness)
    rep.add("s_implies_t", back.holds)
    if not back:
        rep.add("witness_t_not_s", back.witness)
    rep.add("equivalent", fwd.holds and back.holds)
    return rep


def cmd_ind_of_shape(args, rep: Report) -> Report:
    c = ind_of_shape(ShapeFamily.parse(_need(args, "shape")), _field(args))
    rep.add("class", c)
    rep.add("finite", c.is_finite)
    if c.is_finite:
        rep.add("count", len(c.enumerate()))
    return rep


def _class_arg(args) -> ClassDescriptor:
    if args.descriptor is not None:
        return parse_class(args.descriptor, _field(args))
    src = read_source(_read_text(_need(args, "input")))
    f = _field(args, src.field)
    if src.kind == "class":
        return src.value
    return ind_class(src.value, f, args.seed)


def cmd_pinj_basis(args, rep: Report) -> Report:
    src = read_source(_read_text(_need(args, "input")))
    _field(args, src.field)
    if src.kind not in ("matrices", "modules"):
        raise InputError("pinj-basis needs matrices or modules")
    basis = pinj_basis(src.value, args.seed)
    rep.add("basis", " ".join(map(str, basis)))
    rep.add("count", len(basis))
    return rep


def cmd_closure(args, rep: Report) -> Report:
    c = _class_arg(args)
    rep.add("input", c)
    rep.add("closure", fsc_closure(c))
    for comp, status in closure_notes(c):
        rep.add(f"note.{comp}", status)
    return rep


def cmd_definable(args, rep: Report) -> Report:
    c = _class_arg(args)
    rep.add("class", c)
    rep.add("definable", is_definable(c))
    return rep


def cmd_generic_status(args, rep: Report) -> Report:
    c = _class_arg(args)
    rep.add("class", c)
    try:
        rep.add("generic", generic_status(c))
    except NotDefinable as exc:
        rep.add("definable", False)
        rep.add("reason", exc)
        rep.status = 1
    return rep


def cmd_example(args, rep: Report) -> Report:
    f = _field(args)
    if not f.is_finite:
        raise InputError("example-4-3 enumerates the points of the line; use a finite field")
    if args.n < 1:
        raise InputError("--n must be at least 1")
    rep.add("field", f)
    rep.add("n", args.n)
    results = checks.example_claims(args.n, f, args.seed)
    for c in results:
        for line in c.lines():
            k, _, v = line.partition("=")
            rep.add(k, v)
    rep.add("all_claims", all(c.passed for c in results))
    rep.status = 0 if all(c.passed for c in results) else 1
    return rep


def run_suites(name: str, seed: int) -> list[checks.Check]:
    if name == "all":
        names = list(checks.SUITES)
    elif name in checks.SUITES:
        names = [name]
    else:
        raise InputError(f"unknown suite {name!r}; choose from all,{','.join(checks.SUITES)}")
    seen, out = set(), []
    for n in names:
        for c in checks.SUITES[n](seed):
            if c.name not in seen:
                seen.add(c.name)
                out.append(c)
    return out


def cmd_verify(args, rep: Report) -> Report:
    results = run_suites(args.suite, args.seed)
    for c in results:
        for line in c.lines():
            k, _, v = line.partition("=")
            rep.add(k, v)
    failed = [c.name for c in results if not c.passed]
    rep.add("summary.passed", len(results) - len(failed))
    rep.add("summary.failed", len(failed))
    if failed:
        rep.add("summary.failures", " ".join(failed))
    rep.status = 1 if failed else 0
    return rep


# argument parsing ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default=None, help="gf<p> or q (default gf5; input files carry their own)")
    common.add_argument("--seed", type=int, default=checks.DEFAULT_SEED)
    common.add_argument("--format", choices=("text", "machine"), default="text")
    common.add_argument("--input", help="input file ('-' for stdin)")
    common.add_argument("--output", help="write the resulting file here")

    p = argparse.ArgumentParser(prog="quiverpurity", description="Purity computations over path algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, **kw):
        sp = sub.add_parser(name, parents=[common], help=help_text, **kw)
        sp.set_defaults(func=func)
        return sp

    add("construct-l", lambda a, r: cmd_construct(a, r, "l"), "L_H from a one-matrix file")
    add("construct-d", lambda a, r: cmd_construct(a, r, "d"), "D_H from a one-matrix file")
    add("make", cmd_make, "standard Kronecker module of a descriptor").add_argument("--descriptor")
    add("decompose", cmd_decompose, "indecomposable summands with multiplicities")
    add("classify", cmd_classify, "name an indecomposable Kronecker module")
    add("transpose", lambda a, r: cmd_transpose(a, r, False), "Auslander-Bridger transpose")
    add("translate", lambda a, r: cmd_transpose(a, r, True), "Auslander-Reiten translate")
    add("gen-rel", cmd_gen_rel, "generator and relation counts")
    sp = add("is-pure", cmd_is_pure, "purity of a sequence against a matrix set")
    sp.add_argument("--seq")
    sp.add_argument("--matrices")
    sp.add_argument("--method", help=f"comma list from {','.join(METHODS)}, or all")
    sp = add("compare-purity", cmd_compare, "compare T-purity and S-purity")
    sp.add_argument("t", help="file, shape=r,c or class=<tokens>")
    sp.add_argument("s", help="file, shape=r,c or class=<tokens>")
    add("ind-of-shape", cmd_ind_of_shape, "indecomposables of a shape family").add_argument(
        "--shape", help="r,c with aleph0 allowed, e.g. aleph0,1")
    add("pinj-basis", cmd_pinj_basis, "indecomposable summands of the pure-injective basis")
    for name, func in (("closure", cmd_closure), ("definable", cmd_definable),
                       ("generic-status", cmd_generic_status)):
        add(name, func, f"{name} of a class").add_argument("--descriptor", help="inline class tokens")
    add("example-4-3", cmd_example, "the Kronecker worked example").add_argument("--n", type=int, default=1)
    add("verify", cmd_verify, "run invariant suites").add_argument("--suite", default="all")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    rep = Report(args.seed)
    try:
        rep = args.func(args, rep)
    except (ParseError, InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(rep.payload if rep.payload is not None else rep.render(args.format))
    return rep.status


if __name__ == "__main__":
    sys.exit(main())
