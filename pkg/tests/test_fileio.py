import random

import pytest

from quiverpurity.decomp import is_isomorphic
from quiverpurity.exactlin import GF, QQ
from quiverpurity.fileio import (
    parse_field,
    parse_quiver,
    read_matrix_set,
    read_rep,
    read_sequence,
    read_source,
    write_matrix,
    write_modules,
    write_rep,
    write_sequence,
)
from quiverpurity.kronecker import INF, P, R, elem, make
from quiverpurity.quiver import ParseError, kronecker
from quiverpurity.randgen import random_algebra_matrix, random_rep, random_ses
from quiverpurity.repmod import RIGHT

Q = kronecker()


def test_fields_and_quivers():
    assert parse_field("gf 5") == GF(5) == parse_field("GF5")
    assert parse_field("q") == QQ
    with pytest.raises(ParseError):
        parse_field("gf 6")
    q = parse_quiver("custom 3 ; x 1 2 ; y 2 3")
    assert q.num_vertices == 3 and len(q.arrows) == 2


@pytest.mark.parametrize("side", ["left", RIGHT])
def test_rep_round_trip(side):
    rng = random.Random(1)
    for f in (GF(3), QQ):
        m = random_rep(Q, f, [rng.randint(0, 3), rng.randint(0, 3)], rng, side)
        again = read_rep(write_rep(m))
        assert again.side == m.side and again.dims == m.dims and again.mats == m.mats


def test_sequence_round_trip():
    rng = random.Random(2)
    for split in (True, False):
        s = random_ses(Q, GF(5), rng, 4, split=split)
        t = read_sequence(write_sequence(s))
        assert t.f.comps == s.f.comps and t.g.comps == s.g.comps


def test_matrix_set_round_trip_with_shape():
    rng = random.Random(3)
    h = random_algebra_matrix(Q, GF(5), 2, 3, rng)
    text = write_matrix(h) + "shape 2,3\n"
    ms, f, q = read_matrix_set(text)
    assert f == GF(5) and len(ms) == 1 and ms.matrices[0].entries == h.entries
    assert str(ms.shape) == "(2,3)"


def test_sources():
    f = GF(5)
    head = "field gf 5\nquiver kronecker\n"
    assert read_source(head + "class P0 I*>=2").kind == "class"
    assert read_source(head + "shape aleph0,1").kind == "shape"
    assert read_source(head).kind == "matrices"
    mods = read_source(write_modules([make(P(1), f), make(R(INF), f)]))
    assert mods.kind == "modules" and len(mods.value) == 2
    assert is_isomorphic(mods.value[1], make(R(INF), f))
    assert read_source(write_rep(make(R(elem(2)), f))).kind == "modules"


def test_diagnostics_carry_line_numbers():
    head = "field gf 5\nquiver kronecker\n"
    with pytest.raises(ParseError, match="line 5"):
        read_rep(head + "dims 1 1\narrow a\n1 2\narrow b\n1\n")
    with pytest.raises(ParseError, match="line 3"):
        read_rep(head + "dims 1\n")
    with pytest.raises(ParseError, match="unknown arrow"):
        read_rep(head + "dims 1 1\narrow c\n1\n")
    with pytest.raises(ParseError, match="line 1"):
        read_rep("quiver kronecker\n")
    with pytest.raises(ParseError, match="end of file"):
        read_rep(head + "dims 1 1\narrow a\n")


def test_non_exact_sequence_is_rejected():
    f = GF(5)
    m = write_rep(make(R(elem(1)), f)).split("\n", 2)[2]  # body without header
    body = "\n".join(f"module {n}\n{m}" for n in "ABC")
    maps = "map f\nvertex 1\n1\nvertex 2\n1\nmap g\nvertex 1\n1\nvertex 2\n1\n"
    with pytest.raises(ParseError, match="not a short exact sequence"):
        read_sequence("field gf 5\nquiver kronecker\n" + body + maps)


def test_comments_are_ignored():
    text = "# a regular simple\nfield gf 5  # field\nquiver kronecker\ndims 1 1\narrow a\n1\narrow b\n2\n"
    assert read_rep(text).dims == (1, 1)
