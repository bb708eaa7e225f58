import pytest

from quiverpurity.checks import CLOSURE_BATTERY
from quiverpurity.classes import ClassDescriptor, parse_class
from quiverpurity.closure import NotDefinable, fsc_closure, generic_status, is_definable, pinj_basis
from quiverpurity.exactlin import GF, QQ
from quiverpurity.kronecker import GENERIC, I, P, R, elem
from quiverpurity.quiver import ParseError, kronecker, parse_matrix

F = GF(5)


@pytest.mark.parametrize("text,closure,definable,generic", CLOSURE_BATTERY)
def test_closure_battery(text, closure, definable, generic):
    c = parse_class(text, F)
    assert str(fsc_closure(c)) == str(parse_class(closure, F))
    assert is_definable(c) == definable
    if generic is None:
        with pytest.raises(NotDefinable):
            generic_status(c)
    else:
        assert generic_status(c) == generic


def test_class_text_and_membership():
    c = parse_class("P0 P*>=3 R[2,1] tube[inf]>=2 I*>=1", F)
    assert P(5) in c and P(1) not in c
    assert I(4) in c and I(0) not in c
    assert R(elem(2)) in c and R(elem(2), 2) not in c
    assert str(parse_class(str(c), F)) == str(c)
    assert str(ClassDescriptor.of(F)) == "{}"


def test_canonical_merges_members_into_families():
    c = parse_class("P2 P3 P*>=4 I0", F)
    assert str(c) == str(parse_class("I0 P*>=2", F))


def test_subset_witness():
    small = parse_class("P0 I0", F)
    big = parse_class("P*>=0 I*>=1", F)
    res = small.issubset(big)
    assert not res and res.witness == I(0)
    assert parse_class("I*>=3", F).issubset(parse_class("I*>=2", F))


def test_class_parse_errors():
    with pytest.raises(ParseError):
        parse_class("Z9", F, 4)
    with pytest.raises(ParseError):
        parse_class("R[2,0]", F)


def test_finite_classes_are_fixed():
    c = ClassDescriptor.of(F, [P(3), I(0), R(elem(2))])
    assert str(fsc_closure(c)) == str(c)
    assert GENERIC not in fsc_closure(c)


def test_definability_depends_on_the_field():
    # all regulars of bounded length are finitely many only over a finite field
    assert is_definable(parse_class("R*<=1", F))
    assert not is_definable(parse_class("R*<=1", QQ))


def test_pinj_basis():
    q = kronecker()
    h = parse_matrix(["matrix 1 1", "a+2*b"], q, F, 1)
    assert pinj_basis([h]) == [I(0), I(1), R(elem(2))]
    assert pinj_basis([]) == [I(0), I(1)]
