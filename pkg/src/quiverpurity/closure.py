"""Full-support closure, definability and pure-injective bases for Kronecker classes.

Only the Kronecker algebra is handled. There every tube is a single
homogeneous tube and "all but at most n(R) - 2 Pruefer modules" means all
of them, so the closure rules below are exact statements for that case.
"""

from __future__ import annotations

from dataclasses import replace

from .classes import ClassDescriptor
from .constructions import ar_translate
from .decomp import decompose
from .kronecker import GENERIC, I, IndecompDescriptor, classify
from .purity import _modules

__all__ = ["NotDefinable", "fsc_closure", "closure_notes", "is_definable", "generic_status",
           "pinj_basis"]


class NotDefinable(ValueError):
    """The class does not satisfy the definability hypothesis."""


def fsc_closure(c: ClassDescriptor) -> ClassDescriptor:
    """Add Adic(pt) for each tube hit infinitely often; add Generic and every Pruefer
    when the preinjective part is infinite. Everything else is a fixed point."""
    extra = {IndecompDescriptor("adic", 0, pt) for pt, _ in c.tube_tails}
    out = replace(c, members=c.members | extra)
    if c.preinj_from is not None:
        out = replace(out, members=out.members | {GENERIC}, all_prufer=True)
    return out.canonical()


def closure_notes(c: ClassDescriptor) -> list[tuple[str, str]]:
    """Per component: how the closure's membership is established."""
    notes = [("finite-dimensional", "unchanged")]
    if c.tube_tails:
        notes.append(("adic", "added for each tube tail"))
    if c.preinj_from is not None:
        notes.append(("generic", "added: preinjective part infinite"))
        notes.append(("prufer", "added: every Pruefer is a member; exact equality of the closure "
                                "with this set is not established"))
    return notes


def is_definable(c: ClassDescriptor) -> bool:
    """Finitely many preprojective and regular members."""
    return c.preproj_from is None and c.regular_part_finite


def generic_status(c: ClassDescriptor) -> bool:
    """Whether the generic module belongs; needs a definable class."""
    if not is_definable(c):
        raise NotDefinable("class is not definable: infinitely many preprojective or regular members")
    return c.preinj_from is not None


def pinj_basis(src, seed: int = 0) -> list[IndecompDescriptor]:
    """Indecomposables of tau of each module in ``src``, plus the two indecomposable injectives."""
    out = {I(0), I(1)}
    for m in _modules(src):
        if not m.quiver.is_kronecker():
            raise ValueError("pinj_basis is implemented for the Kronecker algebra")
        for rep, _ in decompose(ar_translate(m), seed).classes:
            out.add(classify(rep))
    return sorted(out)
