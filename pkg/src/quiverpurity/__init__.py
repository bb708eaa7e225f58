"""Exact purity computations for finitely presented modules over path algebras."""

from .classes import ClassDescriptor, parse_class
from .closure import NotDefinable, fsc_closure, generic_status, is_definable, pinj_basis
from .constructions import ar_translate, construct_D, construct_L, presentation_matrix, transpose
from .decomp import Decomposition, decompose, find_isomorphism, is_isomorphic
from .exactlin import GF, QQ, Field, Mat
from .kronecker import INF, I, IndecompDescriptor, P, R, classify, elem, make, points
from .purity import MatrixSet, PurityReport, ShapeFamily, implies, ind_of_shape, ind_set, is_pure
from .quiver import AlgebraElement, AlgebraMatrix, ParseError, Quiver, kronecker
from .repmod import (
    LEFT,
    RIGHT,
    ModuleMap,
    Representation,
    ShortExact,
    dual,
    gen_rel,
    hom_dim,
    ses_validate,
    tensor,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement", "AlgebraMatrix", "ClassDescriptor", "Decomposition", "Field", "GF", "I",
    "INF", "IndecompDescriptor", "LEFT", "Mat", "MatrixSet", "ModuleMap", "NotDefinable", "P",
    "ParseError", "PurityReport", "QQ", "Quiver", "R", "RIGHT", "Representation", "ShapeFamily",
    "ShortExact", "ar_translate", "classify", "construct_D", "construct_L", "decompose", "dual",
    "elem", "find_isomorphism", "fsc_closure", "gen_rel", "generic_status", "hom_dim", "implies",
    "ind_of_shape", "ind_set", "is_definable", "is_isomorphic", "is_pure", "kronecker", "make",
    "parse_class", "pinj_basis", "points", "presentation_matrix", "ses_validate", "tensor",
    "transpose",
]
