"""Exact algebra backing the complete validity engine."""

from .engine import PolyRing, decide_hdt0l
from .groebner import IdealBasis, buchberger, reduce_poly, s_polynomial
from .matrix2 import FREE_ONE, FREE_TWO, Matrix2, embed_letter, embed_word
from .multipoly import MultiPoly, grevlex_cmp

__all__ = [
    "FREE_ONE",
    "FREE_TWO",
    "IdealBasis",
    "Matrix2",
    "MultiPoly",
    "PolyRing",
    "buchberger",
    "decide_hdt0l",
    "embed_letter",
    "embed_word",
    "grevlex_cmp",
    "reduce_poly",
    "s_polynomial",
]
