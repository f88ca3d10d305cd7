"""Enumerative coding for line polar Grassmannians.

Rank and unrank the totally singular lines of a parabolic quadric Q(2n, q)
or the totally isotropic lines of a symplectic space W(2n-1, q), and use
the bijection to encode, decode and locally correct the associated codes.
"""

from __future__ import annotations

from .codec import CodeParams, CorrectionPolicy, PolarCode, code_params
from .counting import CountContext, n_q, n_s
from .enumerator import Enumerator, rank, unrank
from .errors import PolarError
from .geometry import GeometrySpec, Variant
from .gf import FieldSpec, field_of_order, make_field

__all__ = [
    "CodeParams",
    "CorrectionPolicy",
    "CountContext",
    "Enumerator",
    "FieldSpec",
    "GeometrySpec",
    "PolarCode",
    "PolarError",
    "Variant",
    "code_params",
    "field_of_order",
    "make_field",
    "n_q",
    "n_s",
    "rank",
    "unrank",
]
