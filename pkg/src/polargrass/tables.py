"""Tabulated closed forms for polar space sizes, checked against enumeration.

``TABULATED`` holds the point and line formulas exactly as they are usually
printed for PG(v,q), Q(2v,q), Q+(2v-1,q) and W(2v-1,q).  At q = 2 several of
the printed line formulas disagree with exhaustive counts; :func:`compare`
reports every such case.  The counting module never uses these formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable

from . import counting
from .geometry import GeometrySpec, Variant, partial_qform
from .gf import field_of_order
from .oracle import _check_size, _rref_shapes, LINE_GUARD, hyperbolic_form, oracle, singular_subspace_lines_bruteforce


def _pg_points(v, q):
    return (q ** (v + 1) - 1) // (q - 1)


def _pg_lines(v, q):
    return (q ** v - 1) * (q ** (v + 1) - 1) // ((q * q - 1) * (q - 1))


def _q_points(v, q):
    return (q ** (2 * v) - 1) // (q - 1)


def _q_lines(v, q):
    return (q ** (2 * v - 1) - 1) * (q ** (2 * v) - 1) // ((q * q - 1) * (q - 1))


def _qplus_points(v, q):
    return (q ** v - 1) * (q ** (v - 1) + 1) // (q - 1)


def _qplus_lines(v, q):
    return (q ** (2 * v - 2) - 1) * (q ** v - 1) * (q ** (v - 1) + 1) // ((q * q - 1) * (q - 1))


def _w_points(v, q):
    return (q ** (2 * v) - 1) // (q - 1)


def _w_lines(v, q):
    return (q ** (2 * v - 1) - 1) * (q ** (2 * v - 2) - 1) // ((q - 1) * (q * q - 1))


# name -> (points formula, lines formula); both take (v, q)
TABULATED: dict[str, tuple[Callable[[int, int], int], Callable[[int, int], int]]] = {
    "PG(v,q)": (_pg_points, _pg_lines),
    "Q(2v,q)": (_q_points, _q_lines),
    "Q+(2v-1,q)": (_qplus_points, _qplus_lines),
    "W(2v-1,q)": (_w_points, _w_lines),
}


def _projective_zeros(form, dim: int, q: int) -> int:
    field = field_of_order(q)
    _check_size(q ** dim, LINE_GUARD, "point scan")
    zeros = sum(1 for x in product(range(q), repeat=dim) if any(x) and form(field, x) == 0)
    return zeros // (q - 1)


def enumerated(name: str, v: int, q: int) -> tuple[int, int]:
    """(points, lines) of the named space by exhaustive search."""
    F = field_of_order(q)
    if name == "PG(v,q)":
        dim = v + 1
        return (q ** dim - 1) // (q - 1), sum(1 for _ in _rref_shapes(dim, q))
    if name == "Q(2v,q)":
        pts = _projective_zeros(partial_qform, 2 * v + 1, q)
        return pts, len(oracle(GeometrySpec(Variant.ORTHOGONAL, v, F)).lines)
    if name == "Q+(2v-1,q)":
        form = hyperbolic_form(F)
        pts = _projective_zeros(lambda _f, x: form(x), 2 * v, q)

        def polar(x, y):
            return F.sub(F.sub(form([F.add(a, b) for a, b in zip(x, y)]), form(x)), form(y))

        return pts, singular_subspace_lines_bruteforce(F, 2 * v, form, polar)
    if name == "W(2v-1,q)":
        return (q ** (2 * v) - 1) // (q - 1), len(oracle(GeometrySpec(Variant.SYMPLECTIC, v, F)).lines)
    raise KeyError(name)


def helper_counts(name: str, v: int, q: int) -> tuple[int, int] | None:
    """(points, lines) from the oracle-validated helpers in :mod:`counting`."""
    if name == "Q(2v,q)":
        return counting.parabolic_point_count(v, q), counting.parabolic_line_count(v, q)
    if name == "Q+(2v-1,q)":
        return counting.hyperbolic_point_count(v, q), counting.hyperbolic_line_count(v, q)
    if name == "W(2v-1,q)":
        return counting.symplectic_point_count(v, q), counting.symplectic_line_count(v, q)
    return None


@dataclass(frozen=True)
class TableRow:
    name: str
    v: int
    q: int
    kind: str           # "points" or "lines"
    tabulated: int
    enumerated: int
    helper: int | None

    @property
    def agrees(self) -> bool:
        return self.tabulated == self.enumerated

    def __str__(self) -> str:
        tag = "ok" if self.agrees else "DISCREPANCY"
        helper = "" if self.helper is None else f" helper={self.helper}"
        return (f"{tag:11s} {self.name:11s} v={self.v} q={self.q} {self.kind:6s} "
                f"tabulated={self.tabulated} enumerated={self.enumerated}{helper}")


DEFAULT_GRID = [(2, 2), (2, 3), (3, 2)]  # (v, q)


def compare(grid: list[tuple[int, int]] | None = None) -> list[TableRow]:
    rows = []
    for name, (fp, fl) in TABULATED.items():
        for v, q in grid or DEFAULT_GRID:
            pts, lines = enumerated(name, v, q)
            helper = helper_counts(name, v, q)
            rows.append(TableRow(name, v, q, "points", fp(v, q), pts, helper and helper[0]))
            rows.append(TableRow(name, v, q, "lines", fl(v, q), lines, helper and helper[1]))
    return rows
