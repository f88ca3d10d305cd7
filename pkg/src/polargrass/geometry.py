"""Ambient forms and totally singular / isotropic subspaces.

Orthogonal variant: V = F_q^(2n+1) with

    q(x) = x1^2 + sum_i x_{2i} x_{2i+1}
    b(x, y) = 2 x1 y1 + sum_i (x_{2i} y_{2i+1} + y_{2i} x_{2i+1})

Symplectic variant: V = F_q^(2n) with

    s(x, y) = sum_i (x_{2i-1} y_{2i} - y_{2i-1} x_{2i})

Coordinates are 1-based in the formulas above and 0-based in code.
The ``partial_*`` helpers accept vectors shorter than D, treating the
missing trailing coordinates as zero; the counting module evaluates the
forms on prefixes this way.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .errors import DimensionMismatch, NotSingularLine, WrongVariant
from .gf import FieldSpec
from .rref import Line, Row, check_rref_line, row_reduce


class Variant(str, enum.Enum):
    ORTHOGONAL = "orth"
    SYMPLECTIC = "symp"


def partial_qform(field: FieldSpec, x: Sequence[int]) -> int:
    t = len(x)
    if t == 0:
        return 0
    s = field.mul(x[0], x[0])
    for i in range(1, t - 1, 2):
        if x[i] and x[i + 1]:
            s = field.add(s, field.mul(x[i], x[i + 1]))
    return s


def partial_bform(field: FieldSpec, x: Sequence[int], y: Sequence[int]) -> int:
    t = min(len(x), len(y))
    if t == 0:
        return 0
    s = field.mul(field.from_int(2), field.mul(x[0], y[0]))
    for i in range(1, t - 1, 2):
        s = field.add(s, field.add(field.mul(x[i], y[i + 1]), field.mul(y[i], x[i + 1])))
    return s


def partial_sform(field: FieldSpec, x: Sequence[int], y: Sequence[int]) -> int:
    t = min(len(x), len(y))
    s = 0
    for i in range(0, t - 1, 2):
        s = field.add(s, field.sub(field.mul(x[i], y[i + 1]), field.mul(y[i], x[i + 1])))
    return s


@dataclass(frozen=True)
class GeometrySpec:
    variant: Variant
    n: int
    field: FieldSpec

    def __post_init__(self) -> None:
        object.__setattr__(self, "variant", Variant(self.variant))
        if self.n < 1:
            raise DimensionMismatch(f"rank parameter n must be >= 1, got {self.n}")

    @property
    def D(self) -> int:
        return 2 * self.n + 1 if self.variant is Variant.ORTHOGONAL else 2 * self.n

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def orthogonal(self) -> bool:
        return self.variant is Variant.ORTHOGONAL

    def _check(self, *vecs: Sequence[int], variant: Variant) -> None:
        if self.variant is not variant:
            raise WrongVariant(f"{variant.value} form requested on a {self.variant.value} geometry")
        for v in vecs:
            if len(v) != self.D:
                raise DimensionMismatch(f"vector of length {len(v)}, expected {self.D}")

    def qform(self, v: Sequence[int]) -> int:
        self._check(v, variant=Variant.ORTHOGONAL)
        return partial_qform(self.field, v)

    def bform(self, u: Sequence[int], v: Sequence[int]) -> int:
        self._check(u, v, variant=Variant.ORTHOGONAL)
        return partial_bform(self.field, u, v)

    def sform(self, u: Sequence[int], v: Sequence[int]) -> int:
        self._check(u, v, variant=Variant.SYMPLECTIC)
        return partial_sform(self.field, u, v)

    def is_singular_pair(self, u: Sequence[int], v: Sequence[int]) -> bool:
        """Whether span(u, v) is totally singular / isotropic (no rank check)."""
        F = self.field
        if self.orthogonal:
            return partial_qform(F, u) == 0 and partial_qform(F, v) == 0 and partial_bform(F, u, v) == 0
        return partial_sform(F, u, v) == 0

    def is_ts_line(self, line: Sequence[Sequence[int]]) -> bool:
        g = check_rref_line(line)
        if len(g[0]) != self.D:
            raise DimensionMismatch(f"line of width {len(g[0])}, expected {self.D}")
        return self.is_singular_pair(*g)

    def __str__(self) -> str:
        return f"{self.variant.value}(n={self.n}, q={self.q})"


def unit(D: int, *coords: tuple[int, int]) -> Row:
    """Vector with the given (1-based index, value) entries; handy for tests."""
    v = [0] * D
    for i, c in coords:
        v[i - 1] = c
    return tuple(v)


def nullspace(rows: Sequence[Sequence[int]], field: FieldSpec, width: int) -> list[Row]:
    """Basis of {x : r . x = 0 for all rows r}."""
    red = row_reduce(rows, field) if rows else []
    pivots = [next(i for i, x in enumerate(r) if x) for r in red]
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for f in free:
        x = [0] * width
        x[f] = 1
        for r, pc in zip(red, pivots):
            x[pc] = field.neg(r[f])
        basis.append(tuple(x))
    return basis


def perp(spec: GeometrySpec, line: Line) -> list[Row]:
    """Basis of the b-orthogonal complement of a line (orthogonal variant)."""
    F, D = spec.field, spec.D
    two = F.from_int(2)
    # b(w, g) is linear in w with coefficient vector:
    funcs = []
    for g in line:
        c = [0] * D
        c[0] = F.mul(two, g[0])
        for i in range(1, D - 1, 2):
            c[i] = g[i + 1]
            c[i + 1] = g[i]
        funcs.append(c)
    return nullspace(funcs, F, D)


def singular_planes_through(spec: GeometrySpec, line: Sequence[Sequence[int]]) -> list[tuple[Row, Row, Row]]:
    """All totally singular 3-spaces containing a totally singular line.

    Each plane is returned as its canonical 3 x D RREF basis; the list is
    sorted.  Vectors w of the perp with q(w) = 0 and w outside the line
    are scanned and ``<line, w>`` is deduplicated by its RREF.
    """
    if not spec.orthogonal:
        raise WrongVariant("plane enumeration is implemented for the orthogonal variant only")
    g = check_rref_line(line)
    if len(g[0]) != spec.D:
        raise DimensionMismatch(f"line of width {len(g[0])}, expected {spec.D}")
    if not spec.is_singular_pair(*g):
        raise NotSingularLine("input line is not totally singular")
    F = spec.field
    basis = perp(spec, g)
    planes: set[tuple[Row, Row, Row]] = set()
    for coeffs in product(range(F.q), repeat=len(basis)):
        w = [0] * spec.D
        for c, b in zip(coeffs, basis):
            if c:
                for j, x in enumerate(b):
                    if x:
                        w[j] = F.add(w[j], F.mul(c, x))
        if partial_qform(F, w) != 0:
            continue
        red = row_reduce([g[0], g[1], w], F)
        if len(red) == 3:
            planes.add((red[0], red[1], red[2]))
    return sorted(planes)


def format_vector(v: Sequence[int]) -> str:
    return ",".join(str(x) for x in v)


def format_plane(plane: Sequence[Sequence[int]]) -> str:
    return ";".join(format_vector(r) for r in plane)
