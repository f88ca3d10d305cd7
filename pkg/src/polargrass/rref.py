"""Canonical forms for 2-row matrices.

A *line* is stored as a pair of rows ``(row1, row2)`` of length D, in
reduced row echelon form.  A *prefix* is a tuple of columns
``((alpha_1, beta_1), ..., (alpha_t, beta_t))``: the first t columns of
such a matrix.  Prefixes that cannot be completed are ordinary values;
:func:`is_valid_prefix` reports them.

Column order: ``(a, b) < (c, d)`` lexicographically on the integer
encodings, so ``(0, 0)`` is the smallest column.  Matrices compare
column by column.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import InvalidPrefix, NotRREF, RankDeficient
from .gf import FieldSpec

Row = tuple[int, ...]
Line = tuple[Row, Row]
Column = tuple[int, int]
Prefix = tuple[Column, ...]


def row_reduce(rows: Iterable[Sequence[int]], field: FieldSpec) -> list[Row]:
    """Reduced row echelon form of the row space; zero rows are dropped."""
    mat = [list(r) for r in rows]
    if not mat:
        return []
    width = len(mat[0])
    out: list[list[int]] = []
    for col in range(width):
        pivot = next((r for r in mat if r[col] != 0), None)
        if pivot is None:
            continue
        mat.remove(pivot)
        inv = field.inv(pivot[col])
        pivot = [field.mul(inv, x) for x in pivot]
        reduce_targets = out + mat
        for r in reduce_targets:
            c = r[col]
            if c:
                for j in range(col, width):
                    if pivot[j]:
                        r[j] = field.sub(r[j], field.mul(c, pivot[j]))
        out.append(pivot)
        mat = [r for r in mat if any(r)]
    return [tuple(r) for r in out]


def to_rref(rows: Sequence[Sequence[int]], field: FieldSpec) -> Line:
    """Unique RREF basis of a 2-dimensional row space."""
    reduced = row_reduce(rows, field)
    if len(reduced) != 2:
        raise RankDeficient(f"expected rank 2, got rank {len(reduced)}")
    return reduced[0], reduced[1]


def pivot(row: Sequence[int]) -> int | None:
    return next((i for i, x in enumerate(row) if x != 0), None)


def is_rref_line(line: Sequence[Sequence[int]]) -> bool:
    if len(line) != 2:
        return False
    r1, r2 = line
    if len(r1) != len(r2):
        return False
    p1, p2 = pivot(r1), pivot(r2)
    if p1 is None or p2 is None or p1 >= p2:
        return False
    return r1[p1] == 1 and r2[p2] == 1 and r1[p2] == 0


def check_rref_line(line: Sequence[Sequence[int]]) -> Line:
    """Return ``line`` as a tuple pair, raising NotRREF if it is not RREF."""
    if not is_rref_line(line):
        if len(line) == 2 and (not any(line[0]) or not any(line[1])):
            raise RankDeficient("line has a zero row")
        raise NotRREF(f"matrix {format_matrix(line)} is not in RREF")
    return tuple(line[0]), tuple(line[1])


def columns(line: Line) -> Prefix:
    return tuple(zip(line[0], line[1]))


def line_from_columns(cols: Sequence[Column]) -> Line:
    return tuple(c[0] for c in cols), tuple(c[1] for c in cols)


def _is_echelon_shape(S: Prefix, strict: bool = False) -> bool:
    """Row echelon with leading ones; ``strict`` also wants row 1 zero above row 2's pivot."""
    p1 = p2 = None
    for j, (a, b) in enumerate(S):
        if p1 is None:
            if b != 0:
                return False  # row 2 leads before row 1
            if a != 0:
                if a != 1:
                    return False
                p1 = j
        elif p2 is None:
            if b != 0:
                if b != 1 or (strict and a != 0):
                    return False
                p2 = j
    return True


def _is_rref_shape(S: Prefix) -> bool:
    """S is a leading part of some RREF matrix (ignoring the length bound)."""
    return _is_echelon_shape(S, strict=True)


def is_valid_prefix(S: Prefix, D: int) -> bool:
    """True iff S extends to at least one 2 x D RREF matrix of rank 2."""
    t = len(S)
    if t > D or not _is_rref_shape(S):
        return False
    has_a = any(a for a, _ in S)
    has_b = any(b for _, b in S)
    if not has_a:
        return t <= D - 2
    if not has_b:
        return t <= D - 1
    return True


def to_crref(S: Prefix, field: FieldSpec) -> Prefix:
    """Clear alpha_t by subtracting (alpha_t / beta_t) * row2 from row1.

    Accepts any row echelon prefix with leading ones, so ``1,1;0,1`` maps
    to ``1,0;0,1``.  The row operation does not change the row space, so
    completions correspond one to one.
    """
    if not S or not _is_echelon_shape(S):
        raise InvalidPrefix(f"prefix {format_prefix(S)} is not row echelon with leading ones")
    a_t, b_t = S[-1]
    if a_t == 0 or b_t == 0:
        return S
    lam = field.div(a_t, b_t)
    return tuple((field.sub(a, field.mul(lam, b)), b) for a, b in S)


def all_columns(field: FieldSpec) -> list[Column]:
    """Every column of F_q^2 in ascending order."""
    q = field.q
    return [(a, b) for a in range(q) for b in range(q)]


def col_less(x: Column, y: Column) -> bool:
    return tuple(x) < tuple(y)


def mat_key(line: Line) -> Prefix:
    return columns(line)


def mat_less(g: Line, h: Line) -> bool:
    return mat_key(g) < mat_key(h)


# --- text formats ------------------------------------------------------------

def format_matrix(rows: Iterable[Sequence[int]]) -> str:
    return ";".join(",".join(str(x) for x in r) for r in rows)


def parse_matrix(text: str) -> list[Row]:
    text = text.strip()
    if not text:
        return []
    return [tuple(int(x) for x in r.split(",")) for r in text.split(";")]


def format_prefix(S: Prefix) -> str:
    if not S:
        return ""
    return format_matrix(line_from_columns(S))


def parse_prefix(text: str) -> Prefix:
    """``"1,0;0,1"`` -> ((1, 0), (0, 1)); the empty string is the empty prefix."""
    rows = parse_matrix(text)
    if not rows:
        return ()
    if len(rows) != 2 or len(rows[0]) != len(rows[1]):
        raise ValueError(f"prefix must have two equal-length rows: {text!r}")
    return tuple(zip(rows[0], rows[1]))
