"""Rank and unrank for lines of a polar line Grassmannian.

The rank of a line G with columns G_1, ..., G_D is

    rank(G) = sum_j  sum_{X < G_j}  n((G_1, ..., G_{j-1}, X), n)

with columns compared lexicographically (see :mod:`rref`).  Indices are
0-based: the smallest line has rank 0 and the largest N - 1.  Unranking
walks the same sums forwards: at each position it takes the first column
whose block of completions contains the remaining index.
"""

from __future__ import annotations

from typing import Sequence

from .counting import CountContext
from .errors import DimensionMismatch, IndexOutOfRange, NotSingularLine
from .geometry import GeometrySpec
from .rref import Column, Line, Prefix, all_columns, check_rref_line, columns, line_from_columns


class Enumerator:
    """Rank/unrank bijection between lines and ``range(N)``."""

    def __init__(self, spec: GeometrySpec, memo: bool = True):
        self.spec = spec
        self.ctx = CountContext.for_spec(spec, memo=memo)
        self._cols = all_columns(spec.field)
        self.N = self.ctx.count((), spec.n)

    def count(self, S: Sequence[Sequence[int]]) -> int:
        return self.ctx.count(S, self.spec.n)

    def allowable(self, S: Sequence[Sequence[int]], X: Column) -> bool:
        """True iff some line has a representation starting with S || X."""
        S = tuple(tuple(c) for c in S)
        if len(S) >= self.spec.D:
            return False
        return self.count(S + (tuple(X),)) > 0

    def rank(self, line: Sequence[Sequence[int]]) -> int:
        g = check_rref_line(line)
        if len(g[0]) != self.spec.D:
            raise DimensionMismatch(f"line of width {len(g[0])}, expected {self.spec.D}")
        if not self.spec.is_singular_pair(*g):
            raise NotSingularLine(f"{g} is not a line of {self.spec}")
        cols = columns(g)
        total = 0
        for j, col in enumerate(cols):
            head = cols[:j]
            for X in self._cols:
                if X >= col:
                    break
                total += self.count(head + (X,))
        return total

    def unrank(self, index: int) -> Line:
        if not 0 <= index < self.N:
            raise IndexOutOfRange(f"index {index} outside [0, {self.N})")
        i = index
        S: Prefix = ()
        for _ in range(self.spec.D):
            for X in self._cols:
                c = self.count(S + (X,))
                if i < c:
                    S = S + (X,)
                    break
                i -= c
            else:  # pragma: no cover - the counts partition every valid prefix
                raise AssertionError(f"no column fits at prefix {S}")
        return line_from_columns(S)


def rank(spec: GeometrySpec, line: Sequence[Sequence[int]]) -> int:
    return Enumerator(spec).rank(line)


def unrank(spec: GeometrySpec, index: int) -> Line:
    return Enumerator(spec).unrank(index)
