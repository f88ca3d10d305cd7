"""Brute-force ground truth at desk scale.

Everything here is deliberately naive: lines are found by scanning every
RREF shape, prefix counts by filtering that list, quadric counts by a full
scan of F_q^dim.  None of it shares code with the counting recursion.

Guards: ``q**D`` for line scans and ``q**dim`` for quadric scans default to
2**24, message scans to 2**20.  The environment variable PGC_MAX_ORACLE
overrides all of them.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import TYPE_CHECKING, Callable, Sequence

import numpy as np

from .errors import TooLarge
from .geometry import GeometrySpec
from .gf import FieldSpec
from .rref import Line, Prefix, columns, mat_key

if TYPE_CHECKING:  # pragma: no cover
    from .codec import PolarCode

LINE_GUARD = 2 ** 24
MESSAGE_GUARD = 2 ** 20


def _guard(default: int) -> int:
    env = os.environ.get("PGC_MAX_ORACLE")
    return int(env) if env else default


def _check_size(size: int, default: int, what: str) -> None:
    limit = _guard(default)
    if size > limit:
        raise TooLarge(f"{what}: {size} exceeds oracle guard {limit} (set PGC_MAX_ORACLE)")


@dataclass
class OracleResult:
    lines: list[Line]
    by_prefix: Counter = field(default_factory=Counter)

    def count(self, S: Sequence[Sequence[int]]) -> int:
        return self.by_prefix.get(tuple(tuple(c) for c in S), 0)


def _rref_shapes(D: int, q: int):
    """Every 2 x D RREF matrix of rank 2."""
    for p1 in range(D):
        for p2 in range(p1 + 1, D):
            free1 = [j for j in range(p1 + 1, D) if j != p2]
            free2 = list(range(p2 + 1, D))
            for v1 in product(range(q), repeat=len(free1)):
                r1 = [0] * D
                r1[p1] = 1
                for j, x in zip(free1, v1):
                    r1[j] = x
                r1 = tuple(r1)
                for v2 in product(range(q), repeat=len(free2)):
                    r2 = [0] * D
                    r2[p2] = 1
                    for j, x in zip(free2, v2):
                        r2[j] = x
                    yield r1, tuple(r2)


def enumerate_all_lines(spec: GeometrySpec) -> list[Line]:
    """All totally singular / isotropic lines, sorted by the matrix order."""
    _check_size(spec.q ** spec.D, LINE_GUARD, "line enumeration")
    found = [g for g in _rref_shapes(spec.D, spec.q) if spec.is_singular_pair(*g)]
    found.sort(key=mat_key)
    return found


@lru_cache(maxsize=32)
def oracle(spec: GeometrySpec) -> OracleResult:
    lines = enumerate_all_lines(spec)
    counts: Counter = Counter()
    for g in lines:
        cols = columns(g)
        for t in range(len(cols) + 1):
            counts[cols[:t]] += 1
    return OracleResult(lines, counts)


def prefix_count_bruteforce(spec: GeometrySpec, S: Sequence[Sequence[int]]) -> int:
    return oracle(spec).count(S)


def quadric_solution_count_bruteforce(
    form: Callable[[Sequence[int]], int], c: int, dim: int, field: FieldSpec
) -> int:
    """#{x in F_q^dim : form(x) == c} by a full scan."""
    _check_size(field.q ** dim, LINE_GUARD, "quadric scan")
    return sum(1 for x in product(range(field.q), repeat=dim) if form(x) == c)


def hyperbolic_form(field: FieldSpec) -> Callable[[Sequence[int]], int]:
    """x1 x2 + x3 x4 + ... on a vector of even length."""
    def form(x: Sequence[int]) -> int:
        s = 0
        for i in range(0, len(x) - 1, 2):
            s = field.add(s, field.mul(x[i], x[i + 1]))
        return s
    return form


def singular_subspace_lines_bruteforce(
    field: FieldSpec, dim: int, form: Callable[[Sequence[int]], int], polar: Callable[[Sequence[int], Sequence[int]], int]
) -> int:
    """Count 2-subspaces of F_q^dim on which the quadratic form vanishes."""
    _check_size(field.q ** dim, LINE_GUARD, "subspace scan")
    count = 0
    for g in _rref_shapes(dim, field.q):
        if form(g[0]) == 0 and form(g[1]) == 0 and polar(g[0], g[1]) == 0:
            count += 1
    return count


def message_batches(q: int, K: int, batch: int = 1 << 14):
    """All q**K messages as integer arrays of shape (<=batch, K), in counting order."""
    total = q ** K
    radix = q ** np.arange(K, dtype=np.int64)
    for lo in range(0, total, batch):
        v = np.arange(lo, min(total, lo + batch), dtype=np.int64)
        yield (v[:, None] // radix[None, :]) % q


def weight_enumerate(code: "PolarCode") -> int:
    """Minimum Hamming weight over the codewords of all nonzero messages."""
    q, K = code.field.q, code.params.K
    _check_size(q ** K, MESSAGE_GUARD, "weight enumeration")
    best: int | None = None
    for msgs in message_batches(q, K):
        words = code.encode_batch(msgs)
        weights = np.count_nonzero(words, axis=1)
        weights = weights[np.any(msgs != 0, axis=1)]
        if weights.size:
            w = int(weights.min())
            best = w if best is None else min(best, w)
    if best is None:
        raise TooLarge("code has no nonzero messages")
    return best
