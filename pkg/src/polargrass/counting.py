"""Prefix counting for orthogonal and symplectic line Grassmannians.

``n_q(S, n)`` is the number of totally singular lines of PG(2n, q) (for the
parabolic form q_n on F_q^(2n+1)) whose RREF matrix starts with the
columns S; ``n_s(S, n)`` is the same for totally isotropic lines of the
symplectic space F_q^(2n).

Both are computed by a case split on the shape of S (parity of t, which
rows of S vanish, whether the last column vanishes) that reduces every
prefix to a closed form or to a prefix of the same length one rank down.
No completion is ever enumerated.

Internally prefixes are kept "close to RREF": row echelon with leading
ones and alpha_t = 0 or beta_t = 0.  Such a prefix is generally not RREF
(row 1 may be nonzero above row 2's pivot), but it has the same set of
completions up to the row operation that produced it, so counts agree.
"""

from __future__ import annotations

from typing import Sequence

from .errors import BadParameter, BadParity, InvalidParameters
from .geometry import GeometrySpec, Variant, partial_bform, partial_qform, partial_sform
from .gf import FieldSpec
from .rref import Column, Prefix, is_valid_prefix


# --- quadric / polar space sizes ----------------------------------------------

def hyperbolic_point_count(m: int, q: int) -> int:
    """Points of the hyperbolic quadric Q+(2m-1, q)."""
    if m < 1:
        raise BadParameter(f"Witt index must be >= 1, got {m}")
    return (q ** m - 1) * (q ** (m - 1) + 1) // (q - 1)


def hyperbolic_line_count(m: int, q: int) -> int:
    """Totally singular lines of Q+(2m-1, q).

    Each point lies on as many lines as its residue Q+(2m-3, q) has points,
    and each line has q + 1 points.
    """
    if m < 1:
        raise BadParameter(f"Witt index must be >= 1, got {m}")
    if m == 1:
        return 0
    return hyperbolic_point_count(m, q) * hyperbolic_point_count(m - 1, q) // (q + 1)


def parabolic_point_count(n: int, q: int) -> int:
    """Points of the parabolic quadric Q(2n, q)."""
    if n < 0:
        raise BadParameter(f"n must be >= 0, got {n}")
    return (q ** (2 * n) - 1) // (q - 1)


def parabolic_line_count(n: int, q: int) -> int:
    """Totally singular lines of Q(2n, q)."""
    if n < 0:
        raise BadParameter(f"n must be >= 0, got {n}")
    if n == 0:
        return 0
    return (q ** (2 * n) - 1) * (q ** (2 * n - 2) - 1) // ((q - 1) * (q * q - 1))


def symplectic_point_count(n: int, q: int) -> int:
    """Points of W(2n-1, q), i.e. all points of PG(2n-1, q)."""
    if n < 0:
        raise BadParameter(f"n must be >= 0, got {n}")
    return (q ** (2 * n) - 1) // (q - 1)


def symplectic_line_count(n: int, q: int) -> int:
    """Totally isotropic lines of W(2n-1, q)."""
    if n < 0:
        raise BadParameter(f"n must be >= 0, got {n}")
    if n == 0:
        return 0
    return (q ** (2 * n) - 1) * (q ** (2 * n - 2) - 1) // ((q - 1) * (q * q - 1))


def line_count(variant: Variant, n: int, q: int) -> int:
    if Variant(variant) is Variant.ORTHOGONAL:
        return parabolic_line_count(n, q)
    return symplectic_line_count(n, q)


def _hyperbolic_solutions(c_is_zero: bool, m: int, q: int) -> int:
    """#{x in F_q^(2m) : x1 x2 + ... + x_{2m-1} x_{2m} = -c}."""
    if m == 0:
        return 1 if c_is_zero else 0
    quadric = (q ** m - 1) * (q ** (m - 1) + 1)  # (q - 1) * #points
    if c_is_zero:
        return quadric + 1
    return (q ** (2 * m) - 1 - quadric) // (q - 1)


def eta0(c: int, n: int, t: int, field: FieldSpec) -> int:
    """Solutions in F_q^(2n-t) of the hyperbolic equation q+(x) = -c (t even)."""
    if t % 2 or not 0 <= t <= 2 * n:
        raise BadParity(f"eta0 needs even t in [0, 2n], got t={t}, n={n}")
    return _hyperbolic_solutions(c == 0, n - t // 2, field.q)


def eta1(c: int, n: int, t: int, field: FieldSpec) -> int:
    """Solutions in F_q^(2n-t-1) of q+(x) = -c (t odd)."""
    if t % 2 == 0 or not 0 < t < 2 * n:
        raise BadParity(f"eta1 needs odd t in [1, 2n-1], got t={t}, n={n}")
    return _hyperbolic_solutions(c == 0, n - (t + 1) // 2, field.q)


# --- the counting functions ------------------------------------------------------

def _echelon_ok(S: Sequence[Column], D: int) -> bool:
    """Row echelon with leading ones, and room left for missing pivots.

    Unlike :func:`is_valid_prefix` this does not require row 1 to vanish
    above row 2's pivot, so it accepts the close-to-RREF prefixes produced
    during the recursion.
    """
    t = len(S)
    if t > D:
        return False
    p1 = p2 = None
    for j, (a, b) in enumerate(S):
        if p1 is None:
            if b:
                return False
            if a:
                if a != 1:
                    return False
                p1 = j
        elif p2 is None and b:
            if b != 1:
                return False
            p2 = j
    if p1 is None:
        return t <= D - 2
    if p2 is None:
        return t <= D - 1
    return True


class CountContext:
    """Evaluator for n_q / n_s over a fixed field and variant.

    ``ops`` tallies dispatch steps plus one unit per prefix entry touched
    by a form evaluation or the close-to-RREF transform; it is the cost
    measure used by the complexity checks.  With ``memo=True`` results are
    cached on ``(prefix, n)``.
    """

    def __init__(self, field: FieldSpec, variant: Variant | str, memo: bool = False):
        self.field = field
        self.variant = Variant(variant)
        self.memo: dict[tuple[Prefix, int], int] | None = {} if memo else None
        self.ops = 0

    @classmethod
    def for_spec(cls, spec: GeometrySpec, memo: bool = False) -> "CountContext":
        return cls(spec.field, spec.variant, memo=memo)

    def dim(self, n: int) -> int:
        return 2 * n + 1 if self.variant is Variant.ORTHOGONAL else 2 * n

    def reset_ops(self) -> None:
        self.ops = 0

    def count(self, S: Sequence[Sequence[int]], n: int) -> int:
        """Number of lines of the rank-n geometry whose RREF starts with S."""
        S = tuple((int(a), int(b)) for a, b in S)
        q = self.field.q
        if n < 1:
            raise InvalidParameters(f"n must be >= 1, got {n}")
        if len(S) > self.dim(n):
            raise InvalidParameters(f"prefix length {len(S)} exceeds dimension {self.dim(n)}")
        if any(not (0 <= a < q and 0 <= b < q) for a, b in S):
            raise InvalidParameters("prefix entry outside the field")
        self.ops += 1
        if not is_valid_prefix(S, self.dim(n)):
            return 0
        return self._count(S, n)

    # internal recursion: S is close to RREF, possibly with t > D or bad length
    def _count(self, S: Prefix, n: int) -> int:
        if self.memo is not None:
            key = (S, n)
            hit = self.memo.get(key)
            if hit is not None:
                return hit
        if self.variant is Variant.ORTHOGONAL:
            value = self._nq(S, n)
        else:
            value = self._ns(S, n)
        if self.memo is not None:
            self.memo[(S, n)] = value
        return value

    def _crref(self, S: Prefix) -> Prefix:
        self.ops += len(S)
        a_t, b_t = S[-1]
        if a_t == 0 or b_t == 0:
            return S
        F = self.field
        lam = F.div(a_t, b_t)
        return tuple((F.sub(a, F.mul(lam, b)), b) for a, b in S)

    # -- orthogonal -------------------------------------------------------------
    def _nq(self, S: Prefix, n: int) -> int:
        self.ops += 1
        F, q = self.field, self.field.q
        D, t = 2 * n + 1, len(S)
        if n < 0 or not _echelon_ok(S, D):
            return 0
        if t == 0:
            return parabolic_line_count(n, q)
        A = [a for a, _ in S]
        B = [b for _, b in S]
        if t == D:
            self.ops += 3 * t
            ok = partial_qform(F, A) == 0 and partial_qform(F, B) == 0 and partial_bform(F, A, B) == 0
            return 1 if ok else 0
        S = self._crref(S)
        A = [a for a, _ in S]
        B = [b for _, b in S]
        a_t, b_t = S[-1]
        a_nz, b_nz = any(A), any(B)

        if t % 2 == 0:
            m = n - t // 2
            if a_t == 0 and b_t != 0:
                # last column (0, beta): y_{t+1} and x_{t+1} are solved for
                self.ops += t
                return q ** (2 * n - t) * _hyperbolic_solutions(partial_qform(F, A) == 0, m, q)
            if a_t != 0 and b_t == 0:
                if b_nz:
                    self.ops += t
                    return q ** (2 * n - t) * _hyperbolic_solutions(partial_qform(F, B) == 0, m, q)
                # row 2 is a singular vector of the remaining hyperbolic space
                if m == 0:
                    return 0
                return q ** (2 * m - 1) * hyperbolic_point_count(m, q)
            # last column zero
            if not a_nz:
                # cone over Q+(2m-1, q) with vertex e_{t+1}
                return q * q * hyperbolic_line_count(m, q) + hyperbolic_point_count(m, q)
            reduced = self._count(S[:-1], n - 1)
            if not b_nz:
                # plus lines whose second row is exactly e_{t+1}
                self.ops += t
                return q * q * reduced + _hyperbolic_solutions(partial_qform(F, A) == 0, m, q)
            return q * q * reduced

        # odd t: the prefix covers whole hyperbolic pairs
        m1 = n - (t + 1) // 2
        if a_nz and b_nz:
            self.ops += 3 * t
            qa = partial_qform(F, A)
            qb = partial_qform(F, B)
            bab = partial_bform(F, A, B)
            # nonzero lam with q(A - lam B) = 0
            xi = F.quadratic_nonzero_root_count(qb, F.neg(bab), qa)
            w = (q - 1) * q ** (2 * n - t - 1)
            e0 = _hyperbolic_solutions(True, m1, q)
            e1 = _hyperbolic_solutions(False, m1, q)
            both_nonzero = w * (xi * e0 + (q - 1 - xi) * e1)
            gamma_zero = w * _hyperbolic_solutions(qa == 0, m1, q)
            delta_zero = w * _hyperbolic_solutions(qb == 0, m1, q)
            both_zero = q * q * self._count(S, n - 1)
            return both_nonzero + gamma_zero + delta_zero + both_zero
        if not a_nz:
            # lines inside the nondegenerate hyperbolic space x_1 = ... = x_t = 0
            return hyperbolic_line_count(n - (t - 1) // 2, q)
        # A != 0, B = 0: extensions (0,1), (gamma,0) for gamma != 0, and (0,0)
        self.ops += t
        qa_zero = partial_qform(F, A) == 0
        ext_01 = q ** (2 * n - t - 1) * _hyperbolic_solutions(qa_zero, m1, q)
        ext_g0 = 0 if m1 == 0 else (q - 1) * q ** (2 * m1 - 1) * hyperbolic_point_count(m1, q)
        ext_00 = q * q * self._count(S, n - 1) + _hyperbolic_solutions(qa_zero, m1, q)
        return ext_01 + ext_g0 + ext_00

    # -- symplectic -------------------------------------------------------------
    def _ns(self, S: Prefix, n: int) -> int:
        self.ops += 1
        F, q = self.field, self.field.q
        D, t = 2 * n, len(S)
        if n < 0 or not _echelon_ok(S, D):
            return 0
        if t == 0:
            return symplectic_line_count(n, q)
        A = [a for a, _ in S]
        B = [b for _, b in S]
        if t == D:
            self.ops += t
            return 1 if partial_sform(F, A, B) == 0 else 0
        S = self._crref(S)
        A = [a for a, _ in S]
        B = [b for _, b in S]
        a_nz, b_nz = any(A), any(B)

        if t % 2 == 0:
            m = n - t // 2
            if not a_nz:
                return symplectic_line_count(m, q)
            free = q ** (2 * m) - 1
            if not b_nz:
                return q ** (2 * m - 2) * (free // (q - 1))
            self.ops += t
            if partial_sform(F, A, B) == 0:
                return q ** (2 * m - 1) * free + q ** (2 * m)
            return free * q ** (2 * m - 1)

        if not a_nz:
            return self._count(S + ((0, 0),), n) + self._count(S + ((1, 0),), n)
        if not b_nz:
            return q * self._count(S + ((0, 0),), n) + self._count(S + ((0, 1),), n)
        a_t, b_t = S[-1]
        if a_t == 0 and b_t == 0:
            return q * q * self._count(S + ((0, 0),), n)
        # s(A_gamma, B_delta) = 0 is one nontrivial linear condition on (gamma, delta)
        return q ** (4 * n - 2 * t - 1)


def n_q(S: Sequence[Sequence[int]], n: int, field: FieldSpec) -> int:
    return CountContext(field, Variant.ORTHOGONAL).count(S, n)


def n_s(S: Sequence[Sequence[int]], n: int, field: FieldSpec) -> int:
    return CountContext(field, Variant.SYMPLECTIC).count(S, n)
