"""Line polar Grassmann codes: local encoding, decoding and correction.

A message is a length-K vector over F_q.  It fills the upper triangle of
an alternating D x D matrix M (row-major over the pairs i < j), and the
codeword component at index r is

    c_r = zeta(G1, G2) = sum_{i<j} M_ij (G1_i G2_j - G1_j G2_i)

where (G1, G2) is the RREF basis of the line ``unrank(r)``.  Only that one
line is needed per component.  Full-codeword encoding caches the table of
all lines (again produced by unranking) as a K x N coefficient matrix.

Message positions are 0-based in this API.  Pair (i, j) with 1-based
i < j sits at 0-based position 2n(i-1) + j - (i^2 - i)/2 - 2 when every
pair carries a symbol (orthogonal, q odd).  When the polar form itself
vanishes on all lines it spans a kernel W and one pair is dropped: (2,3)
for orthogonal codes over even q, (1,2) for symplectic codes.  The
remaining pairs keep their row-major order.

Decoding (orthogonal, q odd) reads K components at auxiliary lines and
back-substitutes.  Local correction votes over the totally singular planes
through the queried line.
"""

from __future__ import annotations

import enum
import random
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .counting import line_count
from .enumerator import Enumerator
from .errors import (
    BadLength,
    BadPair,
    BadParameter,
    EvenCharacteristic,
    IndexOutOfRange,
    LengthMismatch,
    NoPlanes,
    Undecided,
    WrongVariant,
)
from .geometry import GeometrySpec, Variant, singular_planes_through, unit
from .gf import FieldSpec, field_of_order
from .rref import Line, Row, row_reduce, to_rref

Pair = tuple[int, int]  # 0-based, i < j


# --- parameters -----------------------------------------------------------------

@dataclass(frozen=True)
class CodeParams:
    N: int
    K: int
    d: int | None
    variant: Variant
    n: int
    q: int

    def __str__(self) -> str:
        d = "?" if self.d is None else str(self.d)
        return f"N={self.N} K={self.K} d={d}"


def _known_distance(variant: Variant, q: int, n: int) -> int | None:
    if variant is Variant.SYMPLECTIC:
        return q ** (4 * n - 5) - q ** (2 * n - 3)
    if q % 2:
        return q ** (4 * n - 5) - q ** (3 * n - 4)
    if n == 2:
        return q * q * (q - 1)
    return None


def code_params(variant: Variant | str, q: int, n: int) -> CodeParams:
    variant = Variant(variant)
    if n < 2:
        raise BadParameter(f"codes need n >= 2, got {n}")
    if variant is Variant.ORTHOGONAL:
        K = n * (2 * n + 1) - (0 if q % 2 else 1)
    else:
        K = n * (2 * n - 1) - 1
    return CodeParams(line_count(variant, n, q), K, _known_distance(variant, q, n), variant, n, q)


# --- message layout -------------------------------------------------------------

def all_pairs(D: int) -> list[Pair]:
    return [(i, j) for i in range(D) for j in range(i + 1, D)]


def kernel_pairs(variant: Variant, n: int) -> list[Pair]:
    """Support of the polar form viewed as an alternating matrix (0-based)."""
    if variant is Variant.ORTHOGONAL:
        return [(2 * k - 1, 2 * k) for k in range(1, n + 1)]
    return [(2 * k - 2, 2 * k - 1) for k in range(1, n + 1)]


def message_pairs(variant: Variant | str, n: int, q: int) -> list[Pair]:
    variant = Variant(variant)
    D = 2 * n + 1 if variant is Variant.ORTHOGONAL else 2 * n
    pairs = all_pairs(D)
    if variant is Variant.SYMPLECTIC or q % 2 == 0:
        pairs.remove(kernel_pairs(variant, n)[0])
    return pairs


def message_position(i: int, j: int, n: int) -> int:
    """0-based position of the 1-based pair (i, j) when all pairs are used."""
    if not 1 <= i < j <= 2 * n + 1:
        raise BadPair(f"pair ({i}, {j}) is not 1 <= i < j <= {2 * n + 1}")
    return 2 * n * (i - 1) + j - (i * i - i) // 2 - 2


class PairType(enum.Enum):
    TYPE_I = "I"
    TYPE_II = "II"
    TYPE_III = "III"


def classify_pair(i: int, j: int, n: int | None = None) -> PairType:
    """Decoding type of the 1-based pair (i, j)."""
    top = 2 * n + 1 if n is not None else j
    if not 1 <= i < j <= top:
        raise BadPair(f"pair ({i}, {j}) is not 1 <= i < j <= {top}")
    if i == 1:
        return PairType.TYPE_III
    if i % 2 == 0 and j == i + 1:
        return PairType.TYPE_II
    return PairType.TYPE_I


# --- correction policy / report -------------------------------------------------

@dataclass(frozen=True)
class CorrectionPolicy:
    """``max_planes`` limits the planes consulted (None = all of them).

    A plane's verdict counts only if its most common vote has a share
    strictly above ``vote_threshold``.  Across planes the strict plurality
    of verdicts wins; a tie or no verdict at all raises Undecided.
    """

    max_planes: int | None = None
    vote_threshold: float = 0.5


@dataclass
class PlaneVote:
    plane: tuple[Row, Row, Row]
    votes: Counter
    verdict: int | None

    @property
    def total(self) -> int:
        return sum(self.votes.values())


@dataclass
class CorrectionReport:
    position: int
    value: int
    planes: list[PlaneVote] = field(default_factory=list)

    @property
    def tally(self) -> Counter:
        return Counter(p.verdict for p in self.planes if p.verdict is not None)

    def summary(self) -> str:
        lines = [f"position={self.position} value={self.value}"]
        for k, p in enumerate(self.planes):
            votes = " ".join(f"{v}:{c}" for v, c in sorted(p.votes.items()))
            verdict = "-" if p.verdict is None else str(p.verdict)
            lines.append(f"plane {k}: verdict={verdict} votes=[{votes}]")
        return "\n".join(lines)


# --- the code -------------------------------------------------------------------

def _lin_comb(F: FieldSpec, a: int, u: Sequence[int], b: int, v: Sequence[int]) -> Row:
    return tuple(F.add(F.mul(a, x), F.mul(b, y)) for x, y in zip(u, v))


def _solve(F: FieldSpec, A: list[list[int]], rhs: list[int]) -> list[int] | None:
    """Gaussian elimination for a small square system; None if singular."""
    m = len(A)
    M = [list(A[r]) + [rhs[r]] for r in range(m)]
    for col in range(m):
        piv = next((r for r in range(col, m) if M[r][col]), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        inv = F.inv(M[col][col])
        M[col] = [F.mul(inv, x) for x in M[col]]
        for r in range(m):
            if r != col and M[r][col]:
                c = M[r][col]
                M[r] = [F.sub(x, F.mul(c, y)) for x, y in zip(M[r], M[col])]
    return [M[r][m] for r in range(m)]


@dataclass
class _Equation:
    position: int                 # codeword index read
    coeffs: dict[Pair, int]       # c[position] = sum coeffs[p] * M[p]


class PolarCode:
    """The code of one geometry; components are computed through the enumerator."""

    def __init__(self, spec: GeometrySpec):
        if spec.n < 2:
            raise BadParameter(f"codes need n >= 2, got {spec.n}")
        self.spec = spec
        self.field = spec.field
        self.enumerator = Enumerator(spec, memo=True)
        self.params = code_params(spec.variant, spec.q, spec.n)
        self.pairs = message_pairs(spec.variant, spec.n, spec.q)
        self._pair_pos = {p: k for k, p in enumerate(self.pairs)}
        self._dropped = [p for p in all_pairs(spec.D) if p not in self._pair_pos]
        self._plans: dict[int, list] = {}

    @classmethod
    def build(cls, variant: Variant | str, q: int, n: int, modulus: Sequence[int] | None = None) -> "PolarCode":
        return cls(GeometrySpec(Variant(variant), n, field_of_order(q, modulus)))

    # -- layout ----------------------------------------------------------------
    def _check_message(self, m: Sequence[int]) -> None:
        if len(m) != self.params.K:
            raise LengthMismatch(f"message of length {len(m)}, expected {self.params.K}")

    def message_to_form(self, m: Sequence[int]) -> list[list[int]]:
        """Alternating matrix with upper triangle read from the message."""
        self._check_message(m)
        F, D = self.field, self.spec.D
        M = [[0] * D for _ in range(D)]
        for (i, j), x in zip(self.pairs, m):
            M[i][j] = x
            M[j][i] = F.neg(x)
        return M

    def form_to_message(self, M: Sequence[Sequence[int]]) -> list[int]:
        """Upper-triangle entries at the message pairs, after reducing mod W."""
        D = self.spec.D
        if len(M) != D or any(len(r) != D for r in M):
            raise LengthMismatch(f"form must be {D} x {D}")
        F = self.field
        upper = {(i, j): M[i][j] for i, j in all_pairs(D)}
        if self._dropped:
            # subtract the multiple of the kernel functional that clears the dropped pair
            c = upper[self._dropped[0]]
            if c:
                for p in kernel_pairs(self.spec.variant, self.spec.n):
                    upper[p] = F.sub(upper[p], c)
        return [upper[p] for p in self.pairs]

    # -- Pluecker coordinates --------------------------------------------------
    def plucker(self, line: Sequence[Sequence[int]]) -> dict[Pair, int]:
        """Nonzero Pluecker coordinates g1_i g2_j - g1_j g2_i over all pairs."""
        F = self.field
        u, v = line
        out = {}
        for i, j in all_pairs(self.spec.D):
            x = F.sub(F.mul(u[i], v[j]), F.mul(u[j], v[i]))
            if x:
                out[(i, j)] = x
        return out

    def zeta(self, M: Sequence[Sequence[int]], line: Sequence[Sequence[int]]) -> int:
        F = self.field
        s = 0
        for (i, j), x in self.plucker(line).items():
            if M[i][j]:
                s = F.add(s, F.mul(M[i][j], x))
        return s

    def _evaluate(self, m: Sequence[int], line: Line) -> int:
        F = self.field
        P = self.plucker(line)
        s = 0
        for pair, x in zip(self.pairs, m):
            if x and pair in P:
                s = F.add(s, F.mul(x, P[pair]))
        return s

    # -- encoding --------------------------------------------------------------
    def encode_component(self, m: Sequence[int], index: int) -> int:
        self._check_message(m)
        return self._evaluate(m, self.enumerator.unrank(index))

    @cached_property
    def lines(self) -> list[Line]:
        """All lines in index order, produced by unranking 0..N-1."""
        return [self.enumerator.unrank(r) for r in range(self.params.N)]

    @cached_property
    def index_of(self) -> dict[Line, int]:
        return {g: r for r, g in enumerate(self.lines)}

    @cached_property
    def generator(self) -> np.ndarray:
        """K x N matrix whose column r holds the Pluecker coefficients of line r."""
        G = np.zeros((self.params.K, self.params.N), dtype=np.int64)
        for r, g in enumerate(self.lines):
            P = self.plucker(g)
            for k, pair in enumerate(self.pairs):
                G[k, r] = P.get(pair, 0)
        return G

    def encode(self, m: Sequence[int]) -> list[int]:
        self._check_message(m)
        return self.encode_batch([list(m)])[0].tolist()

    def encode_batch(self, messages) -> np.ndarray:
        """Encode a (B, K) array of messages; vectorised over prime fields."""
        msgs = np.asarray(messages, dtype=np.int64)
        if msgs.ndim != 2 or msgs.shape[1] != self.params.K:
            raise LengthMismatch(f"messages must have shape (B, {self.params.K})")
        F = self.field
        if F.is_prime_field:
            return (msgs @ self.generator) % F.p
        mul, add = self._tables
        out = np.zeros((len(msgs), self.params.N), dtype=np.int64)
        for k in range(self.params.K):
            out = add[out, mul[msgs[:, k][:, None], self.generator[k][None, :]]]
        return out

    @cached_property
    def _tables(self) -> tuple[np.ndarray, np.ndarray]:
        F = self.field
        els = list(F.elements())
        mul = np.array([[F.mul(a, b) for b in els] for a in els], dtype=np.int64)
        add = np.array([[F.add(a, b) for b in els] for a in els], dtype=np.int64)
        return mul, add

    # -- decoding --------------------------------------------------------------
    def _require_orthogonal(self) -> None:
        if self.spec.variant is not Variant.ORTHOGONAL:
            raise WrongVariant("only orthogonal codes support decoding and correction")

    @cached_property
    def _decode_plan(self) -> list[tuple[list[_Equation], list[Pair]]]:
        plan = []
        known: set[Pair] = set()
        for name, group in auxiliary_lines(self.spec):
            eqs = [_Equation(self.enumerator.rank(g), self.plucker(g)) for g in group]
            unknowns = sorted({p for eq in eqs for p in eq.coeffs} - known)
            # a chained type II system has one unknown left once its lower pair is known
            eqs = self._square_subset(eqs, unknowns)
            if eqs is None:  # pragma: no cover - structural invariant
                raise AssertionError(f"group {name}: cannot solve for {unknowns}")
            plan.append((eqs, unknowns))
            known.update(unknowns)
        if known != set(self.pairs):  # pragma: no cover
            raise AssertionError("decoder does not cover every message pair")
        return plan

    def _square_subset(self, eqs: list[_Equation], unknowns: list[Pair]) -> list[_Equation] | None:
        """First len(unknowns) equations (in order) with an invertible coefficient block."""
        F = self.field
        for chosen in combinations(eqs, len(unknowns)):
            A = [[eq.coeffs.get(p, 0) for p in unknowns] for eq in chosen]
            if _solve(F, A, [0] * len(A)) is not None:
                return list(chosen)
        return None

    @property
    def decode_positions(self) -> list[int]:
        return [eq.position for eqs, _ in self._decode_plan for eq in eqs]

    def decode(self, c: Sequence[int]) -> list[int]:
        """Message of an error-free codeword (orthogonal codes, q odd)."""
        self._require_orthogonal()
        F = self.field
        if F.p == 2:
            raise EvenCharacteristic("decoding solves a system with determinant -2; q must be odd")
        if len(c) != self.params.N:
            raise BadLength(f"codeword of length {len(c)}, expected {self.params.N}")
        value: dict[Pair, int] = {}
        for eqs, unknowns in self._decode_plan:
            A, rhs = [], []
            for eq in eqs:
                r = c[eq.position]
                for p, x in eq.coeffs.items():
                    if p in value:
                        r = F.sub(r, F.mul(x, value[p]))
                A.append([eq.coeffs.get(p, 0) for p in unknowns])
                rhs.append(r)
            sol = _solve(F, A, rhs)
            if sol is None:  # pragma: no cover - determinant is a unit for q odd
                raise EvenCharacteristic("singular decoding system")
            value.update(zip(unknowns, sol))
        return [value[p] for p in self.pairs]

    # -- local correction ------------------------------------------------------
    def planes_through(self, index: int) -> list[tuple[Row, Row, Row]]:
        self._require_orthogonal()
        if self.spec.n < 3:
            raise NoPlanes(f"no totally singular planes through a line when n = {self.spec.n}")
        return singular_planes_through(self.spec, self.enumerator.unrank(index))

    def _scale(self, u: Row, v: Row, g: Line) -> int:
        """s with plucker(u, v) = s * plucker(g), for span(u, v) = span(g)."""
        F = self.field
        P = self.plucker(g)
        (i, j), x = next(iter(P.items()))
        y = F.sub(F.mul(u[i], v[j]), F.mul(u[j], v[i]))
        return F.div(y, x)

    def voting_pairs(self, index: int, plane: Sequence[Row]) -> list[tuple[int, int, int, int]]:
        """All concurrent voting pairs of a plane through line ``index``.

        Each entry (r_p, a, r_q, b) means  c[index] = a * c[r_p] + b * c[r_q]
        for every codeword, where p and q are distinct lines of the plane,
        both different from the queried line and meeting on it.
        """
        F = self.field
        ell = self.enumerator.unrank(index)
        # a vector of the plane outside ell
        w = next(x for x in plane if len(row_reduce([ell[0], ell[1], x], F)) == 3)
        pts = _points_of_line(F, ell)
        out = []
        for P in pts:
            R = next(x for x in pts if x != P)
            s_ell = self._scale(P, R, ell)
            lines = []
            for mu in F.elements():
                x = _lin_comb(F, 1, w, mu, R)
                g = to_rref([P, x], F)
                lines.append((mu, self.index_of_line(g), self._scale(P, x, g)))
            # P^(w + mu R) - P^(w + nu R) = (mu - nu) P^R
            for k, (mu, rp, sp) in enumerate(lines):
                for nu, rq, sq in lines[k + 1:]:
                    den = F.inv(F.mul(F.sub(mu, nu), s_ell))
                    out.append((rp, F.mul(sp, den), rq, F.neg(F.mul(sq, den))))
        return out

    def index_of_line(self, g: Line) -> int:
        if "index_of" in self.__dict__:
            return self.index_of[g]
        return self.enumerator.rank(g)

    def _voting_plan(self, index: int) -> list[tuple[tuple[Row, Row, Row], list]]:
        plan = self._plans.get(index)
        if plan is None:
            plan = [(pl, self.voting_pairs(index, pl)) for pl in self.planes_through(index)]
            self._plans[index] = plan
        return plan

    def correct_component(
        self, r: Sequence[int], index: int, policy: CorrectionPolicy | None = None
    ) -> CorrectionReport:
        """Majority-vote estimate of component ``index`` of a noisy word."""
        self._require_orthogonal()
        if len(r) != self.params.N:
            raise BadLength(f"received word of length {len(r)}, expected {self.params.N}")
        if not 0 <= index < self.params.N:
            raise IndexOutOfRange(f"index {index} outside [0, {self.params.N})")
        policy = policy or CorrectionPolicy()
        F = self.field
        plan = self._voting_plan(index)
        if not plan:
            raise NoPlanes(f"line {index} lies on no totally singular plane")
        if policy.max_planes is not None:
            plan = plan[: policy.max_planes]
        report_planes = []
        for plane, pairs in plan:
            votes: Counter = Counter(
                F.add(F.mul(a, r[rp]), F.mul(b, r[rq])) for rp, a, rq, b in pairs
            )
            top, cnt = votes.most_common(1)[0]
            verdict = top if cnt > policy.vote_threshold * len(pairs) else None
            report_planes.append(PlaneVote(plane, votes, verdict))
        tally = Counter(p.verdict for p in report_planes if p.verdict is not None)
        ranked = tally.most_common(2)
        if not ranked or (len(ranked) == 2 and ranked[0][1] == ranked[1][1]):
            raise Undecided(f"no clear majority for component {index}: {dict(tally)}")
        return CorrectionReport(index, ranked[0][0], report_planes)

    def locally_correct(self, r: Sequence[int], index: int, policy: CorrectionPolicy | None = None) -> int:
        return self.correct_component(r, index, policy).value

    # -- helpers for experiments -----------------------------------------------
    def random_message(self, rng: random.Random) -> list[int]:
        return [rng.randrange(self.field.q) for _ in range(self.params.K)]


def _points_of_line(F: FieldSpec, ell: Line) -> list[Row]:
    """The q + 1 points of a line, each as a normalised spanning vector."""
    u, v = ell
    pts = [v]
    for lam in F.elements():
        pts.append(_lin_comb(F, 1, u, lam, v))
    return pts


def auxiliary_lines(spec: GeometrySpec) -> list[tuple[str, list[Line]]]:
    """Lines whose components the decoder reads, grouped as they are solved.

    Groups are solved in order; each contributes as many unknowns as it
    has lines once earlier groups are substituted.
    """
    if spec.variant is not Variant.ORTHOGONAL:
        raise WrongVariant("auxiliary decoding lines exist for orthogonal codes only")
    n, D, F = spec.n, spec.D, spec.field
    m1 = F.neg(1)

    def e(*coords: tuple[int, int]) -> Row:
        return unit(D, *coords)

    def ln(u: Row, v: Row) -> Line:
        return to_rref([u, v], F)

    groups: list[tuple[str, list[Line]]] = []
    for i in range(2, D + 1):
        for j in range(i + 1, D + 1):
            if classify_pair(i, j) is PairType.TYPE_I:
                groups.append((f"I({i},{j})", [ln(e((i, 1)), e((j, 1)))]))
    for j in range(4, D + 1):
        groups.append((f"III(1,{j})", [ln(e((1, 1), (2, m1), (3, 1)), e((j, 1)))]))
    groups.append(("III(1,2)", [ln(e((1, 1), (4, m1), (5, 1)), e((2, 1)))]))
    groups.append(("III(1,3)", [ln(e((1, 1), (4, m1), (5, 1)), e((3, 1)))]))
    for i in range(2, 2 * n - 1, 2):
        l1 = ln(e((i, 1), (i + 3, 1)), e((i + 1, 1), (i + 2, m1)))
        l3 = ln(e((1, 1), (i, 1), (i + 1, m1), (i + 3, 1)), e((i, 1), (i + 2, 1)))
        groups.append((f"II({i},{i + 1})+({i + 2},{i + 3})", [l1, l3]))
    return groups


def capacity_bound(q: int) -> int:
    """floor((q^2 + q - 2) / 4), the number of errors the plane vote is claimed to fix."""
    return (q * q + q - 2) // 4


def voting_support(code: PolarCode, index: int) -> list[int]:
    """Codeword positions read by the vote for component ``index``."""
    return sorted({r for _, pairs in code._voting_plan(index) for rp, _, rq, _ in pairs for r in (rp, rq)})


def measure_capacity(
    code: PolarCode,
    max_errors: int,
    trials: int,
    rng: random.Random,
    policy: CorrectionPolicy | None = None,
    targeted: bool = True,
) -> dict[int, float]:
    """Success rate of local correction with e substitutions, e = 1..max_errors.

    Errors never hit the queried position (it is not read by the vote).
    With ``targeted`` they are drawn from the positions the vote reads,
    which is the regime the capacity claim is about; otherwise from the
    whole word.
    """
    F = code.field
    N = code.params.N
    rates = {}
    for e in range(1, max_errors + 1):
        ok = 0
        for _ in range(trials):
            m = code.random_message(rng)
            i = rng.randrange(N)
            c = code.encode(m)
            r = list(c)
            pool = voting_support(code, i) if targeted else [k for k in range(N) if k != i]
            for pos in rng.sample(pool, e):
                r[pos] = F.add(r[pos], rng.randrange(1, F.q))
            try:
                ok += code.locally_correct(r, i, policy) == c[i]
            except Undecided:
                pass
        rates[e] = ok / trials
    return rates


# --- text I/O ---------------------------------------------------------------------

def read_symbols(text: str, length: int, q: int) -> list[int]:
    """Whitespace-separated decimal field elements, length-checked."""
    vals = [int(tok) for tok in text.split()]
    if len(vals) != length:
        raise BadLength(f"read {len(vals)} symbols, expected {length}")
    bad = [v for v in vals if not 0 <= v < q]
    if bad:
        raise ValueError(f"symbol {bad[0]} outside [0, {q})")
    return vals


def format_symbols(vals: Iterable[int]) -> str:
    return " ".join(str(int(v)) for v in vals)


__all__ = [
    "CodeParams",
    "CorrectionPolicy",
    "CorrectionReport",
    "PairType",
    "PolarCode",
    "auxiliary_lines",
    "capacity_bound",
    "classify_pair",
    "code_params",
    "format_symbols",
    "kernel_pairs",
    "measure_capacity",
    "voting_support",
    "message_pairs",
    "message_position",
    "read_symbols",
]
