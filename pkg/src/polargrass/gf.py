"""Arithmetic in GF(p^k).

Elements are plain ints in ``[0, q)``: the base-p digits of the value are
the coefficients of a polynomial over GF(p), constant term in the least
significant digit.  The integer value also gives the canonical total order
on the field that the enumerator uses for its column order.

When no modulus is given, the lexicographically smallest monic irreducible
polynomial of degree k is used, where "smallest" means smallest base-p
integer formed by the non-leading coefficients (so x^2+x+1 for GF(4),
x^3+x+1 for GF(8), x^2+1 for GF(9)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .errors import (
    DivisionByZero,
    EvenCharacteristic,
    NonPrime,
    OddCharacteristic,
    ReducibleModulus,
    ZeroInput,
)

# add/sub tables are materialised up to this order (q**2 entries each)
_TABLE_LIMIT = 256


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


# --- polynomials over GF(p): coefficient lists, constant term first ---------

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo the monic-able polynomial m."""
    a = _poly_trim(list(a))
    m = _poly_trim(list(m))
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) >= len(m):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - coef * c) % p
        _poly_trim(a)
    return a


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    poly = _poly_trim(list(poly))
    deg = len(poly) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            divisor = list(low) + [1]
            if not _poly_mod(poly, divisor, p):
                return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Monic irreducible of degree k with smallest base-p low-coefficient value."""
    for v in range(p ** k):
        low = [(v // p ** i) % p for i in range(k)]
        poly = low + [1]
        if is_irreducible(poly, p):
            return tuple(poly)
    raise ReducibleModulus(f"no irreducible polynomial of degree {k} over GF({p})")  # pragma: no cover


@dataclass(frozen=True)
class FieldSpec:
    """The field GF(p^k) with a fixed modulus.

    Build instances with :func:`make_field`; the constructor assumes
    validated inputs.
    """

    p: int
    k: int
    modulus: tuple[int, ...]
    _exp: list[int] = field(default_factory=list, repr=False, compare=False)
    _log: list[int] = field(default_factory=list, repr=False, compare=False)
    _add: list[list[int]] | None = field(default=None, repr=False, compare=False)
    _neg: list[int] = field(default_factory=list, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.k > 1:
            self._build_tables()

    # -- construction helpers ------------------------------------------------
    @property
    def q(self) -> int:
        return self.p ** self.k

    @property
    def char(self) -> int:
        return self.p

    @property
    def is_prime_field(self) -> bool:
        return self.k == 1

    def _digits(self, a: int) -> list[int]:
        p = self.p
        return [(a // p ** i) % p for i in range(self.k)]

    def _from_digits(self, d: Sequence[int]) -> int:
        v = 0
        for c in reversed(d):
            v = v * self.p + c
        return v

    def _add_slow(self, a: int, b: int) -> int:
        p = self.p
        out, place = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * place
            a //= p
            b //= p
            place *= p
        return out

    def _neg_slow(self, a: int) -> int:
        return self._from_digits([(-c) % self.p for c in self._digits(a)])

    def _mul_slow(self, a: int, b: int) -> int:
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        rem = _poly_mod(prod, self.modulus, self.p)
        return self._from_digits(rem + [0] * (self.k - len(rem)))

    def _build_tables(self) -> None:
        q = self.q
        # find a generator of the multiplicative group
        for g in range(2, q):
            exp = [1]
            x = g
            while x != 1:
                exp.append(x)
                x = self._mul_slow(x, g)
            if len(exp) == q - 1:
                break
        else:  # pragma: no cover - every finite field is cyclic
            raise ReducibleModulus("multiplicative group is not cyclic")
        log = [0] * q
        for i, x in enumerate(exp):
            log[x] = i
        object.__setattr__(self, "_exp", exp + exp)
        object.__setattr__(self, "_log", log)
        object.__setattr__(self, "_neg", [self._neg_slow(a) for a in range(q)])
        if q <= _TABLE_LIMIT:
            table = [[self._add_slow(a, b) for b in range(q)] for a in range(q)]
            object.__setattr__(self, "_add", table)

    # -- arithmetic ----------------------------------------------------------
    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self._add is not None:
            return self._add[a][b]
        return self._add_slow(a, b)

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of 0")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.k == 1:
            return pow(a, e, self.p)
        if a == 0:
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> GF(p) -> GF(q)."""
        return n % self.p

    def dot(self, u: Sequence[int], v: Sequence[int]) -> int:
        s = 0
        for a, b in zip(u, v):
            if a and b:
                s = self.add(s, self.mul(a, b))
        return s

    # -- characters ----------------------------------------------------------
    def is_square(self, a: int) -> bool:
        """Quadratic character test for a nonzero element (q odd)."""
        if self.p == 2:
            raise EvenCharacteristic("quadratic character needs odd characteristic")
        if a == 0:
            raise ZeroInput("is_square is defined on nonzero elements")
        return self.pow(a, (self.q - 1) // 2) == 1

    def trace2(self, a: int) -> int:
        """Absolute trace a + a^2 + ... + a^(2^(k-1)) (char 2 only)."""
        if self.p != 2:
            raise OddCharacteristic("absolute trace over GF(2) needs characteristic 2")
        s, x = 0, a
        for _ in range(self.k):
            s = self.add(s, x)
            x = self.mul(x, x)
        return s

    def quadratic_nonzero_root_count(self, a: int, b: int, c: int) -> int:
        """Number of nonzero roots of c + b*lam + a*lam^2.

        Decided from the zero pattern of (c, b, a) and, when all three are
        nonzero (or a, c nonzero for q odd), from the discriminant character
        (q odd) or the trace of ac/b^2 (q even).
        """
        q = self.q
        if c == 0:
            if b == 0:
                return q - 1 if a == 0 else 0
            return 1 if a != 0 else 0
        # c != 0
        if a == 0:
            return 1 if b != 0 else 0
        if self.p == 2:
            if b == 0:
                return 1  # squaring is bijective
            theta = self.trace2(self.div(self.mul(a, c), self.mul(b, b)))
            return 2 if theta == 0 else 0
        disc = self.sub(self.mul(b, b), self.mul(self.from_int(4), self.mul(a, c)))
        if disc == 0:
            return 1
        return 2 if self.is_square(disc) else 0

    # -- serialization -------------------------------------------------------
    def serialize(self) -> str:
        if self.k == 1:
            return f"{self.p},1"
        return ",".join(str(x) for x in (self.p, self.k, *self.modulus))

    def __str__(self) -> str:
        return f"GF({self.q})"


def make_field(p: int, k: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Validated construction of GF(p^k).

    ``modulus`` lists coefficients in ascending order and must be monic of
    degree k; it is ignored for k = 1.
    """
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if k < 1:
        raise ReducibleModulus(f"extension degree must be >= 1, got {k}")
    if k == 1:
        return FieldSpec(p, 1, (0, 1))
    if modulus is None:
        mod = smallest_irreducible(p, k)
    else:
        mod = tuple(int(c) % p for c in modulus)
        if len(_poly_trim(list(mod))) != k + 1 or mod[-1] != 1:
            raise ReducibleModulus(f"modulus {list(modulus)} is not monic of degree {k}")
        if not is_irreducible(mod, p):
            raise ReducibleModulus(f"modulus {list(modulus)} is reducible over GF({p})")
    return FieldSpec(p, k, mod)


def prime_power(q: int) -> tuple[int, int]:
    """Split q = p^k, raising NonPrime when q is not a prime power."""
    if q < 2:
        raise NonPrime(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    if r != 1:
        raise NonPrime(f"{q} is not a prime power")
    return p, k


def field_of_order(q: int, modulus: Sequence[int] | None = None) -> FieldSpec:
    p, k = prime_power(q)
    return make_field(p, k, modulus)


def parse_field(text: str) -> FieldSpec:
    """Inverse of :meth:`FieldSpec.serialize` ("p,k[,modulus...]")."""
    parts = [int(x) for x in text.replace(" ", "").split(",") if x]
    if len(parts) < 2:
        raise ValueError(f"bad field spec {text!r}")
    p, k, mod = parts[0], parts[1], parts[2:]
    return make_field(p, k, mod or None)
