"""Exact arithmetic in the ring E = Z[omega], omega^2 + omega + 1 = 0.

Elements are stored on the basis (1, omega) as integer pairs (a, b), so
omega = (0, 1) and the complex embedding sends (a, b) to a + b*omega with
omega = (-1 + sqrt(-3))/2.  The norm a^2 - a*b + b^2 is multiplicative and
the six units are the powers of 1 + omega, which rotates the plane by 60
degrees.  Every nonzero element has exactly one associate whose argument
lies in [0, 60) degrees; that associate is the canonical choice used for
gcds and prime factorizations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

# Coordinates are declared 64-bit signed.  Python integers never wrap, so
# the contract "overflow is detected and reported" is an explicit range
# check at construction; intermediates (norms, products) stay exact.
COORD_BOUND = 2**63 - 1


def _round_half_down(n: int, d: int) -> int:
    """Nearest integer to n/d with ties rounded toward -infinity (d > 0)."""
    return -((d - 2 * n) // (2 * d))


@dataclass(frozen=True, slots=True)
class EInt:
    a: int
    b: int

    def __post_init__(self) -> None:
        if not (-COORD_BOUND <= self.a <= COORD_BOUND
                and -COORD_BOUND <= self.b <= COORD_BOUND):
            raise OverflowError(f"coordinate out of 64-bit range: ({self.a},{self.b})")

    @classmethod
    def parse(cls, text: str) -> EInt:
        """Inverse of str(): 'a,b' with optional signs and whitespace."""
        parts = text.strip().split(",")
        if len(parts) != 2:
            raise ValueError(f"expected 'a,b', got {text!r}")
        try:
            return cls(int(parts[0]), int(parts[1]))
        except ValueError as exc:
            raise ValueError(f"expected 'a,b', got {text!r}") from exc

    def __str__(self) -> str:
        return f"{self.a},{self.b}"

    def __repr__(self) -> str:
        return f"EInt({self.a}, {self.b})"

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def norm(self) -> int:
        a, b = self.a, self.b
        return a * a - a * b + b * b

    def conj(self) -> EInt:
        return EInt(self.a - self.b, -self.b)

    def is_unit(self) -> bool:
        return self.norm() == 1

    def __add__(self, other: object) -> EInt:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return EInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other: object) -> EInt:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return EInt(self.a - other.a, self.b - other.b)

    def __rsub__(self, other: object) -> EInt:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return EInt(other.a - self.a, other.b - self.b)

    def __neg__(self) -> EInt:
        return EInt(-self.a, -self.b)

    def __mul__(self, other: object) -> EInt:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        # (a1 + b1 w)(a2 + b2 w) with w^2 = -1 - w.
        return EInt(a1 * a2 - b1 * b2, a1 * b2 + a2 * b1 - b1 * b2)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> EInt:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def __divmod__(self, other: object) -> tuple[EInt, EInt]:
        """Euclidean division: q, r with self = q*other + r, N(r) <= 3/4 N(other).

        The exact quotient self/other has omega-coordinates n_a/N and n_b/N;
        rounding each to the nearest integer leaves a fractional error of at
        most 1/2 per coordinate, and N(x + y*omega) <= 3/4 on that square.
        Ties round toward -infinity so the result is a single-valued map.
        """
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero in E")
        sa, sb, oa, ob = self.a, self.b, other.a, other.b
        # self * conj(other), kept as raw integers: may exceed the
        # coordinate range and that is fine for an intermediate.
        na = sa * oa - sa * ob + sb * ob
        nb = sb * oa - sa * ob
        n = oa * oa - oa * ob + ob * ob
        q = EInt(_round_half_down(na, n), _round_half_down(nb, n))
        return q, self - q * other

    def __floordiv__(self, other: object) -> EInt:
        return divmod(self, other)[0]

    def __mod__(self, other: object) -> EInt:
        return divmod(self, other)[1]

    def is_canonical(self) -> bool:
        """True when the argument lies in [0, 60) degrees.

        On the (1, omega) basis that halfplane condition is exactly the
        integer predicate b >= 0 and a > b: the embedding has imaginary
        part b*sqrt(3)/2 and the 60-degree ray is the line a = b.
        """
        return self.b >= 0 and self.a > self.b

    def canonical_associate(self) -> tuple[EInt, EInt]:
        """The unique canonical associate y and the unit u with y = u * x."""
        if self.is_zero():
            raise ValueError("zero has no canonical associate")
        for u in UNITS:
            y = self * u
            if y.is_canonical():
                return y, u
        raise AssertionError("unreachable: some associate is canonical")

    def sector_index(self) -> int:
        """Index k in 0..5 of the 60-degree sector containing the argument."""
        if self.is_zero():
            raise ValueError("zero has no sector")
        for k in range(6):
            if (self * UNITS[(6 - k) % 6]).is_canonical():
                return k
        raise AssertionError("unreachable: sectors cover the plane")


def _coerce(value: object) -> EInt | None:
    if isinstance(value, EInt):
        return value
    if isinstance(value, int):
        return EInt(value, 0)
    return None


ZERO = EInt(0, 0)
ONE = EInt(1, 0)
OMEGA = EInt(0, 1)
# Powers of 1 + omega in rotation order: UNITS[k] has argument 60k degrees.
UNITS = (EInt(1, 0), EInt(1, 1), EInt(0, 1), EInt(-1, 0), EInt(-1, -1), EInt(0, -1))
# The ramified prime above 3, already canonical: (2 + omega)^2 is associated to 3.
LAMBDA = EInt(2, 1)


def gcd(x: EInt, y: EInt) -> EInt:
    """Greatest common divisor, returned as its canonical associate."""
    if x.is_zero() and y.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not y.is_zero():
        x, y = y, x % y
    return x.canonical_associate()[0]


def _xgcd(x: EInt, y: EInt) -> tuple[EInt, EInt, EInt]:
    """(g, s, t) with s*x + t*y = g; g is not normalized."""
    r0, r1 = x, y
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return r0, s0, t0


def divides(d: EInt, x: EInt) -> bool:
    """Whether d | x in E (d nonzero)."""
    if d.is_zero():
        raise ZeroDivisionError("divisibility by zero")
    sa, sb, oa, ob = x.a, x.b, d.a, d.b
    na = sa * oa - sa * ob + sb * ob
    nb = sb * oa - sa * ob
    n = oa * oa - oa * ob + ob * ob
    return na % n == 0 and nb % n == 0


def exact_div(x: EInt, d: EInt) -> EInt:
    """The quotient x/d when d | x; raises ValueError otherwise."""
    if d.is_zero():
        raise ZeroDivisionError("division by zero")
    sa, sb, oa, ob = x.a, x.b, d.a, d.b
    na = sa * oa - sa * ob + sb * ob
    nb = sb * oa - sa * ob
    n = oa * oa - oa * ob + ob * ob
    qa, ra = divmod(na, n)
    qb, rb = divmod(nb, n)
    if ra or rb:
        raise ValueError(f"{d} does not divide {x}")
    return EInt(qa, qb)


def valuation(pi: EInt, x: EInt) -> int:
    """Largest v with pi^v | x, for nonzero x and non-unit nonzero pi."""
    if x.is_zero():
        raise ValueError("valuation of zero is undefined")
    if pi.norm() <= 1:
        raise ValueError("valuation needs a non-unit modulus")
    v = 0
    while divides(pi, x):
        x = exact_div(x, pi)
        v += 1
    return v


class ResidueRing:
    """The quotient E/(mu) on an explicit rectangular transversal.

    The ideal (mu) is the integer column span of mu and omega*mu, i.e. of
    the matrix [[a, -b], [b, a-b]].  Column reduction to Hermite form
    [[d1, 0], [c, d2]] turns the quotient into the box {0..d1-1} x
    {0..d2-1}, which has exactly norm(mu) = d1*d2 points.  Representatives
    are enumerated in lexicographic (i, j) order and reduce() is the
    idempotent map onto them.
    """

    __slots__ = ("modulus", "d1", "d2", "c", "size")

    def __init__(self, modulus: EInt) -> None:
        if modulus.is_zero():
            raise ValueError("modulus must be nonzero")
        self.modulus = modulus
        a, b = modulus.a, modulus.b
        g, s, t = _xgcd_int(a, -b)
        n = modulus.norm()
        c = (s * b + t * (a - b)) % (n // g)
        self.d1 = g
        self.d2 = n // g
        self.c = c
        self.size = n

    def reduce(self, x: EInt) -> EInt:
        u, v = x.a, x.b
        k = u // self.d1
        u -= k * self.d1
        v = (v - k * self.c) % self.d2
        return EInt(u, v)

    def position(self, x: EInt) -> tuple[int, int]:
        """Rank of reduce(x) in enumeration order, as a comparable pair."""
        r = self.reduce(x)
        return r.a, r.b

    def representatives(self) -> Iterator[EInt]:
        for i in range(self.d1):
            for j in range(self.d2):
                yield EInt(i, j)

    def is_reduced_residue(self, x: EInt) -> bool:
        """Whether x is invertible mod mu, i.e. gcd(x, mu) is a unit."""
        if self.reduce(x).is_zero():
            return self.modulus.is_unit()
        return gcd(x, self.modulus).is_unit()

    def reduced_representatives(self) -> Iterator[EInt]:
        for r in self.representatives():
            if self.is_reduced_residue(r):
                yield r

    def inverse(self, x: EInt) -> EInt:
        g, s, _ = _xgcd(x, self.modulus)
        if not g.is_unit():
            raise ValueError(f"{x} is not invertible mod {self.modulus}")
        return self.reduce(s * g.conj())

    def mul(self, x: EInt, y: EInt) -> EInt:
        return self.reduce(x * y)

    def __repr__(self) -> str:
        return f"ResidueRing({self.modulus!r})"


def _xgcd_int(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) over Z with s*a + t*b = g >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def unit_inverse(u: EInt) -> EInt:
    if not u.is_unit():
        raise ValueError(f"{u} is not a unit")
    return u.conj()


__all__ = [
    "COORD_BOUND", "EInt", "ZERO", "ONE", "OMEGA", "UNITS", "LAMBDA",
    "gcd", "divides", "exact_div", "valuation", "ResidueRing", "unit_inverse",
]
