"""Prime factorization over Z and over E, with the counting functions
omega (distinct primes) and tau (divisors, associates counted separately).

Rational factorization is trial division against a shared sieve followed by
Brent's cycle-finding splitter; primality of cofactors is decided by a
Miller-Rabin base set that is deterministic far beyond 64-bit inputs.
Factorization in E rides on the rational factorization of the norm: 3
ramifies onto (2,1), primes 2 mod 3 stay prime, and primes 1 mod 3 split
into a conjugate pair found via a cube root of unity.
"""

from __future__ import annotations

import math
import os
import random
from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache, reduce

from eulab.core import EInt, LAMBDA, ONE, divides, exact_div, gcd

DEFAULT_SIEVE_LIMIT = 10**6
INT64_MAX = 2**63 - 1

_sieve_state: dict = {"limit": None, "primes": None}


def sieve_limit() -> int:
    """Sieve bound; the EULAB_SIEVE_LIMIT environment variable overrides."""
    raw = os.environ.get("EULAB_SIEVE_LIMIT")
    if raw is None:
        return DEFAULT_SIEVE_LIMIT
    limit = int(raw)
    if limit < 2:
        raise ValueError("EULAB_SIEVE_LIMIT must be at least 2")
    return limit


def sieve_primes() -> list[int]:
    limit = sieve_limit()
    if _sieve_state["limit"] != limit:
        _sieve_state["primes"] = _sieve(limit)
        _sieve_state["limit"] = limit
    return _sieve_state["primes"]


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [i for i, f in enumerate(flags) if f]


def prime_pi(x: float) -> int:
    """Number of rational primes not exceeding x."""
    if x < 0:
        raise ValueError("prime_pi needs a nonnegative argument")
    n = math.floor(x)
    if n > sieve_limit():
        raise ValueError(f"prime_pi argument {x} exceeds the sieve bound; "
                         "raise EULAB_SIEVE_LIMIT")
    return bisect_right(sieve_primes(), n)


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic for every input this package factors (n < 3.3e24)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_split(n: int) -> int:
    """A nontrivial factor of composite odd n."""
    for c in range(1, 128):
        y, r, q = 2, 1, 1
        g = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r <<= 1
        if g == n:
            g = 1
            y = ys
            while g == 1:
                y = (y * y + c) % n
                g = math.gcd(abs(x - y), n)
        if g != n:
            return g
    raise ArithmeticError(f"cycle splitter failed on {n}")


@dataclass(frozen=True)
class RationalFactorization:
    sign: int
    factors: tuple[tuple[int, int], ...]  # (prime, exponent), increasing prime

    def value(self) -> int:
        return self.sign * reduce(lambda acc, pe: acc * pe[0] ** pe[1], self.factors, 1)

    @property
    def omega(self) -> int:
        return len(self.factors)


@dataclass(frozen=True)
class EFactorization:
    unit: EInt
    factors: tuple[tuple[EInt, int], ...]  # (canonical prime, exponent)

    def value(self) -> EInt:
        return reduce(lambda acc, pe: acc * pe[0] ** pe[1], self.factors, self.unit)

    @property
    def omega(self) -> int:
        return len(self.factors)

    @property
    def tau(self) -> int:
        """Divisor count with all six unit multiples distinct."""
        return 6 * reduce(lambda acc, pe: acc * (pe[1] + 1), self.factors, 1)


@lru_cache(maxsize=1 << 16)
def factor_rational(n: int) -> RationalFactorization:
    if n == 0:
        raise ValueError("cannot factor zero")
    if abs(n) > INT64_MAX:
        raise ValueError(f"{n} is beyond the declared 64-bit input range")
    sign = 1 if n > 0 else -1
    m = abs(n)
    counts: dict[int, int] = {}
    # MR checkpoints cut off the long sieve walk once the cofactor is prime.
    checkpoints = [3000, 65536]
    for p in sieve_primes():
        if p * p > m:
            break
        if checkpoints and p > checkpoints[0]:
            checkpoints.pop(0)
            if m > 1 and is_prime(m):
                break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            counts[p] = e
    if m > 1:
        _factor_hard(m, counts)
    return RationalFactorization(sign, tuple(sorted(counts.items())))


def _factor_hard(m: int, counts: dict[int, int]) -> None:
    """Accumulate factors of m, which has no divisor below the trial cut."""
    stack = [m]
    while stack:
        v = stack.pop()
        if v == 1:
            continue
        if is_prime(v):
            counts[v] = counts.get(v, 0) + 1
            continue
        d = _brent_split(v)
        stack.append(d)
        stack.append(v // d)


def omega_n(n: int) -> int:
    return factor_rational(n).omega


def classify_prime(p: int) -> str:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 3:
        return "ramified"
    return "split" if p % 3 == 1 else "inert"


@lru_cache(maxsize=4096)
def split_prime(p: int) -> EInt:
    """The canonical prime above a rational prime p = 1 mod 3.

    A cube root of unity r mod p gives p | N(r - omega), so gcd(p, r - omega)
    drops to a norm-p element.  The base g is drawn from a PRNG seeded with p
    itself: random search, reproducible output.
    """
    if classify_prime(p) != "split":
        raise ValueError(f"{p} does not split (p mod 3 != 1)")
    rng = random.Random(p)
    e = (p - 1) // 3
    while True:
        g = rng.randrange(2, p)
        r = pow(g, e, p)
        if r != 1 and (r * r + r + 1) % p == 0:
            break
    pi = gcd(EInt(p, 0), EInt(r, -1))
    if pi.norm() != p:
        raise AssertionError(f"norm of split prime over {p} is {pi.norm()}")
    return pi


@lru_cache(maxsize=1 << 16)
def factor_e(x: EInt) -> EFactorization:
    """Factor x into canonical primes times a unit.

    Route through the rational factorization of the norm: each rational
    prime contributes its canonical prime(s) above it, with exponents read
    off by exact division, and whatever is left over must be a unit.
    """
    if x.is_zero():
        raise ValueError("cannot factor zero")
    n = x.norm()
    if n > INT64_MAX:
        raise ValueError("norm exceeds the 64-bit rational factorization range")
    out: list[tuple[EInt, int]] = []
    rem = x
    for p, e in factor_rational(n).factors:
        if p == 3:
            for _ in range(e):
                rem = exact_div(rem, LAMBDA)
            out.append((LAMBDA, e))
        elif p % 3 == 2:
            if e % 2:
                raise AssertionError(f"odd exponent of inert prime {p} in a norm")
            pi = EInt(p, 0)
            for _ in range(e // 2):
                rem = exact_div(rem, pi)
            out.append((pi, e // 2))
        else:
            pi = split_prime(p)
            k = 0
            while k < e and divides(pi, rem):
                rem = exact_div(rem, pi)
                k += 1
            if k:
                out.append((pi, k))
            if k < e:
                pibar = pi.conj().canonical_associate()[0]
                for _ in range(e - k):
                    rem = exact_div(rem, pibar)
                out.append((pibar, e - k))
    if not rem.is_unit():
        raise AssertionError(f"non-unit remainder {rem} after factoring {x}")
    out.sort(key=lambda pe: (pe[0].norm(), pe[0].a, pe[0].b))
    return EFactorization(rem, tuple(out))


def omega_e(x: EInt) -> int:
    return factor_e(x).omega


def tau_e(x: EInt) -> int:
    return factor_e(x).tau


__all__ = [
    "DEFAULT_SIEVE_LIMIT", "INT64_MAX", "RationalFactorization",
    "EFactorization", "sieve_limit", "sieve_primes", "prime_pi", "is_prime",
    "factor_rational", "omega_n", "classify_prime", "split_prime",
    "factor_e", "omega_e", "tau_e",
]
