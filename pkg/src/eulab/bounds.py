"""Lower bounds on distinct-prime counts of pairwise products, and the
constructive set-refinement machinery behind them.

Two families of statements are covered.  The additive family looks at
products of a+b over distinct pairs from a finite subset of E; the general
family at a + rho*b for a fixed multiplier rho.  Each bound comes with a
refinement procedure that repeatedly shrinks the set through residue
colorings, one prime at a time, until sums (or twisted sums) inherit
divisibility from their summands; verifiers then check the published
inequalities on randomized sets.

Color assignments are defined by a greedy pass over ring representatives in
enumeration order.  Splitting a set only needs the colors of a handful of
residues, so those are evaluated lazily: a residue's greedy color depends
only on neighbors that enumerate earlier, and that recursion is replayed
on demand.  The eager and lazy evaluations agree by construction and the
test suite checks them against each other on whole rings.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from eulab.core import (
    EInt, ONE, ResidueRing, ZERO, divides, exact_div, gcd, valuation,
)
from eulab.factor import (
    EFactorization, factor_e, factor_rational, prime_pi, tau_e,
)

MINUS_ONE = EInt(-1, 0)


class ZeroFactorError(ValueError):
    """A pair produced a zero factor, so the product has no prime data."""


def _ekey(x: EInt) -> tuple[int, int, int]:
    return x.norm(), x.a, x.b


def _sorted_set(elements: Iterable[EInt]) -> tuple[EInt, ...]:
    return tuple(sorted(set(elements), key=_ekey))


# --------------------------------------------------------------------------
# colorings
# --------------------------------------------------------------------------

class Coloring:
    """A group assignment for the reduced residues of a prime-power ring."""

    __slots__ = ("ring", "prime", "groups", "assignment", "delta")

    def __init__(self, ring: ResidueRing, prime: EInt, groups: int,
                 assignment: dict[EInt, int], delta: int | None = None) -> None:
        self.ring = ring
        self.prime = prime
        self.groups = groups
        self.assignment = assignment
        self.delta = delta

    def group_of(self, x: EInt) -> int:
        return self.assignment[self.ring.reduce(x)]


def uv_coloring(pi: EInt, k: int = 1) -> Coloring:
    """Two groups on the reduced residues mod pi^k with r and -r separated.

    Needs norm(pi) odd so that r = -r cannot happen.  The first member of
    each +- pair met in enumeration order lands in group 0.
    """
    if pi.norm() % 2 == 0 or pi.norm() <= 1:
        raise ValueError("uv coloring needs a prime of odd norm")
    if k < 1:
        raise ValueError("exponent must be positive")
    ring = ResidueRing(pi ** k)
    assignment: dict[EInt, int] = {}
    for r in ring.reduced_representatives():
        if r in assignment:
            continue
        assignment[r] = 0
        assignment[ring.reduce(-r)] = 1
    return Coloring(ring, pi, 2, assignment)


def _lazy_uv_group(ring: ResidueRing, r: EInt, memo: dict[EInt, int]) -> int:
    got = memo.get(r)
    if got is not None:
        return got
    partner = ring.reduce(-r)
    if ring.position(partner) < ring.position(r):
        g = 1 - _lazy_uv_group(ring, partner, memo)
    else:
        g = 0
    memo[r] = g
    return g


def three_coloring(pi: EInt, rho0: EInt) -> Coloring:
    """Three groups mod pi^(delta+1), delta = v(1 + rho0), such that r and
    -rho0*r never share a group.

    Greedy in enumeration order: each residue takes the least group not
    already used by -rho0*r or -rho0^(-1)*r.  Both neighbors are excluded
    so the separating edge is respected from whichever side is colored
    second; a residue never collides with itself because that would force
    pi^(delta+1) | 1 + rho0.
    """
    if pi.norm() <= 1:
        raise ValueError("coloring needs a non-unit prime")
    if rho0 == MINUS_ONE:
        raise ValueError("rho0 = -1 has no finite delta")
    if divides(pi, rho0):
        raise ValueError("rho0 must be coprime to the prime")
    delta = valuation(pi, ONE + rho0)
    ring = ResidueRing(pi ** (delta + 1))
    neg = ring.reduce(-rho0)
    neg_inv = ring.reduce(-ring.inverse(rho0))
    assignment: dict[EInt, int] = {}
    for r in ring.reduced_representatives():
        used = set()
        for mult in (neg, neg_inv):
            n = ring.reduce(mult * r)
            if n in assignment:
                used.add(assignment[n])
        for c in (0, 1, 2):
            if c not in used:
                assignment[r] = c
                break
    return Coloring(ring, pi, 3, assignment, delta=delta)


def _lazy_three_group(ring: ResidueRing, neg: EInt, neg_inv: EInt,
                      r: EInt, memo: dict[EInt, int]) -> int:
    """Greedy color of one residue, replaying only the earlier-enumerated
    dependency chain.  Matches three_coloring exactly."""
    stack = [r]
    while stack:
        cur = stack[-1]
        if cur in memo:
            stack.pop()
            continue
        pos = ring.position(cur)
        nbrs = []
        missing = []
        for mult in (neg, neg_inv):
            n = ring.reduce(mult * cur)
            if n != cur and ring.position(n) < pos:
                nbrs.append(n)
                if n not in memo:
                    missing.append(n)
        if missing:
            stack.extend(missing)
            continue
        used = {memo[n] for n in nbrs}
        for c in (0, 1, 2):
            if c not in used:
                memo[cur] = c
                break
        stack.pop()
    return memo[r]


# --------------------------------------------------------------------------
# the constants attached to a multiplier rho
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class PrimeConstant:
    pi: EInt
    gamma: int           # v_pi(rho)
    delta: int | None    # v_pi(1 + rho/pi^gamma); None when rho = -pi^gamma
    c: int               # gamma + delta, or gamma in the special case


@dataclass(frozen=True)
class RhoConstants:
    rho: EInt
    primes: tuple[PrimeConstant, ...]
    c_rho: EInt          # product of pi^c over the listed primes
    tau: int             # divisor count of c_rho, unit multiples distinct
    threshold: int       # tau^2 + 2
    bound_constant: float


def c_constants(rho: EInt) -> RhoConstants:
    """Per-prime control exponents for the multiplier rho.

    For every canonical prime dividing rho*(1+rho): gamma is the valuation
    in rho, and after stripping it either the cofactor is exactly -1 (then
    the prime controls with plain gamma) or delta more powers divide
    1 + cofactor.  The product of pi^c bounds every twisted quotient
    phi(a, b) a refined set can produce.
    """
    if rho.is_zero() or rho == MINUS_ONE:
        raise ValueError("rho must avoid 0 and -1")
    product = rho * (ONE + rho)
    constants: list[PrimeConstant] = []
    c_rho = ONE
    tau = 6
    if not product.is_unit():
        for pi, _ in factor_e(product).factors:
            gamma = valuation(pi, rho)
            rho0 = exact_div(rho, pi ** gamma)
            if rho0 == MINUS_ONE:
                delta: int | None = None
                c = gamma
            else:
                delta = valuation(pi, ONE + rho0)
                c = gamma + delta
            constants.append(PrimeConstant(pi, gamma, delta, c))
            c_rho = c_rho * pi ** c
            tau *= c + 1
    threshold = tau * tau + 2
    return RhoConstants(rho, tuple(constants), c_rho, tau, threshold,
                        math.log(threshold) / math.log(3))


def c_exponent(pi: EInt, rho: EInt) -> int:
    """c(pi, rho) for an arbitrary canonical prime (0 when pi is inert
    to both rho and 1+rho)."""
    gamma = valuation(pi, rho)
    rho0 = exact_div(rho, pi ** gamma)
    if rho0 == MINUS_ONE:
        return gamma
    return gamma + valuation(pi, ONE + rho0)


# --------------------------------------------------------------------------
# set splits
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class SplitRecord:
    prime: EInt
    rule: str                  # "uv" | "lemma2" | "lemma4"
    sizes: tuple[int, ...]     # bucket sizes, index = group
    kept: int                  # index of the retained bucket


def _keep_largest(buckets: Sequence[list[EInt]]) -> int:
    sizes = [len(b) for b in buckets]
    return sizes.index(max(sizes))


def coset_split(elements: Iterable[EInt], pi: EInt, rho: EInt,
                ) -> tuple[tuple[EInt, ...], SplitRecord]:
    """Retain at least a third of the set so that pi-divisibility of
    a + rho*b transfers to a and b, up to the control exponent c(pi, rho).

    Each element is bucketed by the greedy 3-group of its unit part
    a0 = a / pi^v(a) mod pi^(delta+1).  Zero, which has no unit part, can
    go anywhere; group 0 by convention.
    """
    elements = _sorted_set(elements)
    gamma = valuation(pi, rho)
    rho0 = exact_div(rho, pi ** gamma)
    if rho0 == MINUS_ONE:
        raise ValueError("-rho is a power of the prime; use valuation_split")
    delta = valuation(pi, ONE + rho0)
    ring = ResidueRing(pi ** (delta + 1))
    neg = ring.reduce(-rho0)
    neg_inv = ring.reduce(-ring.inverse(rho0))
    memo: dict[EInt, int] = {}
    buckets: list[list[EInt]] = [[], [], []]
    for a in elements:
        if a.is_zero():
            buckets[0].append(a)
            continue
        a0 = exact_div(a, pi ** valuation(pi, a))
        g = _lazy_three_group(ring, neg, neg_inv, ring.reduce(a0), memo)
        buckets[g].append(a)
    kept = _keep_largest(buckets)
    record = SplitRecord(pi, "lemma2", tuple(len(b) for b in buckets), kept)
    return tuple(buckets[kept]), record


def valuation_split(elements: Iterable[EInt], theta: EInt, gamma: int,
                    ) -> tuple[tuple[EInt, ...], SplitRecord]:
    """Retain at least half of the set so that no two members have
    theta-valuations exactly gamma apart; used when rho = -theta^gamma.

    Bucketing by the parity of floor(v / gamma) forbids a same-bucket gap
    of exactly gamma: adding gamma to v increments floor(v / gamma).  Zero
    has no valuation and may sit in either bucket.
    """
    if gamma < 1:
        raise ValueError("gamma must be a positive integer")
    elements = _sorted_set(elements)
    buckets: list[list[EInt]] = [[], []]
    for a in elements:
        if a.is_zero():
            buckets[0].append(a)
            continue
        buckets[(valuation(theta, a) // gamma) & 1].append(a)
    kept = _keep_largest(buckets)
    record = SplitRecord(theta, "lemma4", tuple(len(b) for b in buckets), kept)
    return tuple(buckets[kept]), record


def _uv_split(elements: Sequence[EInt], pi: EInt,
              ) -> tuple[tuple[EInt, ...], SplitRecord]:
    """Halve a zero-free set so that same-bucket unit parts never sum to a
    multiple of pi; all elements keep v(a+b) = min(v(a), v(b))."""
    ring = ResidueRing(pi)
    memo: dict[EInt, int] = {}
    buckets: list[list[EInt]] = [[], []]
    for a in elements:
        a0 = exact_div(a, pi ** valuation(pi, a))
        buckets[_lazy_uv_group(ring, ring.reduce(a0), memo)].append(a)
    kept = _keep_largest(buckets)
    record = SplitRecord(pi, "uv", tuple(len(b) for b in buckets), kept)
    return tuple(buckets[kept]), record


# --------------------------------------------------------------------------
# refinement traces
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class RefinementTrace:
    mode: str                                  # "t1" | "t2"
    rho: EInt | None                           # None in additive mode
    initial: tuple[EInt, ...]
    sector: int | None
    snapshots: tuple[tuple[EInt, ...], ...]    # A0, A1, ..., As
    steps: tuple[SplitRecord, ...]
    checks: dict = field(compare=False)

    @property
    def final(self) -> tuple[EInt, ...]:
        return self.snapshots[-1]


def phi(a: EInt, b: EInt, rho: EInt) -> EInt:
    """The twisted quotient a/g + rho*(b/g), g = gcd(a, b)."""
    g = gcd(a, b)
    return exact_div(a, g) + rho * exact_div(b, g)


def _product_primes_additive(elements: Sequence[EInt]) -> list[EInt]:
    """Odd-norm canonical primes of the product of a+b over distinct pairs."""
    primes: set[EInt] = set()
    for i, a in enumerate(elements):
        for b in elements[i + 1:]:
            f = a + b
            if f.is_zero():
                raise ZeroFactorError(f"zero factor from pair ({a}) + ({b})")
            for pi, _ in factor_e(f).factors:
                if pi.norm() % 2:
                    primes.add(pi)
    return sorted(primes, key=_ekey)


def refine_t1(elements: Iterable[EInt]) -> RefinementTrace:
    """Shrink a set until additive pairs inherit valuations exactly.

    Pipeline: drop zero, keep the fullest of the six sectors (at least
    (|A|-1)/6 elements, and no two remaining elements can cancel), then
    halve once per odd-norm prime of the full pair-sum product.  On the
    final set, v(a+b) = min(v(a), v(b)) holds for every listed prime:
    equal valuations would need unit parts summing into the prime, which
    the uv buckets forbid, and unequal ones carry for free.
    """
    initial = _sorted_set(elements)
    if len(initial) < 2:
        raise ValueError("need at least two distinct elements")
    primes = _product_primes_additive(initial)
    sectors: dict[int, list[EInt]] = {}
    for a in initial:
        if a.is_zero():
            continue
        sectors.setdefault(a.sector_index(), []).append(a)
    sector = min(sectors, key=lambda k: (-len(sectors[k]), k))
    current = tuple(sectors[sector])
    snapshots = [current]
    steps = []
    for pi in primes:
        current, record = _uv_split(current, pi)
        snapshots.append(current)
        steps.append(record)
    ok = True
    pairs = 0
    final = snapshots[-1]
    for pi in primes:
        for i, a in enumerate(final):
            for b in final[i + 1:]:
                pairs += 1
                want = min(valuation(pi, a), valuation(pi, b))
                if valuation(pi, a + b) != want:
                    ok = False
    checks = {"valuation_transfer_ok": ok, "pairs_checked": pairs,
              "primes_checked": len(primes)}
    return RefinementTrace("t1", None, initial, sector,
                           tuple(snapshots), tuple(steps), checks)


def _power_of_prime(x: EInt) -> tuple[EInt, int] | None:
    """(theta, gamma) when x is exactly a positive power of a canonical
    prime, unit part included; otherwise None."""
    if x.is_zero() or x.is_unit():
        return None
    f = factor_e(x)
    if f.unit == ONE and len(f.factors) == 1:
        return f.factors[0]
    return None


def refine_t2(elements: Iterable[EInt], rho: EInt) -> RefinementTrace:
    """Shrink a set until pi | a + rho*b transfers to a and b up to the
    control exponent c(pi, rho), for every prime of the pair product.

    Ordered pairs matter since a + rho*b is asymmetric.  Primes whose
    power is exactly -rho use the valuation-parity split; all others use
    the residue-coset split.  The final set also satisfies the divisor
    collapse: every phi(a, b) divides c(rho), so at most tau(c(rho))
    distinct values occur.
    """
    if rho.is_zero() or rho == MINUS_ONE:
        raise ValueError("rho must avoid 0 and -1")
    initial = _sorted_set(elements)
    if len(initial) < 2:
        raise ValueError("need at least two distinct elements")
    primes: set[EInt] = set()
    for a in initial:
        for b in initial:
            if a == b:
                continue
            f = a + rho * b
            if f.is_zero():
                raise ZeroFactorError(
                    f"zero factor from pair ({a}) + rho*({b})")
            for pi, _ in factor_e(f).factors:
                primes.add(pi)
    ordered = sorted(primes, key=_ekey)
    special = _power_of_prime(-rho)
    current = initial
    snapshots = [current]
    steps = []
    for pi in ordered:
        if special is not None and pi == special[0]:
            current, record = valuation_split(current, pi, special[1])
        else:
            current, record = coset_split(current, pi, rho)
        snapshots.append(current)
        steps.append(record)
    final = snapshots[-1]
    exponents = {pi: c_exponent(pi, rho) for pi in ordered}
    transfer_ok = True
    pairs = 0
    for a in final:
        for b in final:
            if a == b:
                continue
            pairs += 1
            f = a + rho * b
            for pi, u in factor_e(f).factors:
                drop = u - exponents[pi]
                if drop <= 0:
                    continue
                power = pi ** drop
                if not (a.is_zero() or divides(power, a)) or \
                        not (b.is_zero() or divides(power, b)):
                    transfer_ok = False
    constants = c_constants(rho)
    phis: set[EInt] = set()
    all_divide = True
    for a in final:
        for b in final:
            if a.is_zero() and b.is_zero():
                continue
            value = phi(a, b, rho)
            phis.add(value)
            if value.is_zero() or not divides(value, constants.c_rho):
                all_divide = False
    checks = {
        "divisibility_transfer_ok": transfer_ok,
        "pairs_checked": pairs,
        "primes_checked": len(ordered),
        "phi_value_count": len(phis),
        "tau_bound": constants.tau,
        "phi_count_within_bound": len(phis) <= constants.tau,
        "phi_all_divide_c_rho": all_divide,
    }
    return RefinementTrace("t2", rho, initial, None,
                           tuple(snapshots), tuple(steps), checks)


# --------------------------------------------------------------------------
# randomized bound verification
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundReport:
    theorem: str
    rho: EInt | None
    seed: object
    elements: tuple
    omega: int | None          # None means a zero factor made it infinite
    bound: float
    comparison: str            # ">" or ">="
    passed: bool
    flagged_zero_factor: bool
    witness_primes: tuple

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "rho": None if self.rho is None else str(self.rho),
            "seed": self.seed,
            "size": len(self.elements),
            "set": [str(x) if isinstance(x, EInt) else x for x in self.elements],
            "omega": "infinite" if self.omega is None else self.omega,
            "bound": self.bound,
            "comparison": self.comparison,
            "passed": self.passed,
            "flagged_zero_factor": self.flagged_zero_factor,
            "witness_primes": [str(p) if isinstance(p, EInt) else p
                               for p in self.witness_primes],
        }


def _compare(omega: int | None, bound: float, comparison: str) -> bool:
    if omega is None:
        return True
    return omega > bound if comparison == ">" else omega >= bound


def _e_product_omega(factors: Iterable[EInt]) -> tuple[int | None, tuple, bool]:
    primes: set[EInt] = set()
    for f in factors:
        if f.is_zero():
            return None, (), True
        for pi, _ in factor_e(f).factors:
            primes.add(pi)
    return len(primes), tuple(sorted(primes, key=_ekey)), False


def _n_product_omega(values: Iterable[int]) -> tuple[int | None, tuple, bool]:
    primes: set[int] = set()
    for v in values:
        if v == 0:
            return None, (), True
        for p, _ in factor_rational(v).factors:
            primes.add(p)
    return len(primes), tuple(sorted(primes)), False


def _unordered_sums(elements: Sequence[EInt]) -> Iterable[EInt]:
    for i, a in enumerate(elements):
        for b in elements[i + 1:]:
            yield a + b


def verify_t1(elements: Iterable[EInt], seed: object = None) -> BoundReport:
    """omega_E of the pair-sum product against (log(|A|-1) - log 18)/log 2."""
    elements = _sorted_set(elements)
    if len(elements) < 2:
        raise ValueError("need at least two distinct elements")
    omega, primes, flagged = _e_product_omega(_unordered_sums(elements))
    bound = (math.log(len(elements) - 1) - math.log(18)) / math.log(2)
    return BoundReport("t1", None, seed, elements, omega, bound, ">",
                       _compare(omega, bound, ">"), flagged, primes)


def verify_t2(elements: Iterable[EInt], rho: EInt, seed: object = None,
              general: bool = False) -> BoundReport:
    """omega_E of the a + rho*b product against log|A|/log 3 minus the
    rho-specific constant.  rho = 1 falls back to the additive bound
    unless general=True forces this machinery."""
    if rho.is_zero():
        raise ValueError("rho = 0 is rejected")
    if rho == MINUS_ONE:
        raise ValueError("rho = -1 is a counting bound; use verify_rho_minus1")
    if rho == ONE and not general:
        return verify_t1(elements, seed=seed)
    elements = _sorted_set(elements)
    if len(elements) < 2:
        raise ValueError("need at least two distinct elements")
    constants = c_constants(rho)
    factors = (a + rho * b for a in elements for b in elements if a != b)
    omega, primes, flagged = _e_product_omega(factors)
    bound = (math.log(len(elements)) - math.log(constants.threshold)) / math.log(3)
    return BoundReport("t2", rho, seed, elements, omega, bound, ">",
                       _compare(omega, bound, ">"), flagged, primes)


def verify_cor1(values: Iterable[int], seed: object = None) -> BoundReport:
    """omega of the product of a^2 - a*b + b^2 over distinct positive pairs
    against (log|A| - log 38)/(2 log 3)."""
    elements = _positive_set(values)
    pair_values = (a * a - a * b + b * b
                   for i, a in enumerate(elements) for b in elements[i + 1:])
    omega, primes, flagged = _n_product_omega(pair_values)
    bound = (math.log(len(elements)) - math.log(38)) / (2 * math.log(3))
    return BoundReport("cor1", None, seed, elements, omega, bound, ">",
                       _compare(omega, bound, ">"), flagged, primes)


def verify_cor2(values: Iterable[int], seed: object = None) -> BoundReport:
    """Same as cor1 for a^2 + a*b + b^2, with the constant 146."""
    elements = _positive_set(values)
    pair_values = (a * a + a * b + b * b
                   for i, a in enumerate(elements) for b in elements[i + 1:])
    omega, primes, flagged = _n_product_omega(pair_values)
    bound = (math.log(len(elements)) - math.log(146)) / (2 * math.log(3))
    return BoundReport("cor2", None, seed, elements, omega, bound, ">",
                       _compare(omega, bound, ">"), flagged, primes)


def verify_rho_minus1(elements: Iterable[EInt], seed: object = None) -> BoundReport:
    """omega_E of the difference product is at least the number of rational
    primes p with p^2 < |A|: each such prime pins two set members to a
    common residue class by pigeonhole."""
    elements = _sorted_set(elements)
    if len(elements) < 2:
        raise ValueError("need at least two distinct elements")
    diffs = (a - b for i, a in enumerate(elements) for b in elements[i + 1:])
    omega, primes, flagged = _e_product_omega(diffs)
    bound = float(prime_pi(math.isqrt(len(elements) - 1)))
    return BoundReport("rho_minus1", MINUS_ONE, seed, elements, omega, bound,
                       ">=", _compare(omega, bound, ">="), flagged, primes)


def verify_erdos_turan(values: Iterable[int], seed: object = None) -> BoundReport:
    """omega of the pairwise-sum product of positive integers is at least
    k+1 once |A| reaches 3 * 2^(k-1)."""
    elements = _positive_set(values)
    k = 0
    while 3 * 2 ** k <= len(elements):
        k += 1
    # now k = largest exponent with 3*2^(k-1) <= |A| (0 when |A| = 2)
    sums = (a + b for i, a in enumerate(elements) for b in elements[i + 1:])
    omega, primes, flagged = _n_product_omega(sums)
    bound = float(k + 1)
    return BoundReport("erdos_turan", None, seed, elements, omega, bound,
                       ">=", _compare(omega, bound, ">="), flagged, primes)


def _positive_set(values: Iterable[int]) -> tuple[int, ...]:
    elements = tuple(sorted(set(values)))
    if len(elements) < 2:
        raise ValueError("need at least two distinct values")
    if elements[0] < 1:
        raise ValueError("values must be positive integers")
    return elements


# --------------------------------------------------------------------------
# randomized trial plumbing shared by the CLI and the acceptance suite
# --------------------------------------------------------------------------

def random_eint_set(rng: random.Random, size: int, coord_range: int,
                    ) -> tuple[EInt, ...]:
    out: set[EInt] = set()
    while len(out) < size:
        out.add(EInt(rng.randint(-coord_range, coord_range),
                     rng.randint(-coord_range, coord_range)))
    return _sorted_set(out)


def random_int_set(rng: random.Random, size: int, max_value: int,
                   ) -> tuple[int, ...]:
    if max_value < size:
        raise ValueError("range too small for the requested set size")
    return tuple(sorted(rng.sample(range(1, max_value + 1), size)))


THEOREMS = ("t1", "t2", "cor1", "cor2", "rho_minus1", "erdos_turan")


def run_trials(theorem: str, trials: int, size: int, coord_range: int,
               seed: int, rho: EInt | None = None, general: bool = False,
               ) -> list[BoundReport]:
    if theorem not in THEOREMS:
        raise ValueError(f"unknown bound {theorem!r}")
    reports = []
    for t in range(trials):
        trial_seed = f"{seed}:{t}"
        rng = random.Random(trial_seed)
        if theorem in ("t1", "t2", "rho_minus1"):
            elements: tuple = random_eint_set(rng, size, coord_range)
        else:
            elements = random_int_set(rng, size, coord_range)
        if theorem == "t1":
            reports.append(verify_t1(elements, seed=trial_seed))
        elif theorem == "t2":
            if rho is None:
                raise ValueError("t2 needs a rho")
            reports.append(verify_t2(elements, rho, seed=trial_seed,
                                     general=general))
        elif theorem == "cor1":
            reports.append(verify_cor1(elements, seed=trial_seed))
        elif theorem == "cor2":
            reports.append(verify_cor2(elements, seed=trial_seed))
        elif theorem == "rho_minus1":
            reports.append(verify_rho_minus1(elements, seed=trial_seed))
        else:
            reports.append(verify_erdos_turan(elements, seed=trial_seed))
    return reports


__all__ = [
    "Coloring", "uv_coloring", "three_coloring", "PrimeConstant",
    "RhoConstants", "c_constants", "c_exponent", "SplitRecord",
    "coset_split", "valuation_split", "RefinementTrace", "refine_t1",
    "refine_t2", "phi", "BoundReport", "verify_t1", "verify_t2",
    "verify_cor1", "verify_cor2", "verify_rho_minus1", "verify_erdos_turan",
    "random_eint_set", "random_int_set", "run_trials", "THEOREMS",
    "ZeroFactorError",
]
