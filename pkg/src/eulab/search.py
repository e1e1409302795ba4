"""Exhaustive minimization of omega over pair products of integer sets.

For a k-element set S of integers from {1..M} let omega(S) count the
distinct rational primes dividing the product of a^2 + a*b + b^2 over all
pairs from S.  The searcher finds min omega(S) by branch and bound and can
enumerate every witness attaining it.

The bound is the plain monotonicity of omega: growing a set never removes
primes.  A depth-first scan over ascending tuples carries the union of
pair primes seen so far and abandons a branch as soon as that union is no
smaller than the best complete set known.  Two passes run: the first pins
the exact minimum, the second re-walks the tree with the minimum as a
fixed ceiling, which makes the enumeration (and its node count)
independent of visiting order and therefore of the worker count.

Prime sets per pair are kept as tuples of dense indices into the sorted
prime list; a 2000-element table would need tens of thousands of bits per
mask, so the hot loop unions small frozensets instead of big integers.
Workers are forked processes sharing the pair table copy-on-write and a
locked incumbent cell; only pass-one node counts depend on their timing.
"""

from __future__ import annotations

import contextlib
import math
import multiprocessing
import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from eulab.factor import factor_rational

MAX_TABLE_ELEMENT = 2000
_BIG = 1 << 30


class PairPrimeCache:
    """Factorizations of a^2 + a*b + b^2 for all 1 <= a < b <= max_element.

    primes holds every rational prime that divides some pair value, in
    increasing order; a prime's position is its dense index.  indices(a, b)
    is the sorted tuple of indices for one pair, and pair_mask packs it
    into an integer bitmask on demand.
    """

    def __init__(self, max_element: int) -> None:
        if not 2 <= max_element <= MAX_TABLE_ELEMENT:
            raise ValueError(
                f"max_element must be in 2..{MAX_TABLE_ELEMENT}")
        self.max_element = max_element
        pair_primes: dict[tuple[int, int], tuple[int, ...]] = {}
        seen: set[int] = set()
        for a in range(1, max_element):
            for b in range(a + 1, max_element + 1):
                ps = tuple(p for p, _ in
                           factor_rational(a * a + a * b + b * b).factors)
                pair_primes[(a, b)] = ps
                seen.update(ps)
        self.primes: tuple[int, ...] = tuple(sorted(seen))
        index = {p: i for i, p in enumerate(self.primes)}
        self.pair_indices: dict[tuple[int, int], tuple[int, ...]] = {
            ab: tuple(index[p] for p in ps)
            for ab, ps in pair_primes.items()}

    def _key(self, a: int, b: int) -> tuple[int, int]:
        if a == b:
            raise ValueError("pair needs two distinct elements")
        if not (1 <= a <= self.max_element and 1 <= b <= self.max_element):
            raise ValueError(f"elements must lie in 1..{self.max_element}")
        return (a, b) if a < b else (b, a)

    def indices(self, a: int, b: int) -> tuple[int, ...]:
        return self.pair_indices[self._key(a, b)]

    def pair_mask(self, a: int, b: int) -> int:
        mask = 0
        for i in self.pair_indices[self._key(a, b)]:
            mask |= 1 << i
        return mask

    def omega_of_set(self, elements: Iterable[int]) -> int:
        elems = sorted(set(elements))
        if not elems:
            raise ValueError("empty set")
        if elems[0] < 1 or elems[-1] > self.max_element:
            raise ValueError(f"elements must lie in 1..{self.max_element}")
        out: set[int] = set()
        for i, a in enumerate(elems):
            for b in elems[i + 1:]:
                out.update(self.pair_indices[(a, b)])
        return len(out)


@dataclass(frozen=True)
class SearchResult:
    k: int
    max_element: int
    primitive_only: bool
    all_witnesses: bool
    minimum: int
    witness_count: int
    witnesses: tuple[tuple[int, ...], ...]
    nodes_visited: int
    seconds: float

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "max": self.max_element,
            "minimum": self.minimum,
            "witness_count": self.witness_count,
            "witnesses": [list(w) for w in self.witnesses],
            "nodes_visited": self.nodes_visited,
            "seconds": self.seconds,
        }


class _Cell:
    """Single-process stand-in for a multiprocessing Value."""

    __slots__ = ("value",)

    def __init__(self, value: int) -> None:
        self.value = value

    def get_lock(self):
        return contextlib.nullcontext()


def _row_table(cache: PairPrimeCache, max_element: int,
               ) -> list[list[frozenset]]:
    """pm[a][b] = frozenset of prime indices of the pair (a, b), a < b."""
    empty = frozenset()
    pm = [[empty] * (max_element + 1) for _ in range(max_element + 1)]
    for (a, b), idx in cache.pair_indices.items():
        if b <= max_element:
            pm[a][b] = frozenset(idx)
    return pm


def _phase1_slice(pm, max_element: int, k: int, firsts: Sequence[int],
                  shared, primitive_only: bool) -> tuple[int, int]:
    """Exact-minimum pass over the subtrees rooted at the given first
    elements.  Returns (best omega of a complete set seen here, nodes)."""
    nodes = 0
    best = _BIG
    local_inc = _BIG
    gcd = math.gcd
    elems: list[int] = []

    def extend(mask, last: int, depth: int) -> None:
        nonlocal nodes, best, local_inc
        rows = [pm[x] for x in elems]
        leaf = depth + 1 == k
        for e in range(last + 1, max_element - (k - depth - 1) + 1):
            nodes += 1
            if nodes & 2047 == 0:
                with shared.get_lock():
                    if shared.value < local_inc:
                        local_inc = shared.value
            m = mask
            for row in rows:
                m = m | row[e]
            pc = len(m)
            if pc >= local_inc:
                continue
            if leaf:
                if primitive_only and gcd(*elems, e) != 1:
                    continue
                with shared.get_lock():
                    if pc < shared.value:
                        shared.value = pc
                    local_inc = shared.value
                if pc < best:
                    best = pc
            else:
                elems.append(e)
                extend(m, e, depth + 1)
                elems.pop()

    empty = frozenset()
    for a in firsts:
        nodes += 1
        elems[:] = [a]
        extend(empty, a, 1)
    return best, nodes


def _phase2_slice(pm, max_element: int, k: int, firsts: Sequence[int],
                  bound: int, primitive_only: bool, all_witnesses: bool,
                  ) -> tuple[list[tuple[int, ...]], int]:
    """Witness pass with a fixed ceiling: collect complete sets whose omega
    equals the known minimum.  Deterministic regardless of slicing."""
    nodes = 0
    found: list[tuple[int, ...]] = []
    gcd = math.gcd
    elems: list[int] = []
    stop = False

    def extend(mask, last: int, depth: int) -> None:
        nonlocal nodes, stop
        rows = [pm[x] for x in elems]
        leaf = depth + 1 == k
        for e in range(last + 1, max_element - (k - depth - 1) + 1):
            if stop:
                return
            nodes += 1
            m = mask
            for row in rows:
                m = m | row[e]
            if len(m) > bound:
                continue
            if leaf:
                # len(m) < bound cannot happen: bound is the true minimum
                if primitive_only and gcd(*elems, e) != 1:
                    continue
                found.append((*elems, e))
                if not all_witnesses:
                    stop = True
                    return
            else:
                elems.append(e)
                extend(m, e, depth + 1)
                elems.pop()

    empty = frozenset()
    for a in firsts:
        if stop:
            break
        nodes += 1
        elems[:] = [a]
        extend(empty, a, 1)
    return found, nodes


# State inherited by forked workers: the row table is large and read-only,
# the incumbent is a locked shared integer.
_FORK: dict = {}


def _phase1_entry(args):
    firsts, max_element, k, primitive_only = args
    return _phase1_slice(_FORK["pm"], max_element, k, firsts,
                         _FORK["inc"], primitive_only)


def _phase2_entry(args):
    firsts, max_element, k, bound, primitive_only, all_witnesses = args
    return _phase2_slice(_FORK["pm"], max_element, k, firsts, bound,
                         primitive_only, all_witnesses)


def run_search(cache: PairPrimeCache, k: int, max_element: int | None = None,
               *, primitive_only: bool = False, all_witnesses: bool = False,
               workers: int = 1) -> SearchResult:
    """Minimum omega over k-subsets of {1..max_element}, with witnesses.

    A cache built for a larger table can serve any smaller max_element.
    With all_witnesses the full list of minimum sets is returned in
    lexicographic order; otherwise only the lexicographically first.
    minimum, witnesses and witness_count do not depend on the worker
    count; the pass-one share of nodes_visited does once workers > 1.
    """
    if max_element is None:
        max_element = cache.max_element
    if max_element > cache.max_element:
        raise ValueError("cache too small for the requested max_element")
    if not 2 <= k <= max_element:
        raise ValueError("k must be in 2..max_element")
    if workers < 1:
        raise ValueError("workers must be positive")
    if workers > 1 and "fork" not in multiprocessing.get_all_start_methods():
        workers = 1

    start = time.perf_counter()
    pm = _row_table(cache, max_element)
    slices = [list(range(w + 1, max_element + 1, workers))
              for w in range(workers)]

    if workers == 1:
        best, nodes1 = _phase1_slice(pm, max_element, k, slices[0],
                                     _Cell(_BIG), primitive_only)
        minimum = best
        found, nodes2 = _phase2_slice(pm, max_element, k, slices[0], minimum,
                                      primitive_only, all_witnesses)
        witnesses = found
    else:
        ctx = multiprocessing.get_context("fork")
        _FORK["pm"] = pm
        _FORK["inc"] = ctx.Value("q", _BIG)
        try:
            with ctx.Pool(workers) as pool:
                part1 = pool.map(_phase1_entry, [
                    (s, max_element, k, primitive_only) for s in slices])
                minimum = min(b for b, _ in part1)
                part2 = pool.map(_phase2_entry, [
                    (s, max_element, k, minimum, primitive_only,
                     all_witnesses) for s in slices])
        finally:
            _FORK.clear()
        nodes1 = sum(n for _, n in part1)
        nodes2 = sum(n for _, n in part2)
        witnesses = [w for ws, _ in part2 for w in ws]

    witnesses.sort()
    if not all_witnesses:
        witnesses = witnesses[:1]
    seconds = time.perf_counter() - start
    return SearchResult(
        k=k, max_element=max_element, primitive_only=primitive_only,
        all_witnesses=all_witnesses, minimum=minimum,
        witness_count=len(witnesses), witnesses=tuple(witnesses),
        nodes_visited=nodes1 + nodes2, seconds=seconds)


__all__ = ["MAX_TABLE_ELEMENT", "PairPrimeCache", "SearchResult",
           "run_search"]
