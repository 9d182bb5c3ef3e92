"""Subsets of the cyclic group Z_n: separation, well-spread tests, reduction.

Residues are 0-based throughout; "clockwise" means +1 mod n.  An arc of
length L starting at s is the residue window {s, s+1, ..., s+L-1} mod n.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator

from .errors import InvalidParams, NotCoprime, NotWellSpread


@dataclass(frozen=True)
class CyclicSubset:
    """An unordered subset of Z_n, stored as a sorted residue tuple."""

    modulus: int
    elements: tuple[int, ...]

    def __init__(self, modulus: int, elements: Iterable[int]):
        if modulus < 1:
            raise InvalidParams(f"modulus must be positive, got {modulus}")
        elems = sorted(set(elements))
        if elems and not (0 <= elems[0] and elems[-1] < modulus):
            raise InvalidParams(f"residues out of range for Z_{modulus}: {elems}")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "elements", tuple(elems))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self.elements

    def rotate(self, t: int) -> "CyclicSubset":
        """Clockwise rotation: every element shifted by +t mod n."""
        n = self.modulus
        return CyclicSubset(n, ((x + t) % n for x in self.elements))

    def complement(self) -> "CyclicSubset":
        present = set(self.elements)
        return CyclicSubset(self.modulus, (x for x in range(self.modulus) if x not in present))

    def __repr__(self) -> str:
        inner = ",".join(str(x) for x in self.elements)
        return f"{{{inner}}}/Z{self.modulus}"


@dataclass(frozen=True)
class Arc:
    """Residue window {start, start+1, ..., start+length-1} mod modulus."""

    modulus: int
    start: int
    length: int

    def residues(self) -> tuple[int, ...]:
        n = self.modulus
        return tuple((self.start + i) % n for i in range(self.length))


def rotate(s: CyclicSubset, t: int) -> CyclicSubset:
    return s.rotate(t)


def is_r_separated(s: CyclicSubset, r: int) -> bool:
    """Every pair x != y satisfies r <= |x - y| <= n - r (plain integer difference)."""
    if r < 1:
        raise InvalidParams(f"separation must be >= 1, got {r}")
    n = s.modulus
    es = s.elements
    for i in range(len(es)):
        for j in range(i + 1, len(es)):
            d = es[j] - es[i]  # sorted, so d > 0
            if not (r <= d <= n - r):
                return False
    return True


def is_well_spread(s: CyclicSubset) -> bool:
    """Equal-length arcs (lengths 1..n-1) contain counts of s differing by at most 1."""
    n = s.modulus
    k = len(s)
    if k == 0 or k == n:
        return True
    member = [0] * n
    for x in s.elements:
        member[x] = 1
    # prefix over doubled cycle for O(1) window counts
    pref = [0] * (2 * n + 1)
    for i in range(2 * n):
        pref[i + 1] = pref[i] + member[i % n]
    for length in range(1, n):
        lo = hi = pref[length] - pref[0]
        for start in range(1, n):
            c = pref[start + length] - pref[start]
            if c < lo:
                lo = c
            elif c > hi:
                hi = c
            if hi - lo > 1:
                return False
    return True


def is_well_spread_dual(s: CyclicSubset) -> bool:
    """Inclusion-minimal arcs containing exactly c elements (c = 1..|s|) have
    lengths differing by at most 1.

    A minimal arc holding exactly c elements runs from one element to the
    (c-1)-th next element, so only those |s| windows need checking per c.
    """
    n = s.modulus
    es = s.elements
    k = len(es)
    if k == 0 or k == n:
        return True
    for c in range(1, k + 1):
        lo = hi = None
        for i in range(k):
            j = (i + c - 1) % k
            length = (es[j] - es[i]) % n + 1
            if lo is None:
                lo = hi = length
            elif length < lo:
                lo = length
            elif length > hi:
                hi = length
        if hi - lo > 1:
            return False
    return True


def canonical_well_spread(n: int, k: int) -> CyclicSubset:
    """The mechanical-word witness {floor(i*n/k) : 0 <= i < k}; checked on exit."""
    if not (0 <= k <= n) or n < 1:
        raise InvalidParams(f"need 0 <= k <= n with n >= 1, got n={n} k={k}")
    s = CyclicSubset(n, (i * n // k for i in range(k)))
    if len(s) != k or not is_well_spread(s):
        raise NotWellSpread(f"canonical construction failed for n={n} k={k}: {s}")
    return s


@dataclass(frozen=True)
class CriticalParams:
    """Least positive (a, b) with a*k = b*n - 1."""

    a: int
    b: int

    def as_fraction(self) -> Fraction:
        return Fraction(self.a, self.b)


def critical_params(n: int, k: int) -> CriticalParams:
    if not (1 <= k < n):
        raise InvalidParams(f"need 1 <= k < n, got n={n} k={k}")
    if gcd(n, k) != 1:
        raise NotCoprime(f"critical params need gcd(n,k)=1, got gcd({n},{k})={gcd(n, k)}")
    for b in range(1, k + 1):
        if (b * n - 1) % k == 0:
            return CriticalParams((b * n - 1) // k, b)
    raise AssertionError(f"no solution scanning b=1..{k} for n={n}")  # unreachable


@dataclass(frozen=True)
class ReductionStep:
    cycle_length: int
    set_size: int
    quotient: int
    remainder: int
    surviving: CyclicSubset


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[ReductionStep, ...]
    terminal: CyclicSubset


def euclid_reduce(s: CyclicSubset) -> ReductionTrace:
    """Cycle-shrinking reduction mirroring the Euclidean algorithm.

    Each step removes quotient-1 residues clockwise after every element,
    relabels the survivors, and continues with the complement on the shorter
    cycle.  Terminates when the remainder hits 0; the terminal set has
    gcd(n, |s|) elements.
    """
    n = s.modulus
    k = len(s)
    if not (1 <= k and 2 * k <= n):
        raise InvalidParams(f"reduction needs 1 <= |s| <= n/2, got |s|={k}, n={n}")
    if not is_well_spread(s):
        raise NotWellSpread(f"{s} is not well-spread")
    steps: list[ReductionStep] = []
    m = n
    cur = list(s.elements)
    while True:
        kk = len(cur)
        q, r = divmod(m, kk)
        # neighbouring gaps of a well-spread set are q or q+1; removal windows
        # x+1..x+q-1 therefore stay inside gaps and miss every element
        removed = set()
        for x in cur:
            for d in range(1, q):
                removed.add((x + d) % m)
        if removed & set(cur):
            raise AssertionError(f"removal hit an element; {cur} not well-spread on Z_{m}")
        survivors = sorted(x for x in range(m) if x not in removed)
        m2 = len(survivors)
        if m2 != kk + r:
            raise AssertionError(f"expected shrunken cycle {kk + r}, got {m2}")
        rank = {x: i for i, x in enumerate(survivors)}
        cur_relabeled = sorted(rank[x] for x in cur)
        if r == 0:
            terminal = CyclicSubset(m2, cur_relabeled)
            steps.append(ReductionStep(m, kk, q, r, terminal))
            break
        nxt = CyclicSubset(m2, (i for i in range(m2) if i not in set(cur_relabeled)))
        if not is_well_spread(nxt):
            raise AssertionError(f"surviving set {nxt} lost well-spreadness")
        steps.append(ReductionStep(m, kk, q, r, nxt))
        m = m2
        cur = list(nxt.elements)
    if len(terminal) != gcd(n, k):
        raise AssertionError(f"terminal size {len(terminal)} != gcd({n},{k})")
    return ReductionTrace(tuple(steps), terminal)
