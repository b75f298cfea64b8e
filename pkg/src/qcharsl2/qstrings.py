"""q-strings, general/special position, and string decompositions.

A q-string of length n based at exponent k is the set {k, k+1, ..., k+n-1}
of spectral exponents.  Every finite multiset of exponents decomposes
uniquely into strings that are pairwise in general position; we compute
that decomposition by the piecewise-linear multiplicity formula and verify
it independently by exhaustive search.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class QString:
    """The exponent set {k, k+1, ..., k+n-1}."""

    n: int  # length, >= 1
    k: int  # base exponent

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("q-string length must be positive")

    def exponents(self):
        return range(self.k, self.k + self.n)

    def translated(self, c):
        return QString(self.n, self.k + c)

    def __str__(self):
        return f"S({self.n},{self.k})"


class DrinfeldData:
    """Finite multiset of spectral exponents (zeros of a Drinfeld polynomial)."""

    __slots__ = ("_mult",)

    def __init__(self, mult=()):
        items = mult.items() if isinstance(mult, dict) else mult
        acc: dict[int, int] = {}
        for k, m in items:
            acc[k] = acc.get(k, 0) + m
        for k, m in acc.items():
            if m <= 0:
                raise ValueError(f"multiplicity at exponent {k} must be positive")
        self._mult = tuple(sorted(acc.items()))

    @property
    def mult(self):
        return dict(self._mult)

    @property
    def support(self):
        return tuple(k for k, _ in self._mult)

    def multiplicity(self, k):
        return dict(self._mult).get(k, 0)

    def total(self):
        return sum(m for _, m in self._mult)

    def is_empty(self):
        return not self._mult

    def translated(self, c):
        return DrinfeldData((k + c, m) for k, m in self._mult)

    def items(self):
        return self._mult

    def zeros_with_multiplicity(self):
        """All exponents listed with multiplicity, ascending."""
        out = []
        for k, m in self._mult:
            out.extend([k] * m)
        return out

    def __eq__(self, other):
        return isinstance(other, DrinfeldData) and self._mult == other._mult

    def __hash__(self):
        return hash(self._mult)

    def __lt__(self, other):
        return self._mult < other._mult

    def __repr__(self):
        return f"DrinfeldData({dict(self._mult)!r})"

    def __str__(self):
        return ",".join(f"{k}:{m}" for k, m in self._mult) or "(empty)"

    def to_json(self):
        return {"zeros": {str(k): m for k, m in self._mult}}

    @classmethod
    def from_json(cls, obj):
        return cls((int(k), int(m)) for k, m in obj["zeros"].items())


@dataclass(frozen=True)
class StringDecomposition:
    """Multiset of q-strings, pairwise in general position."""

    parts: tuple  # sorted tuple of (QString, count)

    @classmethod
    def from_counter(cls, counter):
        return cls(tuple(sorted((s, c) for s, c in counter.items() if c)))

    def strings(self):
        """Strings listed with multiplicity."""
        out = []
        for s, c in self.parts:
            out.extend([s] * c)
        return out

    def to_drinfeld(self):
        acc = Counter()
        for s, c in self.parts:
            for k in s.exponents():
                acc[k] += c
        return DrinfeldData(acc.items())

    def translated(self, c):
        return StringDecomposition(tuple((s.translated(c), m) for s, m in self.parts))

    def to_json(self):
        return [{"base": s.k, "len": s.n, "count": c} for s, c in self.parts]

    @classmethod
    def from_json(cls, obj):
        return cls.from_counter(
            Counter({QString(int(e["len"]), int(e["base"])): int(e["count"]) for e in obj})
        )


def in_general_position(s, t):
    """True unless neither string contains the other and their union is a string."""
    a = set(s.exponents())
    b = set(t.exponents())
    if a <= b or b <= a:
        return True
    u = a | b
    return max(u) - min(u) + 1 != len(u)


def special_position_by_ratio(s, t):
    """Special-position test via the spectral ratio criterion.

    Equivalent to ``not in_general_position(s, t)``; kept separate as an
    independent check of the set-based predicate.
    """
    n, m = s.n, t.n
    diff = t.k - s.k
    offsets = set()
    for p in range(1, min(m, n) + 1):
        offsets.add(n - p + 1)
        offsets.add(-(m - p + 1))
    return diff in offsets


def kij_multiplicities(d):
    """String multiplicities k_{ij} for a dimension vector d on {1,...,n}.

    k_{ij} = max(0, min_{i<=k<=j} d_k - max(d_{i-1}, d_{j+1})) with the
    convention d_0 = d_{n+1} = 0; indices i, j are 1-based.
    """
    n = len(d)
    if any(x < 0 for x in d):
        raise ValueError("dimension vector must be nonnegative")

    def dv(i):
        return d[i - 1] if 1 <= i <= n else 0

    out = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            inner = min(dv(k) for k in range(i, j + 1))
            out[(i, j)] = max(0, inner - max(dv(i - 1), dv(j + 1)))
    return out


def decompose(dd):
    """Decompose a multiset of exponents into pairwise general-position strings."""
    if dd.is_empty():
        return StringDecomposition(())
    lo = dd.support[0]
    hi = dd.support[-1]
    d = [dd.multiplicity(lo + i) for i in range(hi - lo + 1)]
    acc = Counter()
    for (i, j), c in kij_multiplicities(d).items():
        if c:
            acc[QString(j - i + 1, lo + i - 1)] += c
    return StringDecomposition.from_counter(acc)


_DEFAULT_CAP = 10


def _bruteforce_cap():
    return int(os.environ.get("QCHAR_SWEEP_CAP", _DEFAULT_CAP))


def _enumerate_partitions(mult, memo):
    """All partitions of the multiset into strings, as frozensets of
    (QString, count) Counter items.  Each step extracts a string starting
    at the smallest remaining exponent."""
    if not mult:
        return {frozenset()}
    key = tuple(sorted(mult.items()))
    if key in memo:
        return memo[key]
    lo = min(mult)
    results = set()
    length = 1
    while all(mult.get(lo + i, 0) > 0 for i in range(length)):
        rest = dict(mult)
        for i in range(length):
            rest[lo + i] -= 1
            if rest[lo + i] == 0:
                del rest[lo + i]
        s = QString(length, lo)
        for tail in _enumerate_partitions(rest, memo):
            acc = Counter(dict(tail))
            acc[s] += 1
            results.add(frozenset(acc.items()))
        length += 1
    memo[key] = results
    return results


def decompose_bruteforce(dd, cap=None):
    """Oracle: exhaustively search for the unique general-position decomposition.

    Raises if zero or more than one candidate survives the pairwise
    general-position filter, which would falsify uniqueness (or reveal a
    predicate bug).
    """
    cap = _bruteforce_cap() if cap is None else cap
    if dd.total() > cap:
        raise ValueError(f"multiset too large for brute force (total {dd.total()} > cap {cap})")
    valid = []
    for partition in _enumerate_partitions(dict(dd.items()), {}):
        strings = []
        for s, c in partition:
            strings.extend([s] * c)
        ok = True
        for a in range(len(strings)):
            for b in range(a + 1, len(strings)):
                if not in_general_position(strings[a], strings[b]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            valid.append(StringDecomposition.from_counter(Counter(dict(partition))))
    if len(valid) != 1:
        raise RuntimeError(
            f"expected exactly one general-position decomposition of {dd}, found {len(valid)}"
        )
    return valid[0]
