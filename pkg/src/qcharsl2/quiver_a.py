"""Equioriented A_n quiver combinatorics and varieties of complexes.

Interval indecomposables U_{i,j} (support e_i + ... + e_j on the quiver
1 -> 2 -> ... -> n), their Hom/Ext dimensions, the rigid module of a given
dimension vector, and orbit data of varieties of complexes: Betti numbers
h_i = w_i - r_{i-1} - r_i, the support set Omega, sparsity, the
componentwise degeneration order, and orbit dimensions.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .qstrings import kij_multiplicities


@dataclass(frozen=True, order=True)
class Interval:
    """The indecomposable U_{i,j}, 1 <= i <= j."""

    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i <= self.j:
            raise ValueError(f"bad interval ({self.i},{self.j})")

    def dim_vector(self, n):
        if self.j > n:
            raise ValueError(f"interval ({self.i},{self.j}) does not fit in A_{n}")
        return tuple(1 if self.i <= v <= self.j else 0 for v in range(1, n + 1))

    def __str__(self):
        return f"U[{self.i},{self.j}]"


def euler_form(d, e):
    """Euler form of the equioriented A_n quiver on dimension vectors."""
    if len(d) != len(e):
        raise ValueError("dimension vectors must have equal length")
    return sum(di * ei for di, ei in zip(d, e)) - sum(
        d[i] * e[i + 1] for i in range(len(d) - 1)
    )


def ext_dim(u, v):
    """dim Ext^1(U_{i,j}, U_{r,s}): 1 iff i+1 <= r <= j+1 <= s, else 0."""
    return 1 if u.i + 1 <= v.i <= u.j + 1 <= v.j else 0


def hom_dim(u, v, n=None):
    """dim Hom(U_{i,j}, U_{r,s}), derived from the Euler form and Ext."""
    if n is None:
        n = max(u.j, v.j)
    h = euler_form(u.dim_vector(n), v.dim_vector(n)) + ext_dim(u, v)
    if h not in (0, 1):
        raise RuntimeError(f"hom_dim({u},{v}) = {h}: Euler/Ext bookkeeping is broken")
    return h


def rigid_decomposition(d):
    """Indecomposable summands of the rigid representation of dimension d.

    Returns a Counter {Interval: multiplicity}.  Verifies that the summands
    have no extensions between them and that dimension vectors add up.
    """
    n = len(d)
    summands = Counter()
    for (i, j), c in kij_multiplicities(d).items():
        if c:
            summands[Interval(i, j)] += c
    total = [0] * n
    for u, c in summands.items():
        for v, x in enumerate(u.dim_vector(n)):
            total[v] += c * x
    if tuple(total) != tuple(d):
        raise RuntimeError(f"rigid summands of {d} have wrong total dimension {total}")
    intervals = list(summands)
    for u in intervals:
        for v in intervals:
            if ext_dim(u, v) != 0:
                raise RuntimeError(f"Ext^1({u},{v}) != 0 in rigid decomposition of {d}")
    return summands


@dataclass(frozen=True)
class ComplexStratum:
    """An orbit of the variety of complexes: weights w, ranks r, and the
    derived Betti numbers h with support Omega."""

    w: tuple
    r: tuple
    h: tuple = field(init=False)
    omega: frozenset = field(init=False)

    def __post_init__(self):
        w, r = tuple(self.w), tuple(self.r)
        n = len(w)
        if len(r) != max(n - 1, 0):
            raise ValueError(f"rank tuple must have length {n - 1}, got {len(r)}")
        if any(x < 0 for x in w) or any(x < 0 for x in r):
            raise ValueError("weights and ranks must be nonnegative")
        h = []
        for i in range(n):
            r_prev = r[i - 1] if i >= 1 else 0
            r_here = r[i] if i <= n - 2 else 0
            hi = w[i] - r_prev - r_here
            if hi < 0:
                raise ValueError(f"not a rank tuple for w: h_{i} = {hi} < 0")
            h.append(hi)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "h", tuple(h))
        object.__setattr__(self, "omega", frozenset(i for i, hi in enumerate(h) if hi))

    def to_json(self):
        return {
            "w": list(self.w),
            "r": list(self.r),
            "h": list(self.h),
            "omega": sorted(self.omega),
        }


def stratum(w, r):
    return ComplexStratum(tuple(w), tuple(r))


def is_sparse(s):
    """True iff Omega contains no two consecutive indices."""
    return all(i + 1 not in s.omega for i in s.omega)


def degeneration_leq(r1, r2):
    """Closure order on orbits: componentwise comparison of rank tuples."""
    if len(r1) != len(r2):
        raise ValueError("rank tuples must have equal length")
    return all(a <= b for a, b in zip(r1, r2))


def orbit_dim(s):
    """Dimension of the orbit O(r) inside Com(W_*).

    dim O = dim G - dim End(M) for the module M with r_i two-vertex
    summands U_{i+1,i+2} and h_i one-vertex summands U_{i+1,i+1}.
    """
    n = len(s.w)
    summands = Counter()
    for i, ri in enumerate(s.r):
        if ri:
            summands[Interval(i + 1, i + 2)] += ri
    for i, hi in enumerate(s.h):
        if hi:
            summands[Interval(i + 1, i + 1)] += hi
    end = 0
    for u, cu in summands.items():
        for v, cv in summands.items():
            end += cu * cv * hom_dim(u, v, n)
    return sum(x * x for x in s.w) - end
