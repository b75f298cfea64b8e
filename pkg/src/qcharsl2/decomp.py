"""Decomposition numbers of standard modules.

Two independent routes to [M(pi) : V(pitilde)]:

* a closed binomial formula through the rank tuple of a variety of
  complexes, valid when the Betti support Omega(r) is sparse, together
  with the graded refinement (IC stalk Poincare polynomials), and
* a character-elimination oracle that peels maximal dominant monomials
  off the standard character; injectivity of the character map makes the
  full decomposition row recoverable this way.

The two are cross-validated over exhaustive sweeps in the test suite.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product as iproduct
from math import comb

from .characters import simple_character, standard_character
from .polyring import LaurentPoly, TPoly, gauss_binom_t, monomial_leq
from .qstrings import DrinfeldData
from .quiver_a import ComplexStratum, is_sparse, stratum

_DEFAULT_CAP = 10


def _oracle_cap():
    return int(os.environ.get("QCHAR_SWEEP_CAP", _DEFAULT_CAP))


@dataclass(frozen=True)
class MultiplicityQuery:
    """A standard module pi and a simple target pitilde, on one coset."""

    pi: DrinfeldData
    pitilde: DrinfeldData


def _window_data(q):
    """Common window of q.pi: returns (w, h) exponent vectors, or None when
    q.pitilde sticks out of the window (multiplicity is then zero)."""
    pi, pt = q.pi, q.pitilde
    if pi.is_empty():
        return ((), ()) if pt.is_empty() else None
    lo = pi.support[0]
    hi = pi.support[-1]
    if not pt.is_empty() and (pt.support[0] < lo or pt.support[-1] > hi):
        return None
    w = tuple(pi.multiplicity(k) for k in range(lo, hi + 1))
    h = tuple(pt.multiplicity(k) for k in range(lo, hi + 1))
    return w, h


def rank_tuple(q):
    """Rank tuple r_i = sum_{j<=i} (-1)^(i+j) (w_j - h_j), or None.

    None signals that no valid rank tuple exists, which forces the
    multiplicity to vanish.  A valid result satisfies r_i >= 0 for all i
    and closes with r_{n-2} = w_{n-1} - h_{n-1}.
    """
    data = _window_data(q)
    if data is None:
        return None
    w, h = data
    n = len(w)
    if n == 0:
        return ()
    r = []
    prev = 0
    for i in range(n - 1):
        ri = (w[i] - h[i]) - prev
        if ri < 0:
            return None
        r.append(ri)
        prev = ri
    if prev != w[n - 1] - h[n - 1]:
        return None
    return tuple(r)


def multiplicity_closed(q):
    """Closed-form decomposition number.

    Returns 0 when no rank tuple exists, the binomial sum when Omega(r)
    is sparse, and None (formula not applicable) otherwise.
    """
    r = rank_tuple(q)
    if r is None:
        return 0
    data = _window_data(q)
    w, _ = data
    n = len(w)
    if n == 0:
        return 1
    if not any(r):
        # r = 0 forces pitilde = pi; the stalk sits on the open stratum
        return 1
    s = stratum(w, r)
    if not is_sparse(s):
        return None

    def rv(i):
        return r[i] if 0 <= i <= n - 2 else 0

    omega = sorted(s.omega)
    off_omega = 1
    for i in range(n):
        if i not in s.omega:
            off_omega *= comb(rv(i - 1) + rv(i), rv(i))
    total = 0
    for a in iproduct(*(range(min(rv(i - 1), rv(i)) + 1) for i in omega)):
        term = off_omega
        for i, ai in zip(omega, a):
            term *= comb(rv(i), rv(i) - ai) * comb(rv(i - 1), ai)
        total += term
    return total


@dataclass(frozen=True)
class StalkQuery:
    """An IC stalk question: sparse stratum (w, r) and rank drop k <= r."""

    stratum: ComplexStratum
    k: tuple


def ic_stalk_poly(sq):
    """Poincare polynomial of the IC stalk of the closure of O(r) at a
    point of O(r - k).

    sum over tuples (0 <= a_i <= min(k_{i-1}, k_i)) for i in Omega(r) of
    t^(sum (h_i + a_i) a_i) * prod_{i in Omega} (k_i ch k_i-a_i)_t
    (k_{i-1} ch a_i)_t * prod_{i not in Omega} (k_{i-1}+k_i ch k_i)_t,
    with k_{-1} = k_{n-1} = 0.
    """
    s = sq.stratum
    n = len(s.w)
    k = tuple(sq.k)
    if not is_sparse(s):
        raise ValueError("not sparse: the orbit closure is not an irreducible component")
    if len(k) != len(s.r):
        raise ValueError("invalid stalk point: rank drop has wrong length")
    if any(ki < 0 or ki > ri for ki, ri in zip(k, s.r)):
        raise ValueError("invalid stalk point: need 0 <= k <= r componentwise")

    def kv(i):
        return k[i] if 0 <= i <= n - 2 else 0

    omega = sorted(s.omega)
    off_omega = TPoly.one()
    for i in range(n):
        if i not in s.omega:
            off_omega = off_omega * gauss_binom_t(kv(i - 1) + kv(i), kv(i))
    total = TPoly.zero()
    for a in iproduct(*(range(min(kv(i - 1), kv(i)) + 1) for i in omega)):
        shift = sum((s.h[i] + ai) * ai for i, ai in zip(omega, a))
        term = TPoly.t_power(shift) * off_omega
        for i, ai in zip(omega, a):
            term = term * gauss_binom_t(kv(i), kv(i) - ai)
            term = term * gauss_binom_t(kv(i - 1), ai)
        total = total + term
    return total


def decomposition_row(pi, reverse_ties=False, cap=None):
    """Full decomposition of the standard module M(pi) into simples.

    Character elimination: repeatedly pick the maximal dominant monomial
    of the remainder (ties broken by the canonical monomial order, or its
    reverse), record its coefficient, and subtract that many copies of
    the corresponding simple character.  Returns {DrinfeldData: mult}.
    """
    cap = _oracle_cap() if cap is None else cap
    if pi.total() > cap:
        raise ValueError(f"standard module too large for the oracle (cap {cap})")
    chi = standard_character(pi)
    budget = len(chi.dominant_monomials())
    row = {}
    steps = 0
    while not chi.is_zero():
        dom = chi.dominant_monomials()
        if not dom:
            raise RuntimeError("nonzero remainder with no dominant monomials")
        monomials = [m for m, _ in dom]
        maximal = [
            m
            for m in monomials
            if not any(m2 != m and monomial_leq(m, m2) for m2 in monomials)
        ]
        maximal.sort(key=lambda m: m.sort_key(), reverse=reverse_ties)
        m = maximal[0]
        c = chi.coefficient(m)
        if c <= 0:
            raise RuntimeError(f"nonpositive leading coefficient {c} at {m}")
        dd = DrinfeldData(m.exps.items())
        row[dd] = c
        chi = chi - simple_character(dd) * LaurentPoly.const(c)
        steps += 1
        if steps > budget:
            raise RuntimeError("elimination exceeded the dominant-term budget")
    return row


def multiplicity_oracle(q, cap=None):
    """Brute-force decomposition number via character elimination."""
    return decomposition_row(q.pi, cap=cap).get(q.pitilde, 0)
