"""q-characters of Kirillov-Reshetikhin, simple, and standard modules.

Spectral exponents index the variables: Y[k] stands for the q-character
variable at spectral parameter a*q^(2k) on a fixed coset.  The KR module
of string length n based at k has the explicit (n+1)-term character; a
simple module is the product of the KR characters of its string
decomposition; a standard module is the product of fundamental
characters.  All identities here are exact.
"""

from __future__ import annotations

from itertools import product as iproduct
from math import comb

from .polyring import LaurentPoly, Monomial
from .qstrings import decompose


def kr_character(n, k):
    """Character of the KR module with string {k, ..., k+n-1}; n = 0 gives 1.

    sum_{i=0..n}  prod_{j=1..n-i} Y[k+j-1]  *  prod_{j=1..i} Y[k+n-i+j]^(-1)
    """
    if n < 0:
        raise ValueError("string length must be nonnegative")
    terms = []
    for i in range(n + 1):
        exps = {}
        for j in range(1, n - i + 1):
            exps[k + j - 1] = exps.get(k + j - 1, 0) + 1
        for j in range(1, i + 1):
            exps[k + n - i + j] = exps.get(k + n - i + j, 0) - 1
        terms.append((Monomial(exps), 1))
    return LaurentPoly(terms)


def t_system_holds(n, k):
    """Exact check of chi(W_n,k)*chi(W_n,k+1) = chi(W_{n+1},k)*chi(W_{n-1},k+1) + 1."""
    if n < 1:
        raise ValueError("t-system needs n >= 1")
    lhs = kr_character(n, k) * kr_character(n, k + 1)
    rhs = kr_character(n + 1, k) * kr_character(n - 1, k + 1) + LaurentPoly.one()
    return lhs == rhs


def simple_character(dd):
    """Character of the simple module: product of KR characters over the
    string decomposition of the Drinfeld data."""
    chi = LaurentPoly.one()
    for s in decompose(dd).strings():
        chi = chi * kr_character(s.n, s.k)
    return chi


def standard_character(dd):
    """Character of the standard module: product of fundamental characters."""
    chi = LaurentPoly.one()
    for k in dd.zeros_with_multiplicity():
        chi = chi * kr_character(1, k)
    return chi


def standard_character_geometric(dd):
    """Standard character as an Euler-characteristic sum over subspace data.

    With w_k the multiplicity at exponent k over the support window, sums
    prod_k C(w_k, v_k) * Y^w * prod_k (Y[k]*Y[k+1])^(-v_k) over all tuples
    0 <= v_k <= w_k.  The fibers are products of Grassmannians, so the
    Euler characteristics are plain binomials.
    """
    if dd.is_empty():
        return LaurentPoly.one()
    lo = dd.support[0]
    hi = dd.support[-1]
    window = list(range(lo, hi + 1))
    w = [dd.multiplicity(k) for k in window]
    top = Monomial((k, wk) for k, wk in zip(window, w) if wk)
    terms = []
    for v in iproduct(*(range(wk + 1) for wk in w)):
        coeff = 1
        exps = dict(top.exps)
        for k, vk in zip(window, v):
            if vk == 0:
                continue
            exps[k] = exps.get(k, 0) - vk
            exps[k + 1] = exps.get(k + 1, 0) - vk
        for wk, vk in zip(w, v):
            coeff *= comb(wk, vk)
        terms.append((Monomial(exps), coeff))
    return LaurentPoly(terms)


def standard_ordering(dd):
    """Zeros with multiplicity in an order admissible for the standard
    tensor product: non-increasing spectral exponents."""
    return sorted(dd.zeros_with_multiplicity(), reverse=True)


def highest_monomial(dd):
    """The dominant monomial prod_k Y[k]^mult(k)."""
    return Monomial(dd.items())
