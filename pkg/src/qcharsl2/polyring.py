"""Exact sparse arithmetic in the spectral Laurent ring and in Z[t].

Spectral variables are written Y[k] for integer k; a monomial is a finite
product of Y[k]^e with nonzero integer exponents, a Laurent polynomial a
finite integer combination of monomials.  Everything is immutable and kept
in canonical form (no zero exponents, no zero coefficients), so values are
hashable and safe to share.  Coefficients are Python ints and never
overflow.

The A-variables sit at half-integer positions: A at position k+1/2 is
Y[k]*Y[k+1].  Half-integer positions are stored as doubled (odd) integers
and only printed as "k+1/2".
"""

from __future__ import annotations

from collections.abc import Mapping
from functools import lru_cache


class Monomial:
    """A product of spectral variables Y[k]^e, stored sparsely."""

    __slots__ = ("_exps",)

    def __init__(self, exps=()):
        items = exps.items() if isinstance(exps, Mapping) else exps
        acc: dict[int, int] = {}
        for k, e in items:
            acc[k] = acc.get(k, 0) + e
        self._exps = tuple(sorted((k, e) for k, e in acc.items() if e != 0))

    @classmethod
    def y(cls, k, e=1):
        return cls(((k, e),))

    @property
    def exps(self):
        """Exponent map as a plain dict {spectral position: power}."""
        return dict(self._exps)

    def exponent(self, k):
        return dict(self._exps).get(k, 0)

    @property
    def support(self):
        return tuple(k for k, _ in self._exps)

    def is_trivial(self):
        return not self._exps

    def is_dominant(self):
        return all(e >= 0 for _, e in self._exps)

    def sort_key(self):
        """Canonical key: lexicographic on (position, power), ascending."""
        return self._exps

    def __mul__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return Monomial(self._exps + other._exps)

    def __pow__(self, e):
        return Monomial(tuple((k, ek * e) for k, ek in self._exps))

    def inverse(self):
        return self ** (-1)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self._exps == other._exps

    def __hash__(self):
        return hash(self._exps)

    def __repr__(self):
        return f"Monomial({self._exps!r})"

    def __str__(self):
        if not self._exps:
            return "1"
        parts = []
        for k, e in self._exps:
            parts.append(f"Y[{k}]" if e == 1 else f"Y[{k}]^{e}")
        return "*".join(parts)

    def to_json(self):
        return {str(k): e for k, e in self._exps}

    @classmethod
    def from_json(cls, obj):
        return cls((int(k), int(e)) for k, e in obj.items())


ONE_MONOMIAL = Monomial()


class LaurentPoly:
    """Integer Laurent polynomial in the spectral variables."""

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, int] = {}
        for m, c in items:
            acc[m] = acc.get(m, 0) + c
        self._terms = {m: c for m, c in acc.items() if c != 0}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls(((ONE_MONOMIAL, 1),))

    @classmethod
    def const(cls, c):
        return cls(((ONE_MONOMIAL, c),))

    @classmethod
    def y(cls, k, e=1):
        return cls(((Monomial.y(k, e), 1),))

    @classmethod
    def from_monomial(cls, m, c=1):
        return cls(((m, c),))

    def terms(self):
        """Terms as (monomial, coefficient) pairs in canonical order."""
        return sorted(self._terms.items(), key=lambda mc: mc[0].sort_key())

    def coefficient(self, m):
        return self._terms.get(m, 0)

    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, 0) + c
        return LaurentPoly(acc)

    def __neg__(self):
        return LaurentPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                acc[m] = acc.get(m, 0) + c1 * c2
        return LaurentPoly(acc)

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a Laurent polynomial")
        result = LaurentPoly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def dimension(self):
        """Sum of all coefficients (the evaluation Y[k] -> 1)."""
        return sum(self._terms.values())

    def dominant_monomials(self):
        """Terms supported on dominant monomials, in canonical order."""
        return [(m, c) for m, c in self.terms() if m.is_dominant()]

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f"LaurentPoly({self.terms()!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.terms():
            if m.is_trivial():
                parts.append(str(c))
            elif c == 1:
                parts.append(str(m))
            else:
                parts.append(f"{c}*{m}")
        return " + ".join(parts)

    def to_json(self):
        return [{"monomial": m.to_json(), "coeff": c} for m, c in self.terms()]

    @classmethod
    def from_json(cls, obj):
        return cls((Monomial.from_json(t["monomial"]), int(t["coeff"])) for t in obj)


def a_inverse_factorization(m1, m2):
    """Express m1/m2 as a product of inverse A-variables, if possible.

    Returns {doubled half-integer position: multiplicity} with zero entries
    dropped when m1/m2 = prod_j (Y[j]*Y[j+1])^(-c_j) with all c_j >= 0, and
    None otherwise.  The position key for A at j+1/2 is 2*j+1.  A non-None
    result witnesses m1 <= m2 in the dominance order.
    """
    delta = (m1 * m2.inverse()).exps
    if not delta:
        return {}
    lo = min(delta)
    hi = max(delta)
    out = {}
    c_prev = 0  # c below the support window
    for k in range(lo, hi + 1):
        c = -delta.get(k, 0) - c_prev
        if c < 0:
            return None
        if c:
            out[2 * k + 1] = c
        c_prev = c
    if c_prev != 0:  # telescoping must close above the window
        return None
    return out


def monomial_leq(m1, m2):
    """Dominance order: m1 <= m2 iff m1/m2 is a product of A^(-1)'s."""
    return a_inverse_factorization(m1, m2) is not None


def format_half_position(doubled):
    """Render a doubled half-integer A-position as 'k+1/2'."""
    if doubled % 2 == 0:
        raise ValueError(f"not a half-integer position: {doubled}")
    return f"{(doubled - 1) // 2}+1/2"


class TPoly:
    """Univariate integer polynomial in t, dense coefficient list."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def t_power(cls, n, c=1):
        if n < 0:
            raise ValueError("negative power of t")
        return cls((0,) * n + (c,))

    @property
    def coeffs(self):
        return self._coeffs

    def is_zero(self):
        return not self._coeffs

    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def __add__(self, other):
        if not isinstance(other, TPoly):
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        a = self._coeffs + (0,) * (n - len(self._coeffs))
        b = other._coeffs + (0,) * (n - len(other._coeffs))
        return TPoly(x + y for x, y in zip(a, b))

    def __mul__(self, other):
        if not isinstance(other, TPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return TPoly()
        out = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return TPoly(out)

    def eval_one(self):
        """Specialization t = 1: sum of coefficients."""
        return sum(self._coeffs)

    def __eq__(self, other):
        return isinstance(other, TPoly) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"TPoly({self._coeffs!r})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("t" if c == 1 else f"{c}*t")
            else:
                parts.append(f"t^{i}" if c == 1 else f"{c}*t^{i}")
        return " + ".join(parts)

    def to_json(self):
        return {"coeffs": list(self._coeffs)}

    @classmethod
    def from_json(cls, obj):
        return cls(int(c) for c in obj["coeffs"])


@lru_cache(maxsize=None)
def gauss_binom_t(a, n):
    """Gaussian binomial (a choose n)_t, zero when n > a.

    Built from the Pascal-type recurrence
    C(a,n)_t = C(a-1,n-1)_t + t^n * C(a-1,n)_t with C(a,0)_t = 1.
    """
    if a < 0 or n < 0:
        raise ValueError("gauss_binom_t needs nonnegative arguments")
    if n > a:
        return TPoly.zero()
    if n == 0:
        return TPoly.one()
    return gauss_binom_t(a - 1, n - 1) + TPoly.t_power(n) * gauss_binom_t(a - 1, n)
