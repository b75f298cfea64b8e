"""Exhaustive verification sweeps cross-checking closed formulas against
independent oracles.

Each driver returns a SweepResult with the number of checks performed and
a list of human-readable failure descriptions (empty on success).  The
CLI `sweep-verify` verb and the acceptance test suite both run these.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product as iproduct
from math import comb

from . import characters, decomp, qstrings, quiver_a
from .polyring import TPoly, gauss_binom_t
from .qstrings import DrinfeldData, QString


@dataclass
class SweepResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def check(self, condition, message):
        self.checked += 1
        if not condition:
            self.failures.append(message)

    def summary(self):
        status = "ok" if self.ok else f"{len(self.failures)} FAILED"
        return f"{self.name}: {self.checked} checks, {status}"


# ---------------------------------------------------------------------------
# independent oracles


def _poly_divide_exact(num, den):
    """Exact long division of dense integer coefficient lists; raises on
    a nonzero remainder."""
    num = list(num)
    while den and den[-1] == 0:
        den = den[:-1]
    if not den:
        raise ZeroDivisionError("division by zero polynomial")
    out = [0] * max(len(num) - len(den) + 1, 0)
    for i in range(len(num) - len(den), -1, -1):
        c, rem = divmod(num[i + len(den) - 1], den[-1])
        if rem:
            raise ArithmeticError("inexact polynomial division")
        out[i] = c
        for j, dj in enumerate(den):
            num[i + j] -= c * dj
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


def gauss_binom_product(a, n):
    """Product-form Gaussian binomial prod_{i=1..n} (1-t^(a-i+1))/(1-t^i).

    Independent of the Pascal recurrence used by gauss_binom_t.
    """
    if n > a:
        return TPoly.zero()
    num = [1]
    den = [1]
    for i in range(1, n + 1):
        num = TPoly(num) * TPoly([1] + [0] * (a - i) + [-1])
        den = TPoly(den) * TPoly([1] + [0] * (i - 1) + [-1])
        num, den = list(num.coeffs), list(den.coeffs)
    return TPoly(_poly_divide_exact(num, den))


def enum_drinfeld(window, total):
    """All Drinfeld data normalized to minimal exponent 0, supported on a
    window of length <= `window`, with total multiplicity 1..`total`;
    the empty multiset comes first."""
    yield DrinfeldData()
    for length in range(1, window + 1):
        for mults in iproduct(*(range(total + 1) for _ in range(length))):
            if mults[0] == 0:
                continue
            if length > 1 and mults[-1] == 0:
                continue
            if not 1 <= sum(mults) <= total:
                continue
            yield DrinfeldData((k, m) for k, m in enumerate(mults) if m)


# ---------------------------------------------------------------------------
# sweeps


def sweep_gauss(amax=8, symmetry_amax=10):
    res = SweepResult("gauss-binomials")
    for a in range(amax + 1):
        for n in range(a + 1):
            rec = gauss_binom_t(a, n)
            res.check(
                rec == gauss_binom_product(a, n),
                f"recurrence != product form at ({a},{n})",
            )
    for a in range(symmetry_amax + 1):
        for n in range(a + 1):
            p = gauss_binom_t(a, n)
            res.check(p == gauss_binom_t(a, a - n), f"symmetry fails at ({a},{n})")
            res.check(all(c >= 0 for c in p.coeffs), f"negative coefficient at ({a},{n})")
            res.check(p.eval_one() == comb(a, n), f"t=1 value wrong at ({a},{n})")
    return res


def sweep_tsystem(nmax=5, kmin=-4, kmax=4):
    res = SweepResult("t-system")
    for n in range(1, nmax + 1):
        for k in range(kmin, kmax + 1):
            res.check(characters.t_system_holds(n, k), f"t-system fails at (n={n}, k={k})")
    return res


def sweep_string_decomposition(window=4, total=8):
    """decompose vs brute force, plus conservation and translation invariance."""
    res = SweepResult("string-decomposition")
    for dd in enum_drinfeld(window, total):
        dec = qstrings.decompose(dd)
        res.check(dec.to_drinfeld() == dd, f"parts of {dd} do not add up")
        strings = dec.strings()
        res.check(
            all(
                qstrings.in_general_position(strings[a], strings[b])
                for a in range(len(strings))
                for b in range(a + 1, len(strings))
            ),
            f"parts of {dd} not pairwise general",
        )
        try:
            brute = qstrings.decompose_bruteforce(dd, cap=total)
        except RuntimeError as exc:
            res.check(False, f"brute force on {dd}: {exc}")
            continue
        res.check(dec == brute, f"decompose != brute force on {dd}")
        shifted = qstrings.decompose(dd.translated(3))
        res.check(shifted == dec.translated(3), f"translation invariance fails on {dd}")
    return res


def sweep_strings_rigid(nmax=5, dmax=8):
    """Rigid-module decomposition vs string decomposition (interval U_{i,j}
    corresponds to the string of length j-i+1 based at exponent i)."""
    res = SweepResult("strings-vs-rigid")
    for n in range(1, nmax + 1):
        for d in iproduct(*(range(dmax + 1) for _ in range(n))):
            if sum(d) > dmax:
                continue
            try:
                summands = quiver_a.rigid_decomposition(d)
            except RuntimeError as exc:
                res.check(False, f"rigid_decomposition({d}): {exc}")
                continue
            dd = DrinfeldData(
                (k + 1, m) for k, m in enumerate(d) if m
            )
            dec = qstrings.decompose(dd)
            expected = Counter(
                {QString(u.j - u.i + 1, u.i): c for u, c in summands.items()}
            )
            got = Counter(dict(dec.parts))
            res.check(got == expected, f"intervals != strings at n={n}, d={d}")
            if 0 < sum(d) <= dmax:
                brute = qstrings.decompose_bruteforce(dd, cap=dmax)
                res.check(dec == brute, f"decompose != brute force at n={n}, d={d}")
    return res


def sweep_standard_geometric(window=4, total=8):
    res = SweepResult("standard-character")
    for dd in enum_drinfeld(window, total):
        prod = characters.standard_character(dd)
        geom = characters.standard_character_geometric(dd)
        res.check(prod == geom, f"product != geometric form on {dd}")
        res.check(
            prod.dimension() == 2 ** dd.total(),
            f"dimension != 2^deg on {dd}",
        )
    return res


def sweep_multiplicities(window=4, total=6):
    """Closed formula vs elimination oracle across full decomposition rows,
    plus row sanity and tie-break robustness."""
    res = SweepResult("multiplicities")
    for pi in enum_drinfeld(window, total):
        row = decomp.decomposition_row(pi, cap=total)
        row_rev = decomp.decomposition_row(pi, reverse_ties=True, cap=total)
        res.check(row == row_rev, f"tie-break changes the row of {pi}")
        res.check(row.get(pi) == 1, f"multiplicity of {pi} in its own row != 1")
        dim_total = sum(
            c * characters.simple_character(dd).dimension() for dd, c in row.items()
        )
        res.check(
            dim_total == 2 ** pi.total(),
            f"dimension bookkeeping fails for {pi}",
        )
        for pitilde, mult in row.items():
            q = decomp.MultiplicityQuery(pi, pitilde)
            closed = decomp.multiplicity_closed(q)
            if closed is not None:
                res.check(
                    closed == mult,
                    f"closed={closed} oracle={mult} on pi={pi}, pitilde={pitilde}",
                )
        # invalid targets: perturbations that leave the row (expect 0)
        for pitilde in _invalid_targets(pi, row):
            q = decomp.MultiplicityQuery(pi, pitilde)
            oracle = row.get(pitilde, 0)
            res.check(oracle == 0, f"perturbed target {pitilde} unexpectedly in row of {pi}")
            if decomp.rank_tuple(q) is None:
                res.check(
                    decomp.multiplicity_closed(q) == 0,
                    f"closed formula nonzero on rankless query pi={pi}, pitilde={pitilde}",
                )
    return res


def _invalid_targets(pi, row):
    """A few Drinfeld data near the row keys but outside the row."""
    out = []
    for pitilde in list(row)[:3]:
        shifted = pitilde.translated(max(pi.support, default=0) + 2)
        if shifted not in row:
            out.append(shifted)
        bumped = DrinfeldData(list(pitilde.items()) + [(max(pi.support, default=0) + 1, 1)])
        if bumped not in row:
            out.append(bumped)
    return out


def _enum_rank_tuples(w):
    n = len(w)
    if n <= 1:
        yield ()
        return
    bound = max(w) if w else 0
    for r in iproduct(*(range(bound + 1) for _ in range(n - 1))):
        try:
            quiver_a.stratum(w, r)
        except ValueError:
            continue
        yield r


def sweep_ic_stalks(nmax=4, wmax=3):
    res = SweepResult("ic-stalks")
    for n in range(1, nmax + 1):
        for w in iproduct(*(range(wmax + 1) for _ in range(n))):
            for r in _enum_rank_tuples(w):
                s = quiver_a.stratum(w, r)
                if not quiver_a.is_sparse(s):
                    continue
                dim_r = quiver_a.orbit_dim(s)
                for k in iproduct(*(range(ri + 1) for ri in r)):
                    p = decomp.ic_stalk_poly(decomp.StalkQuery(s, k))
                    res.check(
                        all(c >= 0 for c in p.coeffs),
                        f"negative stalk coefficient at w={w}, r={r}, k={k}",
                    )
                    res.check(
                        p.coeffs and p.coeffs[0] == 1,
                        f"constant term != 1 at w={w}, r={r}, k={k}",
                    )
                    if any(k):
                        codim = dim_r - quiver_a.orbit_dim(
                            quiver_a.stratum(w, tuple(ri - ki for ri, ki in zip(r, k)))
                        )
                        res.check(
                            2 * p.degree() < codim,
                            f"degree bound fails at w={w}, r={r}, k={k}",
                        )
                # stalk at the origin (k = r) vs the closed multiplicity
                p0 = decomp.ic_stalk_poly(decomp.StalkQuery(s, tuple(r)))
                pi = DrinfeldData((i, wi) for i, wi in enumerate(w) if wi)
                pitilde = DrinfeldData((i, hi) for i, hi in enumerate(s.h) if hi)
                closed = decomp.multiplicity_closed(decomp.MultiplicityQuery(pi, pitilde))
                res.check(
                    closed == p0.eval_one(),
                    f"stalk at origin != closed multiplicity at w={w}, r={r}",
                )
    return res


def run_all(
    window=4,
    mult_total=6,
    geo_total=8,
    rigid_n=5,
    rigid_total=8,
    stalk_n=4,
    stalk_wmax=3,
):
    """The full verification grid, at acceptance-criteria defaults."""
    return [
        sweep_gauss(),
        sweep_tsystem(),
        sweep_string_decomposition(window=window, total=geo_total),
        sweep_strings_rigid(nmax=rigid_n, dmax=rigid_total),
        sweep_standard_geometric(window=window, total=geo_total),
        sweep_multiplicities(window=window, total=mult_total),
        sweep_ic_stalks(nmax=stalk_n, wmax=stalk_wmax),
    ]
