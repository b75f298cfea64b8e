from itertools import combinations_with_replacement, product

import pytest

from qcharsl2.quiver_a import (
    ComplexStratum,
    Interval,
    degeneration_leq,
    euler_form,
    ext_dim,
    hom_dim,
    is_sparse,
    orbit_dim,
    rigid_decomposition,
    stratum,
)


def intervals_up_to(n):
    return [Interval(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]


def test_euler_form_examples():
    assert euler_form((1, 0), (1, 0)) == 1
    assert euler_form((1, 0), (0, 1)) == -1
    assert euler_form((1, 1), (1, 1)) == 1


def test_euler_form_length_mismatch():
    with pytest.raises(ValueError):
        euler_form((1,), (1, 0))


def test_ext_dim_examples():
    assert ext_dim(Interval(1, 1), Interval(2, 2)) == 1
    assert ext_dim(Interval(1, 2), Interval(1, 1)) == 0
    for u in intervals_up_to(5):
        assert ext_dim(u, u) == 0


def test_hom_dim_examples():
    assert hom_dim(Interval(1, 2), Interval(1, 1), n=2) == 1
    assert hom_dim(Interval(1, 1), Interval(2, 2), n=2) == 0
    for u in intervals_up_to(5):
        assert hom_dim(u, u, n=5) == 1


def test_hom_minus_ext_is_euler():
    for n in range(1, 7):
        for u in intervals_up_to(n):
            for v in intervals_up_to(n):
                assert hom_dim(u, v, n) - ext_dim(u, v) == euler_form(
                    u.dim_vector(n), v.dim_vector(n)
                )


def test_rigid_decomposition_examples():
    assert dict(rigid_decomposition((1, 1))) == {Interval(1, 2): 1}
    assert dict(rigid_decomposition((2, 1))) == {Interval(1, 1): 1, Interval(1, 2): 1}
    assert dict(rigid_decomposition((0, 0))) == {}


def test_rigid_decomposition_ext_vanishes():
    for n in range(1, 5):
        for d in product(range(4), repeat=n):
            summands = list(rigid_decomposition(d))
            for u, v in combinations_with_replacement(summands, 2):
                assert ext_dim(u, v) == 0
                assert ext_dim(v, u) == 0


def test_stratum_examples():
    s = stratum((1, 3), (1,))
    assert s.h == (0, 2)
    assert s.omega == frozenset({1})
    s = stratum((1, 1), (1,))
    assert s.h == (0, 0)
    assert s.omega == frozenset()
    with pytest.raises(ValueError):
        stratum((1, 0), (1,))


def test_is_sparse():
    assert is_sparse(stratum((1, 3), (1,)))
    assert not is_sparse(stratum((1, 1), (0,)))  # Omega = {0, 1}
    assert is_sparse(stratum((1, 1), (1,)))  # Omega empty


def test_degeneration_leq():
    assert degeneration_leq((0, 0), (1, 0))
    assert not degeneration_leq((1, 0), (0, 1))
    assert degeneration_leq((2, 1), (2, 1))
    with pytest.raises(ValueError):
        degeneration_leq((0,), (0, 0))


def test_orbit_dim_examples():
    assert orbit_dim(stratum((1, 1), (1,))) == 1
    assert orbit_dim(stratum((1, 2, 1), (1, 1))) == 3
    for w in [(2,), (1, 1), (3, 2, 1)]:
        zero = stratum(w, (0,) * (len(w) - 1))
        assert orbit_dim(zero) == 0


def valid_rank_tuples(w):
    n = len(w)
    if n == 1:
        yield ()
        return
    bound = max(w)
    for r in product(range(bound + 1), repeat=n - 1):
        try:
            stratum(w, r)
        except ValueError:
            continue
        yield r


def test_orbit_dim_strictly_monotone_in_degeneration():
    for w in product(range(4), repeat=3):
        ranks = list(valid_rank_tuples(w))
        for r1 in ranks:
            for r2 in ranks:
                if r1 != r2 and degeneration_leq(r1, r2):
                    assert orbit_dim(stratum(w, r1)) < orbit_dim(stratum(w, r2))


def test_interval_validation():
    with pytest.raises(ValueError):
        Interval(3, 2)
    with pytest.raises(ValueError):
        Interval(0, 1)
    with pytest.raises(ValueError):
        Interval(1, 3).dim_vector(2)


def test_stratum_json():
    s = stratum((1, 3), (1,))
    assert s.to_json() == {"w": [1, 3], "r": [1], "h": [0, 2], "omega": [1]}
    assert ComplexStratum((1, 3), (1,)) == s
