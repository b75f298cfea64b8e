import pytest

from qcharsl2.decomp import (
    MultiplicityQuery,
    StalkQuery,
    decomposition_row,
    ic_stalk_poly,
    multiplicity_closed,
    multiplicity_oracle,
    rank_tuple,
)
from qcharsl2.polyring import TPoly
from qcharsl2.qstrings import DrinfeldData
from qcharsl2.quiver_a import stratum
from qcharsl2.sweeps import enum_drinfeld


def Q(pi, pitilde):
    return MultiplicityQuery(DrinfeldData(pi), DrinfeldData(pitilde))


def test_rank_tuple_paper_example():
    assert rank_tuple(Q({0: 1, 1: 3}, {1: 2})) == (1,)


def test_rank_tuple_trivial_cases():
    assert rank_tuple(Q({0: 2, 1: 1}, {0: 2, 1: 1})) == (0,)
    assert rank_tuple(Q({0: 1, 1: 1}, {0: 1, 1: 1})) == (0,)
    assert rank_tuple(Q({}, {})) == ()


def test_rank_tuple_absent():
    # pitilde outside the window of pi
    assert rank_tuple(Q({0: 1, 1: 1}, {5: 1})) is None
    # negative intermediate rank
    assert rank_tuple(Q({0: 1, 1: 1}, {0: 2})) is None
    # closing condition fails
    assert rank_tuple(Q({0: 1, 1: 2}, {0: 1, 1: 2, })) == (0,)
    assert rank_tuple(Q({0: 2, 1: 1}, {1: 1})) is None


def test_multiplicity_closed_paper_example():
    assert multiplicity_closed(Q({0: 1, 1: 3}, {1: 2})) == 1


def test_multiplicity_closed_examples():
    assert multiplicity_closed(Q({0: 1, 1: 1}, {})) == 1
    assert multiplicity_closed(Q({0: 1, 1: 3}, {0: 1, 1: 3})) == 1
    assert multiplicity_closed(Q({0: 1, 1: 1}, {5: 1})) == 0


def test_multiplicity_oracle_examples():
    assert multiplicity_oracle(Q({0: 1, 1: 3}, {1: 2})) == 1
    assert multiplicity_oracle(Q({0: 1, 1: 1}, {0: 1, 1: 1})) == 1
    assert multiplicity_oracle(Q({0: 1, 1: 1}, {})) == 1
    assert multiplicity_oracle(Q({0: 1, 1: 1}, {5: 1})) == 0


def test_decomposition_row_examples():
    row = decomposition_row(DrinfeldData({0: 1, 1: 1}))
    assert row == {DrinfeldData({0: 1, 1: 1}): 1, DrinfeldData(): 1}
    row = decomposition_row(DrinfeldData({0: 1, 5: 1}))
    assert row == {DrinfeldData({0: 1, 5: 1}): 1}
    assert decomposition_row(DrinfeldData()) == {DrinfeldData(): 1}


def test_decomposition_row_cap():
    with pytest.raises(ValueError):
        decomposition_row(DrinfeldData({0: 11}), cap=10)


def test_row_tie_break_invariance():
    for pi in enum_drinfeld(3, 5):
        assert decomposition_row(pi) == decomposition_row(pi, reverse_ties=True)


def test_ic_stalk_k_zero_is_one():
    for w, r in [((1, 3), (1,)), ((1, 2, 1), (1, 1)), ((2, 2), (2,))]:
        s = stratum(w, r)
        assert ic_stalk_poly(StalkQuery(s, (0,) * len(r))) == TPoly.one()


def test_ic_stalk_p1_fiber():
    s = stratum((1, 2, 1), (1, 1))
    assert ic_stalk_poly(StalkQuery(s, (1, 1))) == TPoly([1, 1])


def test_ic_stalk_paper_example_stratum():
    s = stratum((1, 3), (1,))
    p = ic_stalk_poly(StalkQuery(s, (1,)))
    assert p == TPoly.one()
    assert p.eval_one() == multiplicity_closed(Q({0: 1, 1: 3}, {1: 2}))


def test_ic_stalk_rejects_bad_input():
    non_sparse = stratum((1, 1), (0,))  # Omega = {0, 1}
    with pytest.raises(ValueError, match="not sparse"):
        ic_stalk_poly(StalkQuery(non_sparse, (0,)))
    s = stratum((1, 2, 1), (1, 1))
    with pytest.raises(ValueError, match="invalid stalk point"):
        ic_stalk_poly(StalkQuery(s, (2, 0)))
    with pytest.raises(ValueError, match="invalid stalk point"):
        ic_stalk_poly(StalkQuery(s, (1,)))


def test_closed_equals_oracle_small_sweep():
    for pi in enum_drinfeld(3, 5):
        row = decomposition_row(pi)
        for pitilde, mult in row.items():
            closed = multiplicity_closed(MultiplicityQuery(pi, pitilde))
            if closed is not None:
                assert closed == mult, (pi, pitilde)
