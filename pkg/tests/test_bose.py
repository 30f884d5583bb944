import pytest
from hypothesis import given
from hypothesis import strategies as st

from bchdim import bose as B
from bchdim import dimension as D
from bchdim import reference as R
from bchdim.cyclotomic import is_coset_leader
from bchdim.errors import NotAnInteger, QDividesDelta, UnsupportedRange
from bchdim.params import BchParams
from bchdim.sweep import grid

SMALL_GRID = grid(max_modulus=2**12)


@pytest.mark.parametrize(
    "q,m,lam,delta,want",
    [(3, 4, 2, 2, 2), (3, 4, 2, 3, 4), (3, 4, 2, 5, 5), (3, 4, 2, 6, 7), (3, 4, 2, 8, 8),
     (3, 5, 2, 6, 7), (3, 5, 2, 9, 10), (3, 5, 2, 14, 16), (4, 4, 3, 4, 5)],
)
def test_bose_examples(q, m, lam, delta, want):
    assert B.bose_distance(BchParams(q, m, lam), delta) == want


def test_profile_examples():
    pr = B.bose_profile(BchParams(3, 5, 2), 14)
    assert (pr.lam_d, pr.j_delta, pr.digits.digits, pr.r_delta, pr.delta_hat) == (28, 1, (1, 0, 0, 1), 1, 30)
    pr = B.bose_profile(BchParams(3, 4, 2), 7)
    assert (pr.lam_d, pr.j_delta, pr.digits.digits, pr.r_delta, pr.delta_hat) == (14, 0, (1, 1, 2), 0, 10)
    pr = B.bose_profile(BchParams(3, 5, 1), 28)
    assert (pr.digits.digits, pr.r_delta, pr.delta_hat) == ((1, 0, 0, 1), 1, 30)
    with pytest.raises(QDividesDelta):
        B.bose_profile(BchParams(3, 4, 2), 6)
    with pytest.raises(UnsupportedRange):
        B.bose_profile(BchParams(3, 5, 1), 10)


@pytest.mark.parametrize("pt", grid(max_modulus=2**16), ids=str)
def test_profile_invariants(pt):
    # lam | q-1 forces q^x = 1 mod lam, so lam*delta always has a second nonzero digit
    p = BchParams(*pt)
    for delta in range(p.scaled(p.m - p.h) + 1, p.bose_delta_max + 1):
        if delta % p.q == 0:
            continue
        pr = B.bose_profile(p, delta)
        j, r = pr.j_delta, pr.r_delta
        assert p.q ** (p.h + j) <= pr.lam_d < p.q ** (p.h + j + 1)
        assert p.m - 2 * p.h - j <= r <= j
        assert pr.digits.digit(p.h + r) > 0
        assert all(pr.digits.digit(p.h + i) == 0 for i in range(p.m - 2 * p.h - j, r))


def test_range_errors():
    p = BchParams(3, 4, 2)
    with pytest.raises(UnsupportedRange):
        B.bose_distance(p, 14)
    with pytest.raises(UnsupportedRange):
        B.bose_distance(p, 1)


@pytest.mark.parametrize("pt", SMALL_GRID, ids=str)
def test_bose_matches_oracle_and_leader_property(pt):
    p = BchParams(*pt)
    for delta in range(2, p.bose_delta_max + 1):
        d_b = B.bose_distance(p, delta)
        assert d_b == R.bose_oracle(p, delta)
        assert d_b >= delta
        assert is_coset_leader(d_b, p.n, p.q)
        assert not any(is_coset_leader(a, p.n, p.q) for a in range(delta, d_b))
        if delta % p.q == 0:
            assert d_b == B.bose_distance(p, delta + 1)


@pytest.mark.parametrize("pt", grid(), ids=str)
def test_dispatch_thresholds_cover_range(pt):
    # the small-delta and large-delta statements meet with no gap and no overlap
    p = BchParams(*pt)
    small_top = p.scaled(p.m - p.h)
    large_bottom = p.scaled(p.m - p.h) + 1
    assert large_bottom == small_top + 1
    assert p.lam * large_bottom >= p.q ** (p.m - p.h)


def test_special_ab_examples():
    p = BchParams(3, 5, 1)
    # odd m, b > a q^(2k-1): delta itself
    assert B.bose_special_ab(p, 1, 1, 4) == (27 + 4)
    p = BchParams(5, 4, 2)
    delta = D.special_delta(p, 0, 4, 2)
    assert delta == 51
    assert B.bose_special_ab(p, 0, 4, 2) == B.bose_distance(p, delta) == R.bose_oracle(p, delta)
    with pytest.raises(UnsupportedRange):
        B.bose_special_ab(BchParams(3, 4, 1), 1, 1, 1)
    with pytest.raises(NotAnInteger):
        B.bose_special_ab(BchParams(3, 5, 2), 1, 1, 2)


def test_special_ab_even_k1_no_second_step():
    # q=2, m=8: lam*delta = 2^5 + 1; the next candidate 37 is not a multiple of 2
    p = BchParams(2, 8, 1)
    assert B.bose_special_ab(p, 1, 1, 1) == B.bose_distance(p, 33) == R.bose_oracle(p, 33) == 37


@given(st.sampled_from(grid(max_modulus=2**16)), st.data())
def test_bose_oracle_property(pt, data):
    p = BchParams(*pt)
    delta = data.draw(st.integers(2, p.bose_delta_max))
    assert B.bose_distance(p, delta) == R.bose_oracle(p, delta)
