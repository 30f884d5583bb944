import pytest

from bchdim import classify as C
from bchdim.errors import BadIndex, BandMismatch, NotMember, OddM, WrongParity


def test_S_examples():
    assert not C.in_S_brute(12, 3, 4)
    assert not C.in_S_brute(1, 3, 4)
    # 32 = (1,0,1,2) in base 3; its orbit mod 242 contains a smaller element
    assert C.in_S_brute(32, 3, 5) == (min(32 * 3**e % 242 for e in range(5)) < 32)


def test_H_examples():
    assert C.in_H_brute(10, 3, 4)
    assert not C.in_H_brute(2, 3, 4)
    assert not C.in_H_brute(1, 3, 4)
    with pytest.raises(OddM):
        C.in_H_brute(10, 3, 5)


def test_palindrome_examples():
    assert C.in_H_palindrome(10, 3, 4, 0)
    assert not C.in_H_palindrome(12, 3, 4, 0)
    assert not C.in_H_palindrome(9, 3, 4, 0)
    with pytest.raises(BandMismatch):
        C.in_H_palindrome(30, 3, 4, 0)


def test_band_class_examples():
    assert C.in_A(28, 3, 5, 1, 1)
    assert not C.in_B(12, 3, 4, 0, 0)
    # a_h = 0 for 28, so index 0 is not the first nonzero high digit
    assert not C.in_A(28, 3, 5, 1, 0)
    with pytest.raises(WrongParity):
        C.in_A(12, 3, 4, 0, 0)
    with pytest.raises(WrongParity):
        C.in_B(28, 3, 5, 1, 1)
    with pytest.raises(BadIndex):
        C.in_A(28, 3, 5, 1, 2)
    with pytest.raises(BadIndex):
        C.in_A(28, 3, 5, 0, 0)
    with pytest.raises(BandMismatch):
        C.in_A(20, 3, 5, 1, 1)


def test_decompose_example():
    e = C.decompose(28, 3, 5, 1, 1)
    assert (e.t, e.alpha) == (1, 1)
    assert e.t * 3 ** (2 + 1) + e.alpha == 28
    assert e.lambda_divides(2) == (28 % 2 == 0)
    assert C.bound_holds(e, 3, 5)
    with pytest.raises(NotMember):
        C.decompose(30, 3, 5, 1, 1)


def test_k_range():
    assert list(C.k_range(4)) == [0]
    assert list(C.k_range(5)) == [1]
    assert list(C.k_range(8)) == [0, 1]
    with pytest.raises(Exception):
        C.k_range(3)


STRUCT = [(q, m) for q in (2, 3, 4) for m in (4, 5, 6, 7)]


@pytest.mark.parametrize("q,m", STRUCT)
def test_classes_partition_S_or_SH(q, m):
    for k in C.k_range(m):
        classes = C.classify_band(q, m, k)
        members = [a for ms in classes.values() for a in ms]
        assert len(members) == len(set(members)), "classes overlap"
        want = {
            a for a in C.band(q, m, k)
            if C.in_S_brute(a, q, m) or (m % 2 == 0 and C.in_H_brute(a, q, m))
        }
        assert set(members) == want


@pytest.mark.parametrize("q,m", [(q, m) for q in (2, 3, 4, 5) for m in (4, 6)])
def test_palindrome_lemma(q, m):
    for k in C.k_range(m):
        for a in C.band(q, m, k):
            assert C.in_H_palindrome(a, q, m, k) == C.in_H_brute(a, q, m)


@pytest.mark.parametrize("q,m", STRUCT)
def test_digit_order_matches_arithmetic_bound(q, m):
    h = m // 2
    for k in C.k_range(m):
        for a in C.band(q, m, k):
            d = [(a // q**pos) % q for pos in range(m)]
            i = next((j for j in C.i_range(m, k) if d[h + j]), None)
            if i is None:
                continue
            cond = C.band_conditions(a, q, m, k, i)
            if cond.index_ok and cond.zeros_ok:
                e = C.split(a, q, m, k, i)
                assert e.t % q != 0
                assert cond.order_ok == C.bound_holds(e, q, m)
