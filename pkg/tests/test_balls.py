import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cantorframe import (
    Ball,
    BinaryTail,
    Dyadic,
    PreconditionError,
    Relation,
    ball_children,
    ball_compare,
    ball_meet,
    dyadic_mid,
    phi_eval,
)
from cantorframe.balls import balls_at_depth
from cantorframe.oracle import ball_residues

from conftest import B


def test_compare_examples():
    assert ball_compare(B(3, 2), B(1, 1)) is Relation.BELOW
    assert ball_compare(B(0, 1), B(1, 1)) is Relation.DISJOINT
    assert ball_compare(B(5, 3, 3), B(5, 3, 3)) is Relation.EQUAL
    assert ball_compare(B(1, 1), B(3, 2)) is Relation.ABOVE


def test_meet_examples():
    assert ball_meet(B(1, 1), B(3, 2)) == B(3, 2)
    assert ball_meet(B(0, 1), B(1, 1)) is None
    b = B(7, 4)
    assert ball_meet(b, b) == b


def test_children_examples():
    assert ball_children(B(0, 0)) == [B(0, 1), B(1, 1)]
    assert ball_children(B(1, 1)) == [B(1, 2), B(3, 2)]
    for p in (2, 3, 5):
        assert len(ball_children(Ball.root(p))) == p


def test_prime_mismatch():
    with pytest.raises(PreconditionError, match="prime mismatch"):
        ball_compare(B(0, 1, 2), B(0, 1, 3))
    with pytest.raises(PreconditionError, match="prime mismatch"):
        ball_meet(B(0, 1, 2), B(0, 1, 3))


@pytest.mark.parametrize("bad", [(4, 2, 2), (1, 0, 2), (0, 1, 4), (-1, 1, 2), (0, -1, 2)])
def test_ball_validation(bad):
    with pytest.raises(PreconditionError):
        Ball(*bad)


def test_ball_of_reduces():
    assert Ball.of(13, 2, 3) == Ball(4, 2, 3)
    assert Ball.of(-1, 3) == Ball(7, 3)


@pytest.mark.parametrize("p,D", [(2, 5), (3, 4), (5, 2)])
def test_compare_and_meet_against_residue_oracle(p, D):
    balls = [b for d in range(D + 1) for b in balls_at_depth(d, p)]
    for b1, b2 in itertools.product(balls, repeat=2):
        s1, s2 = ball_residues(b1, D), ball_residues(b2, D)
        rel = ball_compare(b1, b2)
        if s1 == s2:
            assert rel is Relation.EQUAL
        elif s1 <= s2:
            assert rel is Relation.BELOW
        elif s2 <= s1:
            assert rel is Relation.ABOVE
        else:
            assert rel is Relation.DISJOINT and (s1 & s2).members == 0
        # antisymmetry
        flipped = {Relation.BELOW: Relation.ABOVE, Relation.ABOVE: Relation.BELOW}
        assert ball_compare(b2, b1) is flipped.get(rel, rel)
        meet = ball_meet(b1, b2)
        assert (meet is None) == (rel is Relation.DISJOINT)
        if meet is not None:
            assert ball_residues(meet, D) == s1 & s2


@pytest.mark.parametrize("p,D", [(2, 6), (3, 4)])
def test_children_partition_parent(p, D):
    for d in range(D):
        for b in balls_at_depth(d, p):
            kids = ball_children(b)
            assert [k.residue for k in kids] == sorted(k.residue for k in kids)
            for k in kids:
                assert ball_compare(k, b) is Relation.BELOW
            for k1, k2 in itertools.combinations(kids, 2):
                assert ball_meet(k1, k2) is None
            union = set()
            for k in kids:
                union |= set(ball_residues(k, d + 1).elements())
            assert union == set(ball_residues(b, d + 1).elements())


def test_phi_eval_examples():
    assert phi_eval(BinaryTail((), 1)).value == 1
    assert phi_eval(BinaryTail((1,), 0)) == Dyadic(1, 1)
    assert phi_eval(BinaryTail((0,), 1)) == Dyadic(1, 1)


def test_dyadic_mid_examples():
    half = Dyadic(1, 1)
    assert dyadic_mid(half, half) == half
    assert dyadic_mid(Dyadic(1, 2), half) == Dyadic(3, 3)
    assert dyadic_mid(Dyadic(0), Dyadic(1)) == half


def test_dyadic_normalization():
    with pytest.raises(PreconditionError):
        Dyadic(2, 1)
    with pytest.raises(PreconditionError):
        Dyadic.of(Fraction(1, 3))
    assert Dyadic.of(Fraction(6, 8)) == Dyadic(3, 2)
    assert Dyadic.of(4) == Dyadic(4, 0)
    assert str(Dyadic(-3, 2)) == "-3/2^2"


def test_binary_tail_trims():
    assert BinaryTail((1, 0, 0), 0) == BinaryTail((1,), 0)
    assert BinaryTail((1, 1), 1) == BinaryTail((), 1)
    assert str(BinaryTail((1, 0), 1)) == "bits:10;1"


def _tails(max_prefix):
    seen = set()
    for m in range(max_prefix + 1):
        for bits in itertools.product((0, 1), repeat=m):
            for t in (0, 1):
                seen.add(BinaryTail(bits, t))
    return sorted(seen, key=lambda x: (len(x.prefix), x.prefix, x.tail))


def _lex_key(t: BinaryTail, n: int):
    # most significant binary place is digit 0
    return tuple(t.digit(i) for i in range(n))


def test_phi_geometric_tail_by_partial_sums():
    # the tail of ones contributes the limit of the partial sums 1/2^(m+1) + ...
    for t in _tails(5):
        m = len(t.prefix)
        partial = sum(Fraction(t.digit(i), 2 ** (i + 1)) for i in range(m + 60))
        assert abs(phi_eval(t).value - partial) <= Fraction(1, 2 ** (m + 60))


def test_phi_monotone_and_collisions():
    tails = _tails(8)
    n = 10
    for x, y in itertools.combinations(tails, 2):
        kx, ky = _lex_key(x, n), _lex_key(y, n)
        vx, vy = phi_eval(x).value, phi_eval(y).value
        if kx < ky:
            assert vx <= vy
        elif ky < kx:
            assert vy <= vx
        if vx == vy:
            # first difference at g: one side 1 then all 0, other 0 then all 1
            ones, zeros = (x, y) if kx > ky else (y, x)
            g = next(i for i in range(n) if ones.digit(i) != zeros.digit(i))
            assert ones.digit(g) == 1 and ones.tail == 0 and len(ones.prefix) == g + 1
            assert zeros.digit(g) == 0 and zeros.tail == 1 and len(zeros.prefix) == g + 1


@given(st.lists(st.integers(0, 1), max_size=12), st.integers(0, 1))
def test_phi_is_digit_sum(bits, t):
    tail = BinaryTail(tuple(bits), t)
    expected = sum((Fraction(b, 2 ** (i + 1)) for i, b in enumerate(bits)), Fraction(0))
    expected += Fraction(t, 2 ** len(bits))
    assert phi_eval(tail).value == expected
