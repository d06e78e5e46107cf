import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from cantorframe import (
    Ball,
    Clopen,
    PreconditionError,
    clopen_complement,
    clopen_imp,
    clopen_join,
    clopen_leq,
    clopen_meet,
    clopen_normalize,
)
from cantorframe.balls import ball_children, balls_at_depth
from cantorframe.oracle import ResidueSet, all_subsets, from_residues, to_residues

from conftest import B, C, clopen_of_subset, random_subset

TOP = Clopen.top(2)
BOT = Clopen.bottom(2)


def test_normalize_examples():
    assert clopen_normalize([B(0, 1), B(1, 1)]) == TOP
    assert clopen_normalize([], p=2) == BOT
    assert clopen_normalize([B(0, 2), B(2, 2)]) == C(B(0, 1))
    assert C(B(0, 2), B(2, 2)).leaves == (B(0, 1),)


def test_meet_join_examples():
    assert clopen_meet(C(B(0, 1)), C(B(1, 1))) == BOT
    assert clopen_join(C(B(1, 2)), C(B(1, 1))) == C(B(1, 1))
    x = C(B(3, 3), B(0, 2))
    assert clopen_meet(x, TOP) == x


def test_complement_examples():
    assert clopen_complement(C(B(0, 1))) == C(B(1, 1))
    assert clopen_complement(TOP) == BOT
    assert clopen_complement(C(B(3, 2))).leaves == (B(0, 1), B(1, 2))


def test_imp_examples():
    assert clopen_imp(C(B(0, 1)), C(B(0, 2))) == C(B(0, 2), B(1, 1))
    x = C(B(5, 3), B(1, 2))
    assert clopen_imp(x, x) == TOP
    assert clopen_imp(TOP, x) == x


def test_leq_examples():
    assert clopen_leq(C(B(3, 2)), C(B(1, 1)))
    assert not clopen_leq(TOP, C(B(0, 1)))
    assert clopen_leq(C(B(0, 2), B(1, 2)), C(B(0, 1), B(1, 2)))


def test_prime_mismatch():
    x, y = C(B(0, 1)), C(B(0, 1, 3))
    for op in (clopen_meet, clopen_join, clopen_imp, clopen_leq):
        with pytest.raises(PreconditionError, match="prime mismatch"):
            op(x, y)
    with pytest.raises(PreconditionError, match="prime mismatch"):
        Clopen(2, [B(0, 1, 3)])


def test_leaves_sorted_and_literal():
    x = C(B(7, 3), B(0, 1), B(1, 2))
    assert [b.sort_key for b in x.leaves] == sorted(b.sort_key for b in x.leaves)
    assert str(x) == "{B(0,1),B(1,2),B(7,3)}@2"
    assert str(Clopen.top(3)) == "{B(0,0)}@3"
    assert str(Clopen.bottom(5)) == "{}@5"


def _is_canonical(x: Clopen) -> bool:
    leaves = set(x.leaves)
    for b in x.leaves:
        for d in range(b.depth):
            if b.ancestor(d) in leaves:
                return False
        if b.depth and all(s in leaves for s in ball_children(b.parent())):
            return False
    return True


@pytest.mark.parametrize("p,D", [(2, 3), (3, 2)])
def test_exhaustive_oracle_equivalence(p, D):
    """Every operation agrees with set operations on Z/p^D, all pairs."""
    subsets = list(all_subsets(p, D))
    clopens = [clopen_of_subset(p, D, s.elements()) for s in subsets]
    for s, x in zip(subsets, clopens):
        assert _is_canonical(x)
        assert to_residues(x, D) == s
        assert from_residues(s) == x
        assert to_residues(~x, D) == ~s
    for (s, x), (t, y) in itertools.product(zip(subsets, clopens), repeat=2):
        assert to_residues(x & y, D) == s & t
        assert to_residues(x | y, D) == s | t
        assert to_residues(clopen_imp(x, y), D) == ~s | t
        assert clopen_leq(x, y) == (s <= t)
        assert (x == y) == (s == t)


@pytest.mark.parametrize("p,D", [(2, 6), (3, 4)])
def test_randomized_oracle_equivalence(p, D):
    rng = random.Random(p * 100 + D)
    for _ in range(10_000):
        s, t = random_subset(rng, p, D), random_subset(rng, p, D)
        x, y = from_residues(s), from_residues(t)
        assert clopen_of_subset(p, D, s.elements()) == x
        assert to_residues(x & y, D) == s & t
        assert to_residues(x | y, D) == s | t
        assert to_residues(~x, D) == ~s
        assert to_residues(clopen_imp(x, y), D) == ~s | t
        assert clopen_leq(x, y) == (s <= t)


def _imp_is_largest(x, a, D):
    c = clopen_imp(x, a)
    assert clopen_leq(c & x, a)
    for b in balls_at_depth(D, x.p):
        cb = Clopen.ball(b)
        if clopen_leq(cb & x, a):
            assert clopen_leq(cb, c)


def test_imp_is_largest_exhaustive():
    D = 3
    subsets = list(all_subsets(2, D))
    for s, t in itertools.product(subsets[::7], subsets[::5]):
        _imp_is_largest(from_residues(s), from_residues(t), D)


def test_finite_q3_every_ball_is_join_of_children():
    for p, D in ((2, 5), (3, 3), (5, 2)):
        for d in range(D):
            for b in balls_at_depth(d, p):
                assert Clopen(p, ball_children(b)) == Clopen.ball(b)


def test_contains_ball_matches_leq():
    rng = random.Random(3)
    for _ in range(500):
        x = from_residues(random_subset(rng, 2, 4))
        for d in range(5):
            for b in balls_at_depth(d):
                assert x.contains_ball(b) == clopen_leq(Clopen.ball(b), x)


def test_balls_at_decomposition():
    x = C(B(0, 1), B(3, 3))
    assert x.balls_at(3) == [B(0, 3), B(2, 3), B(3, 3), B(4, 3), B(6, 3)]
    with pytest.raises(PreconditionError):
        x.balls_at(2)


ball_st = st.integers(0, 5).flatmap(
    lambda n: st.builds(Ball, st.integers(0, 2**n - 1), st.just(n), st.just(2))
)
clopen_st = st.lists(ball_st, max_size=8).map(lambda bs: Clopen(2, bs))


@settings(max_examples=300)
@given(clopen_st, clopen_st, clopen_st)
def test_boolean_laws(x, y, z):
    assert ~~x == x
    assert ~(x & y) == ~x | ~y
    assert ~(x | y) == ~x & ~y
    assert x & (y | z) == (x & y) | (x & z)
    assert x | (y & z) == (x | y) & (x | z)
    assert (x & ~x).is_bottom and (x | ~x).is_top
    assert x & y == y & x and x | y == y | x
    assert (x & y) & z == x & (y & z)


@settings(max_examples=300)
@given(st.lists(ball_st, max_size=10))
def test_normalize_idempotent_and_order_free(balls):
    x = Clopen(2, balls)
    assert Clopen(2, x.leaves) == x
    assert Clopen(2, list(reversed(balls))) == x
    assert _is_canonical(x)
    D = max((b.depth for b in balls), default=0)
    expected = set()
    for b in balls:
        expected |= set(range(b.residue, 2**D, 2**b.depth))
    assert to_residues(x, D) == ResidueSet.of(2, D, expected)
