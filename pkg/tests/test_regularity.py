import itertools
import random

import pytest

from cantorframe import (
    Clopen,
    PreconditionError,
    UniformCoverIndex,
    clopen_leq,
    punctured_open,
    split_atomless,
    star,
    well_inside,
)
from cantorframe.balls import ball_meet, balls_at_depth
from cantorframe.laws import random_clopen
from cantorframe.oracle import all_subsets, from_residues

from conftest import B, C


def test_well_inside_examples():
    assert well_inside(C(B(3, 2)), C(B(1, 1)))
    x = C(B(5, 3), B(0, 1))
    assert well_inside(x, x)
    assert not well_inside(C(B(0, 1)), C(B(0, 2)))


def test_well_inside_is_leq_exhaustive_p2_depth2():
    xs = [from_residues(s) for s in all_subsets(2, 2)]
    for x, y in itertools.product(xs, repeat=2):
        assert well_inside(x, y) == clopen_leq(x, y)


@pytest.mark.parametrize("p", [2, 3])
def test_well_inside_is_leq_randomized(p):
    rng = random.Random(p)
    for _ in range(2000):
        x, y = random_clopen(rng, p, 4), random_clopen(rng, p, 4)
        if rng.random() < 0.3:
            y = y | x
        assert well_inside(x, y) == clopen_leq(x, y)


def test_star_examples():
    assert star(B(1, 2), UniformCoverIndex(2, 4)) == C(B(1, 2))
    assert star(B(0, 0), UniformCoverIndex(0, 2)).is_top
    assert star(B(2, 2), UniformCoverIndex(1, 3)) == C(B(0, 1))


def test_star_preconditions():
    with pytest.raises(PreconditionError):
        UniformCoverIndex(3, 2)
    with pytest.raises(PreconditionError):
        star(B(0, 1), UniformCoverIndex(2, 4))
    with pytest.raises(PreconditionError):
        star(B(0, 3), UniformCoverIndex(1, 2))


@pytest.mark.parametrize("p", [2, 3])
def test_star_against_brute_force(p):
    """Join of every ball of depth in [n, K] meeting b, enumerated directly."""
    for n in range(3):
        for K in range(n, n + 3):
            for d in range(n, K + 1):
                for b in balls_at_depth(d, p):
                    meeting = [c for e in range(n, K + 1) for c in balls_at_depth(e, p)
                               if ball_meet(b, c) is not None]
                    assert star(b, UniformCoverIndex(n, K)) == Clopen(p, meeting)


def test_star_refines_into_shallower_cover():
    # the star of b in U_{n+1} is one ball of depth n+1, hence a member of U_n
    for n in range(4):
        for d in range(n + 1, n + 5):
            for b in balls_at_depth(d):
                s = star(b, UniformCoverIndex(n + 1, d))
                assert s.leaves == (b.ancestor(n + 1),)


def test_split_examples():
    assert split_atomless(B(0, 1)) == (B(0, 2), B(2, 2))
    assert split_atomless(B(0, 0, 3)) == (B(0, 1, 3), B(1, 1, 3))
    assert split_atomless(B(3, 2)) == (B(3, 3), B(7, 3))


@pytest.mark.parametrize("p,D", [(2, 6), (3, 5)])
def test_no_atoms(p, D):
    for d in range(D + 1):
        for b in balls_at_depth(d, p):
            c1, c2 = split_atomless(b)
            assert c1 != c2 and ball_meet(c1, c2) is None
            assert ball_meet(c1, b) == c1 and ball_meet(c2, b) == c2


def test_punctured_examples():
    assert punctured_open([0], 2) == C(B(1, 1), B(2, 2))
    assert punctured_open([1], 1) == C(B(0, 1))
    assert punctured_open([0], 1, p=3) == C(B(1, 1, 3), B(2, 1, 3))


def test_punctured_density_exhaustive():
    for K in range(1, 6):
        for a in range(2**K):
            prefix = B(a, K).digits()
            x = punctured_open(prefix, K)
            for m in range(K):
                assert not clopen_leq(Clopen.ball(B(a % 2**m, m)), x)
                for b in balls_at_depth(m):
                    assert not (Clopen.ball(b) & x).is_bottom
