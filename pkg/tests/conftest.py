import random
from fractions import Fraction

import pytest

from cantorframe import Ball, Clopen
from cantorframe.oracle import ResidueSet, to_residues


def B(a, n, p=2):
    return Ball(a, n, p)


def C(*balls, p=None):
    if p is None:
        p = balls[0].p if balls else 2
    return Clopen(p, balls)


def phi_finite(a: int, n: int) -> Fraction:
    """Digit sum of the zero-tail expansion, computed term by term."""
    return sum((Fraction((a >> i) & 1, 2 ** (i + 1)) for i in range(n)), Fraction(0))


def residue_subset(x: Clopen, D: int) -> set[int]:
    return set(to_residues(x, D).elements())


def clopen_of_subset(p: int, D: int, members) -> Clopen:
    """Build a clopen from residues through the trie normalizer (not the oracle)."""
    return Clopen(p, [Ball(r, D, p) for r in members])


def random_subset(rng: random.Random, p: int, D: int) -> ResidueSet:
    return ResidueSet(p, D, rng.getrandbits(p**D))


@pytest.fixture
def rng():
    return random.Random(20261015)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[num])
