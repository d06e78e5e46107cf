"""Basic balls of Z_p, dyadic rationals, eventually-constant binary digit
strings, and the digit-reading map from Z_2 onto [0, 1].

A ball ``B(a, n)`` is the residue class ``{x in Z_p : x = a mod p^n}``.
Depth 0 is the whole space.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Iterable, Sequence

from .errors import PreconditionError

MAX_DEPTH = 64


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise PreconditionError(f"{p!r} is not a prime")
    return p


def digits(a: int, n: int, p: int) -> list[int]:
    """Base-``p`` digits of ``a mod p^n``, least significant first."""
    out = []
    for _ in range(n):
        a, d = divmod(a, p)
        out.append(d)
    return out


def from_digits(ds: Iterable[int], p: int) -> int:
    a = 0
    scale = 1
    for d in ds:
        a += d * scale
        scale *= p
    return a


@dataclass(frozen=True)
class Ball:
    residue: int
    depth: int
    p: int = 2

    def __post_init__(self) -> None:
        check_prime(self.p)
        if self.depth < 0:
            raise PreconditionError(f"negative depth {self.depth}")
        if not 0 <= self.residue < self.p**self.depth:
            raise PreconditionError(
                f"residue {self.residue} not reduced mod {self.p}^{self.depth}"
            )

    @classmethod
    def _trusted(cls, a: int, n: int, p: int) -> Ball:
        # internal: caller guarantees a prime p and a reduced residue
        obj = object.__new__(cls)
        object.__setattr__(obj, "residue", a)
        object.__setattr__(obj, "depth", n)
        object.__setattr__(obj, "p", p)
        return obj

    @classmethod
    def of(cls, a: int, n: int, p: int = 2) -> Ball:
        """Ball of depth ``n`` around any integer ``a`` (reduced here)."""
        return cls(a % p**n, n, p)

    @classmethod
    def root(cls, p: int = 2) -> Ball:
        return cls(0, 0, p)

    @property
    def sort_key(self) -> tuple[int, int]:
        return (self.depth, self.residue)

    @property
    def modulus(self) -> int:
        return self.p**self.depth

    def digits(self) -> list[int]:
        return digits(self.residue, self.depth, self.p)

    def ancestor(self, depth: int) -> Ball:
        if not 0 <= depth <= self.depth:
            raise PreconditionError(f"no ancestor of {self} at depth {depth}")
        return Ball(self.residue % self.p**depth, depth, self.p)

    def parent(self) -> Ball:
        return self.ancestor(self.depth - 1)

    def children(self) -> list[Ball]:
        return ball_children(self)

    def __str__(self) -> str:
        return f"B({self.residue},{self.depth})@{self.p}"

    def inner_literal(self) -> str:
        return f"B({self.residue},{self.depth})"


class Relation(enum.Enum):
    EQUAL = "Equal"
    BELOW = "Below"
    ABOVE = "Above"
    DISJOINT = "Disjoint"

    def __str__(self) -> str:
        return self.value


def same_prime(*ps: int) -> int:
    first = ps[0]
    for q in ps:
        if q != first:
            raise PreconditionError("prime mismatch")
    return first


def ball_compare(b1: Ball, b2: Ball) -> Relation:
    same_prime(b1.p, b2.p)
    shallow = min(b1.depth, b2.depth)
    m = b1.p**shallow
    if b1.residue % m != b2.residue % m:
        return Relation.DISJOINT
    if b1.depth == b2.depth:
        return Relation.EQUAL
    return Relation.BELOW if b1.depth > b2.depth else Relation.ABOVE


def ball_meet(b1: Ball, b2: Ball) -> Ball | None:
    """Intersection of two balls; ``None`` stands for the empty element."""
    rel = ball_compare(b1, b2)
    if rel is Relation.DISJOINT:
        return None
    return b1 if b1.depth >= b2.depth else b2


def ball_children(b: Ball) -> list[Ball]:
    step = b.p**b.depth
    return [Ball(b.residue + x * step, b.depth + 1, b.p) for x in range(b.p)]


def balls_at_depth(n: int, p: int = 2) -> list[Ball]:
    return [Ball(a, n, p) for a in range(p**n)]


@total_ordering
@dataclass(frozen=True)
class Dyadic:
    """Exact ``numerator / 2**exponent`` with odd numerator unless exponent is 0."""

    numerator: int
    exponent: int = 0

    def __post_init__(self) -> None:
        if self.exponent < 0:
            raise PreconditionError("negative dyadic exponent")
        if self.exponent > 0 and self.numerator % 2 == 0:
            raise PreconditionError(
                f"{self.numerator}/2^{self.exponent} is not normalized"
            )

    @classmethod
    def of(cls, value: Fraction | int) -> Dyadic:
        q = Fraction(value)
        den = q.denominator
        if den & (den - 1):
            raise PreconditionError(f"{q} is not a dyadic rational")
        return cls(q.numerator, den.bit_length() - 1)

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def __lt__(self, other: Dyadic) -> bool:
        if not isinstance(other, Dyadic):
            return NotImplemented
        return self.value < other.value

    def __add__(self, other: Dyadic) -> Dyadic:
        return Dyadic.of(self.value + other.value)

    def __sub__(self, other: Dyadic) -> Dyadic:
        return Dyadic.of(self.value - other.value)

    def __str__(self) -> str:
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/2^{self.exponent}"


def dyadic_mid(q1: Dyadic, q2: Dyadic) -> Dyadic:
    return Dyadic.of((q1.value + q2.value) / 2)


@dataclass(frozen=True)
class BinaryTail:
    """The 2-adic integer ``b_0 b_1 ... b_{m-1} t t t ...`` (digit 0 first).

    The prefix is trimmed so it never ends in the tail bit, which makes
    structural equality agree with equality of digit sequences.
    """

    prefix: tuple[int, ...]
    tail: int = 0

    def __post_init__(self) -> None:
        if self.tail not in (0, 1) or any(b not in (0, 1) for b in self.prefix):
            raise PreconditionError("binary digits must be 0 or 1")
        prefix = tuple(self.prefix)
        while prefix and prefix[-1] == self.tail:
            prefix = prefix[:-1]
        object.__setattr__(self, "prefix", prefix)

    def digit(self, i: int) -> int:
        return self.prefix[i] if i < len(self.prefix) else self.tail

    def __str__(self) -> str:
        return "bits:" + "".join(map(str, self.prefix)) + f";{self.tail}"


def phi_eval(t: BinaryTail) -> Dyadic:
    """Read the 2-adic digits as a binary expansion of a point of [0, 1]."""
    m = len(t.prefix)
    num = 0
    for b in t.prefix:
        num = 2 * num + b
    # a constant tail of ones past position m contributes exactly 1/2^m
    return Dyadic.of(Fraction(num + t.tail, 1 << m))


def phi_of_residue(a: int, n: int) -> Fraction:
    """Value of the map on the finite expansion ``a`` of length ``n`` (zero tail)."""
    return Fraction(reverse_bits(a, n), 1 << n)


def reverse_bits(a: int, n: int) -> int:
    r = 0
    for _ in range(n):
        r = (r << 1) | (a & 1)
        a >>= 1
    return r


def check_depth(n: int, max_depth: int = MAX_DEPTH) -> int:
    if n > max_depth:
        raise PreconditionError(f"depth {n} exceeds the limit {max_depth}")
    return n


def prefix_residue(prefix: Sequence[int], depth: int, p: int) -> int:
    """Residue mod ``p^depth`` of a digit prefix padded with zeros."""
    ds = list(prefix[:depth]) + [0] * max(0, depth - len(prefix))
    if any(not 0 <= d < p for d in ds):
        raise PreconditionError(f"digits must lie in 0..{p - 1}")
    return from_digits(ds, p)
