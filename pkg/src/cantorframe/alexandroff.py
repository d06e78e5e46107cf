"""The digit-reading surjection Z_2 -> [0, 1] and the frame map it induces
from the dyadic interval frame into clopens of Z_2, computed up to an
explicit truncation depth."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .balls import Ball, BinaryTail, Dyadic, dyadic_mid, phi_eval, reverse_bits
from .clopen import Clopen, clopen_join, clopen_meet
from .errors import PreconditionError
from .intervals import IntervalSet


class Direction(enum.Enum):
    BELOW = "below"  # the ray (-inf, q)
    ABOVE = "above"  # the ray (q, +inf)


@dataclass(frozen=True)
class BallImage:
    lo: Dyadic
    hi: Dyadic

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}]"


def _require_p2(b: Ball) -> None:
    if b.p != 2:
        raise PreconditionError(f"expected a ball of Z_2, got {b}")


def ball_image(b: Ball) -> BallImage:
    """Closed interval swept by the ball: its zero tail and its one tail."""
    _require_p2(b)
    ds = tuple(b.digits())
    return BallImage(phi_eval(BinaryTail(ds, 0)), phi_eval(BinaryTail(ds, 1)))


def two_preimages(q: Dyadic) -> tuple[BinaryTail, BinaryTail]:
    """The two 2-adic integers mapped to ``q = u/2^g``, ``0 < q < 1``, u odd.

    One ends ``...1 000...`` at digit ``g-1``, the other ``...0 111...``.
    """
    if not 0 < q.value < 1:
        raise PreconditionError(f"{q} is not strictly between 0 and 1")
    g = q.exponent
    a = tuple((q.numerator >> (g - 1 - i)) & 1 for i in range(g))
    plus = BinaryTail(a, 0)
    minus = BinaryTail(a[:-1] + (0,), 1)
    return plus, minus


def _blocks(lo: int, hi: int, d: int):
    """Aligned dyadic blocks covering ``[lo, hi)`` inside ``[0, 2^d)``, as
    ``(prefix, prefix_length)`` pairs read most significant bit first."""
    lo, hi = max(lo, 0), min(hi, 1 << d)
    while lo < hi:
        size = lo & -lo if lo else 1 << d
        while size > hi - lo:
            size >>= 1
        j = d - (size.bit_length() - 1)
        yield lo >> (d - j), j
        lo += size


def _ray_at_depth(q: Dyadic, direction: Direction, k: int) -> list[Ball]:
    # with r = reverse_bits(a, d), phi(a) = r / 2^d; the strict inequality
    # phi(a) < q - 2^-d reads r < u*2^k - 1 (dually r > u*2^k + 1)
    d = q.exponent + k
    centre = q.numerator << k
    if direction is Direction.BELOW:
        lo, hi = 0, centre - 1
    else:
        lo, hi = centre + 2, 1 << d
    # an MSB-first prefix of r of length j is the depth-j ball with those digits
    return [Ball(reverse_bits(v, j), j, 2) for v, j in _blocks(lo, hi, d)]


def tphi_ray(q: Dyadic, direction: Direction, K: int) -> Clopen:
    """Join over ``k = 0..K`` of the depth ``g+k`` balls whose zero-tail value
    lies more than ``2^-(g+k)`` inside the ray at ``q = u/2^g``."""
    if K < 0:
        raise PreconditionError("negative truncation depth")
    balls: list[Ball] = []
    for k in range(K + 1):
        balls.extend(_ray_at_depth(q, direction, k))
    return Clopen(2, balls)


def tphi(x: IntervalSet, K: int) -> Clopen:
    """Depth-``K`` approximant of the image of an interval set.

    Each component ``(lo, hi)`` maps to the meet of its two rays; an infinite
    end contributes the top element.
    """
    out = Clopen.bottom(2)
    for comp in x.components:
        below = Clopen.top(2) if comp.hi is None else tphi_ray(comp.hi, Direction.BELOW, K)
        above = Clopen.top(2) if comp.lo is None else tphi_ray(comp.lo, Direction.ABOVE, K)
        out = clopen_join(out, clopen_meet(below, above))
    return out


def density_witness(lo: Dyadic, hi: Dyadic) -> tuple[Ball, int]:
    """A nonzero ball below the image of ``(lo, hi)`` and a depth reaching it.

    Both ends are brought to the common denominator ``2^m``; the ball is the
    depth ``m+2`` neighbourhood of the finite expansion of the midpoint.
    """
    if not (0 <= lo.value < hi.value <= 1):
        raise PreconditionError(f"need 0 <= lo < hi <= 1, got ({lo},{hi})")
    m = max(lo.exponent, hi.exponent)
    w = dyadic_mid(lo, hi)
    assert w.exponent <= m + 1
    w_bar = reverse_bits(w.numerator, w.exponent)
    depth = m + 2
    return Ball(w_bar % (1 << depth), depth, 2), depth
