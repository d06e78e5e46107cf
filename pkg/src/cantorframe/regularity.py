"""Finite-depth witnesses for regularity, the metric uniformity and
perfectness (no isolated points) of the Cantor frame."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .balls import Ball, ball_children, check_prime, prefix_residue
from .clopen import Clopen, clopen_complement, clopen_join, join_all
from .errors import PreconditionError


@dataclass(frozen=True)
class UniformCoverIndex:
    """The cover ``U_n`` of all balls of depth ``>= n``, truncated at depth ``cutoff``."""

    n: int
    cutoff: int

    def __post_init__(self) -> None:
        if self.n < 0 or self.cutoff < self.n:
            raise PreconditionError(f"need 0 <= n <= cutoff, got n={self.n}, cutoff={self.cutoff}")


def well_inside(x: Clopen, y: Clopen) -> bool:
    return clopen_join(clopen_complement(x), y).is_top


def star(b: Ball, u: UniformCoverIndex) -> Clopen:
    """Join of every ball of ``U_n`` (depth in ``[n, cutoff]``) that meets ``b``.

    A ball meeting ``b`` is either an ancestor of ``b`` or lies inside ``b``,
    so only the ancestors at depths ``n..depth(b)`` and ``b`` itself matter.
    """
    if b.depth < u.n:
        raise PreconditionError(f"{b} is not a member of U_{u.n}")
    if u.cutoff < b.depth:
        raise PreconditionError(f"cutoff {u.cutoff} below depth of {b}")
    meeting = [Clopen.ball(b.ancestor(d)) for d in range(u.n, b.depth + 1)]
    return join_all(meeting, b.p)


def split_atomless(b: Ball) -> tuple[Ball, Ball]:
    first, second = ball_children(b)[:2]
    return first, second


def punctured_open(point_prefix: Sequence[int], K: int, p: int = 2) -> Clopen:
    """Depth-``K`` truncation of the dense open set missing one point.

    The point is given by its leading digits (padded with zeros, cut at
    ``K``); the result is the complement of its depth-``K`` ball.
    """
    check_prime(p)
    if K < 0:
        raise PreconditionError("negative depth")
    a = prefix_residue(point_prefix, K, p)
    return clopen_complement(Clopen.ball(Ball(a, K, p)))
