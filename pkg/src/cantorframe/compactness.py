"""Finite subcovers by a König-style tree search, partition refinement and
ultranormal separation."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable

from .balls import Ball, same_prime
from .clopen import Clopen, clopen_complement, clopen_join, clopen_leq, clopen_meet
from .errors import BudgetExhausted, PreconditionError


@dataclass
class CoverStream:
    """A (possibly infinite) sequence of clopens offered as a cover.

    Elements are consumed once per extraction and cached, so any iterable
    (including a generator) is acceptable.
    """

    p: int
    elements: Iterable[Clopen]
    budget: int = 10_000

    def __post_init__(self) -> None:
        if self.budget < 1:
            raise PreconditionError("budget must be at least 1")


def finite_subcover(stream: CoverStream) -> list[tuple[int, Clopen]]:
    """Extract finitely many stream elements whose join is the top element.

    Keeps a frontier of balls not yet below any element read so far, starting
    from the root. Each step reads one more element and discharges the
    frontier balls below it, then splits the frontier ball with the smallest
    ``(depth, residue)`` into its ``p`` children. Children already below an
    earlier element are discharged immediately. The search ends when the
    frontier is empty; the elements that discharged something are returned
    with their stream indices, in index order.

    Raises :class:`BudgetExhausted` when ``stream.budget`` steps pass without
    success, or when a finite stream runs out and some frontier ball can no
    longer be discharged.
    """
    p = stream.p
    read: list[Clopen] = []
    used: dict[int, Clopen] = {}
    max_read_depth = 0

    def discharge(b: Ball) -> bool:
        for idx, c in enumerate(read):
            if c.contains_ball(b):
                used.setdefault(idx, c)
                return True
        return False

    frontier = [(0, 0)]  # (depth, residue) heap
    it = iter(stream.elements)
    exhausted = False
    steps = 0
    while frontier:
        if steps >= stream.budget:
            raise BudgetExhausted()
        steps += 1

        if not exhausted:
            try:
                c = next(it)
            except StopIteration:
                exhausted = True
            else:
                same_prime(p, c.p)
                idx = len(read)
                read.append(c)
                max_read_depth = max(max_read_depth, c.max_depth)
                kept = [k for k in frontier if not c.contains_ball(Ball(k[1], k[0], p))]
                if len(kept) < len(frontier):
                    used[idx] = c
                    heapq.heapify(kept)
                    frontier = kept
        if not frontier:
            break
        # below the finest leaf depth read, an undischarged ball stays so
        if exhausted and any(depth >= max_read_depth for depth, _ in frontier):
            raise BudgetExhausted("no subcover found within budget (stream exhausted)")

        depth, res = heapq.heappop(frontier)
        for child in Ball(res, depth, p).children():
            if not discharge(child):
                heapq.heappush(frontier, child.sort_key)
    return sorted(used.items())


def disjointify(cover: list[Clopen]) -> list[Clopen]:
    """Partition refining ``cover``: ``v_i = u_i and not (u_1 or ... or u_{i-1})``.

    The result depends on the order of ``cover``; zero parts are dropped.
    """
    if not cover:
        raise PreconditionError("empty cover")
    p = same_prime(*(c.p for c in cover))
    seen = Clopen.bottom(p)
    out = []
    for u in cover:
        v = clopen_meet(u, clopen_complement(seen))
        if not v.is_bottom:
            out.append(v)
        seen = clopen_join(seen, u)
    return out


def separate(a: Clopen, b: Clopen) -> Clopen:
    """A complemented ``c`` with ``c <= a`` and ``not c <= b``, given ``a or b = 1``."""
    if not clopen_join(a, b).is_top:
        raise PreconditionError("not a cover")
    c = clopen_complement(b)
    assert clopen_leq(c, a)
    return c
