"""Radius-preserving ball maps avoiding a clopen, the endomorphism they
induce, the retraction onto a closed quotient, and digit interleaving."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .balls import Ball, ball_children, balls_at_depth, digits, from_digits
from .clopen import Clopen, clopen_join
from .errors import PreconditionError


@dataclass(frozen=True)
class BallMap:
    p: int
    depth_bound: int
    table: dict[Ball, Ball] = field(repr=False)
    _preimages: dict[Ball, list[Ball]] = field(init=False, repr=False, compare=False)
    _pairs: dict[int, list[tuple[int, int]]] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        pre: dict[Ball, list[Ball]] = {}
        pairs: dict[int, list[tuple[int, int]]] = {}
        for b, fb in self.table.items():
            if b.depth == self.depth_bound:
                pre.setdefault(fb, []).append(b)
                pairs.setdefault(fb.residue, []).append((b.residue, b.depth))
        object.__setattr__(self, "_preimages", pre)
        object.__setattr__(self, "_pairs", pairs)

    def __call__(self, b: Ball) -> Ball:
        return self.table[b]

    def preimage(self, b: Ball) -> list[Ball]:
        """Depth-bound balls sent to ``b``."""
        return self._preimages.get(b, [])


def next_uncovered_child(b: Ball, x: Clopen) -> Ball:
    if x.is_top:
        raise PreconditionError("x is the top element")
    if x.contains_ball(b):
        raise PreconditionError(f"ball already covered: {b}")
    for child in ball_children(b):
        if not x.contains_ball(child):
            return child
    raise AssertionError("a ball not below x has a child not below x")


def build_f(x: Clopen, K: int) -> BallMap:
    """Tabulate ``f`` on all balls of depth ``<= K``.

    ``f`` fixes the root and every ball not below ``x``; a ball below ``x``
    goes to the first child (smallest residue) of its parent's image that is
    not below ``x``.
    """
    if x.is_top:
        raise PreconditionError("no f exists for the top element")
    if K < x.max_depth:
        raise PreconditionError(f"depth {K} is below the depth {x.max_depth} of x")
    p = x.p
    root = Ball.root(p)
    table = {root: root}
    level = [root]
    for _ in range(K):
        nxt = []
        for parent in level:
            for b in ball_children(parent):
                if x.contains_ball(b):
                    table[b] = next_uncovered_child(table[parent], x)
                else:
                    table[b] = b
                nxt.append(b)
        level = nxt
    return BallMap(p, K, table)


def apply_H(c: Clopen, f: BallMap) -> Clopen:
    """Join of the ``f``-preimages of the depth-bound balls making up ``c``."""
    if c.p != f.p:
        raise PreconditionError("prime mismatch")
    try:
        residues = c.residues_at(f.depth_bound)
    except PreconditionError:
        raise PreconditionError(f"depth overflow: {c} beyond depth {f.depth_bound}") from None
    pairs = f._pairs
    out: list[tuple[int, int]] = []
    for r in residues:
        out.extend(pairs.get(r, ()))
    return Clopen.from_pairs(f.p, out)


@dataclass
class RetractReport:
    x: Clopen
    depth: int
    kernel: Clopen
    checked: int
    exhaustive: bool
    counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def lines(self) -> list[str]:
        mode = "exhaustive" if self.exhaustive else "randomized"
        out = [
            f"kernel\t{self.kernel}",
            f"kernel_equals_x\t{str(self.kernel == self.x).lower()}",
            f"retraction\t{self.checked} cases ({mode})",
        ]
        out.append("result\tok" if self.ok else f"counterexample\t{self.counterexample}")
        return out


def retract_check(x: Clopen, K: int, cases: int = 1000, seed: int = 0,
                  max_exhaustive: int = 12) -> RetractReport:
    """Check ``H(a) or x == a`` for clopens ``a >= x`` of depth ``<= K`` and
    that the balls killed by ``H`` join to ``x``. Stops at the first failure."""
    f = build_f(x, K)
    p = x.p
    level = balls_at_depth(K, p)
    kernel = Clopen(p, [b for b in level if apply_H(Clopen.ball(b), f).is_bottom])
    report = RetractReport(x, K, kernel, 0, True)
    if kernel != x:
        report.counterexample = f"kernel {kernel} differs from x {x}"
        return report

    free = [b for b in level if not x.contains_ball(b)]
    if len(free) <= max_exhaustive:
        choices = itertools.chain.from_iterable(
            itertools.combinations(free, r) for r in range(len(free) + 1)
        )
    else:
        rng = random.Random(seed)
        report.exhaustive = False
        choices = ([b for b in free if rng.random() < 0.5] for _ in range(cases))
    for extra in choices:
        a = clopen_join(x, Clopen(p, extra))
        report.checked += 1
        if clopen_join(apply_H(a, f), x) != a:
            report.counterexample = f"a={a}: H(a) or x = {clopen_join(apply_H(a, f), x)}"
            break
    return report


def interleave(b1: Ball, b2: Ball) -> Ball:
    """Depth-``2n`` ball whose even digits come from ``b1`` and odd from ``b2``."""
    if b1.p != 2 or b2.p != 2:
        raise PreconditionError("interleaving is defined on Z_2")
    if b1.depth != b2.depth:
        raise PreconditionError(f"depth mismatch: {b1.depth} vs {b2.depth}")
    ds = [d for pair in zip(b1.digits(), b2.digits()) for d in pair]
    return Ball(from_digits(ds, 2), 2 * b1.depth, 2)


def deinterleave(b: Ball) -> tuple[Ball, Ball]:
    if b.p != 2:
        raise PreconditionError("interleaving is defined on Z_2")
    if b.depth % 2:
        raise PreconditionError(f"odd depth {b.depth}")
    ds = digits(b.residue, b.depth, 2)
    n = b.depth // 2
    return Ball(from_digits(ds[0::2], 2), n, 2), Ball(from_digits(ds[1::2], 2), n, 2)
