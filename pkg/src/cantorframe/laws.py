"""Property suites run by ``cantorframe laws run``.

Every suite takes a :class:`LawParams` and a seeded ``random.Random`` and
returns the number of cases it checked, raising :class:`LawViolation` with
a literal counterexample on the first failure. Each suite seeds its own
generator from ``(seed, suite name)`` so reports are reproducible and do
not depend on which suites are selected.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import oracle
from .alexandroff import Direction, ball_image, density_witness, tphi, tphi_ray, two_preimages
from .balls import (
    Ball,
    BinaryTail,
    Dyadic,
    Relation,
    ball_children,
    ball_compare,
    ball_meet,
    balls_at_depth,
    phi_eval,
)
from .clopen import (
    Clopen,
    clopen_complement,
    clopen_imp,
    clopen_join,
    clopen_leq,
    clopen_meet,
    join_all,
)
from .compactness import CoverStream, disjointify, finite_subcover, separate
from .errors import LawViolation
from .intervals import IntervalSet
from .regularity import UniformCoverIndex, punctured_open, split_atomless, star, well_inside
from .retraction import apply_H, build_f, deinterleave, interleave, retract_check


@dataclass(frozen=True)
class LawParams:
    p: int = 2
    depth: int = 3
    cases: int = 200
    seed: int = 0


def _check(cond: bool, what: str) -> None:
    if not cond:
        raise LawViolation(what)


def random_clopen(rng: random.Random, p: int, depth: int) -> Clopen:
    balls = []
    for _ in range(rng.randint(0, 2 * p)):
        n = rng.randint(0, depth)
        balls.append(Ball(rng.randrange(p**n), n, p))
    return Clopen(p, balls)


def random_cover(rng: random.Random, p: int, depth: int) -> list[Clopen]:
    """A shuffled family of clopens of depth <= ``depth`` joining to the top."""
    members = list(range(p**depth))
    parts: list[list[int]] = [[] for _ in range(rng.randint(1, 4))]
    for r in members:
        for part in rng.sample(parts, rng.randint(1, len(parts))):
            part.append(r)
    cover = [oracle.from_residues(oracle.ResidueSet.of(p, depth, part)) for part in parts]
    rng.shuffle(cover)
    return cover


def suite_frame(lp: LawParams, rng: random.Random) -> int:
    """Generator relations and the oracle homomorphism."""
    p, D = lp.p, lp.depth
    n = 0
    balls = [b for d in range(D + 1) for b in balls_at_depth(d, p)]
    for b1 in balls:
        for b2 in balls:
            rel = ball_compare(b1, b2)
            s1, s2 = oracle.ball_residues(b1, D), oracle.ball_residues(b2, D)
            expected = (Relation.EQUAL if s1 == s2 else Relation.BELOW if s1 <= s2
                        else Relation.ABOVE if s2 <= s1 else Relation.DISJOINT)
            _check(rel is expected, f"compare {b1} {b2}: {rel}")
            _check((s1 & s2).members == 0 or (s1 <= s2 or s2 <= s1),
                   f"R4 fails for {b1} {b2}")
            meet = ball_meet(b1, b2)
            got = oracle.ResidueSet(p, D, 0) if meet is None else oracle.ball_residues(meet, D)
            _check(got == s1 & s2, f"meet {b1} {b2}")
            n += 1
        kids = ball_children(b1)
        if b1.depth < D:
            _check(join_all(map(Clopen.ball, kids), p) == Clopen.ball(b1), f"R5 at {b1}")
        others = [Clopen.ball(b) for b in balls_at_depth(b1.depth, p) if b != b1]
        _check(join_all(others, p) == clopen_complement(Clopen.ball(b1)),
               f"complement formula at {b1}")
    for d in range(D + 1):
        _check(join_all(map(Clopen.ball, balls_at_depth(d, p)), p).is_top, f"Q2 at depth {d}")
    for _ in range(lp.cases):
        x, y = random_clopen(rng, p, D), random_clopen(rng, p, D)
        sx, sy = oracle.to_residues(x, D), oracle.to_residues(y, D)
        _check(oracle.to_residues(x & y, D) == sx & sy, f"meet {x} {y}")
        _check(oracle.to_residues(x | y, D) == sx | sy, f"join {x} {y}")
        _check(oracle.to_residues(~x, D) == ~sx, f"neg {x}")
        _check(oracle.to_residues(clopen_imp(x, y), D) == ~sx | sy, f"imp {x} {y}")
        _check(clopen_leq(x, y) == (sx <= sy), f"leq {x} {y}")
        _check(oracle.from_residues(sx) == x, f"round trip {x}")
        n += 1
    return n


def suite_boolean(lp: LawParams, rng: random.Random) -> int:
    p, D = lp.p, lp.depth
    for _ in range(lp.cases):
        x, y, z = (random_clopen(rng, p, D) for _ in range(3))
        _check(~~x == x, f"involution {x}")
        _check(~(x & y) == ~x | ~y, f"De Morgan {x} {y}")
        _check(x & (y | z) == (x & y) | (x & z), f"distributivity {x} {y} {z}")
        _check((x & ~x).is_bottom and (x | ~x).is_top, f"complement {x}")
        _check(Clopen(p, (x & y).leaves) == x & y, f"canonicity {x & y}")
        _check(well_inside(x, y) == clopen_leq(x, y), f"well inside {x} {y}")
    return lp.cases


def suite_compactness(lp: LawParams, rng: random.Random) -> int:
    p, D = lp.p, lp.depth
    for i in range(lp.cases):
        cover = random_cover(rng, p, D)
        if i % 10 == 0:
            cover = [Clopen.bottom(p)] * rng.randint(5, 30) + cover
        budget = len(cover) * p ** (D + 1) + 1
        found = finite_subcover(CoverStream(p, cover, budget))
        union = oracle.ResidueSet(p, D, 0)
        for idx, c in found:
            _check(cover[idx] == c, f"subcover index {idx} does not match stream")
            union = union | oracle.to_residues(c, D)
        _check(union.members == union.full, f"subcover of {[str(c) for c in cover]}")
    return lp.cases


def suite_partition(lp: LawParams, rng: random.Random) -> int:
    p, D = lp.p, lp.depth
    for _ in range(lp.cases):
        cover = random_cover(rng, p, D)
        parts = disjointify(cover)
        _check(join_all(parts, p).is_top, f"partition join {cover}")
        for u, v in itertools.combinations(parts, 2):
            _check((u & v).is_bottom, f"overlap {u} {v}")
        for v in parts:
            _check(any(clopen_leq(v, u) for u in cover), f"{v} refines nothing")
        a, b = random_clopen(rng, p, D), random_clopen(rng, p, D)
        a = a | ~b
        c = separate(a, b)
        _check(clopen_leq(c, a) and clopen_leq(~c, b), f"separate {a} {b}")
    return lp.cases


def suite_perfect(lp: LawParams, rng: random.Random) -> int:
    p, D = lp.p, lp.depth
    n = 0
    for d in range(D + 1):
        for b in balls_at_depth(d, p):
            c1, c2 = split_atomless(b)
            _check(ball_meet(c1, c2) is None and ball_meet(c1, b) == c1
                   and ball_meet(c2, b) == c2, f"split {b}")
            n += 1
    for K in range(1, D + 2):
        for a in range(p**K):
            prefix = Ball(a, K, p).digits()
            x = punctured_open(prefix, K, p)
            for m in range(K):
                point_ball = Ball(a % p**m, m, p)
                _check(not clopen_leq(Clopen.ball(point_ball), x), f"punctured {x} at {point_ball}")
                for b in balls_at_depth(m, p):
                    _check(not (Clopen.ball(b) & x).is_bottom, f"{b} misses {x}")
            n += 1
    return n


def suite_uniform(lp: LawParams, rng: random.Random) -> int:
    """``star(b, U_{n+1})`` is the depth ``n+1`` ball around ``b``, a member of ``U_n``."""
    p = lp.p
    n_cases = 0
    for n in range(lp.depth + 1):
        for d in range(n + 1, n + 5):
            for b in balls_at_depth(d, p):
                s = star(b, UniformCoverIndex(n + 1, d))
                _check(s == Clopen.ball(b.ancestor(n + 1)), f"star {b} in U_{n + 1}")
                n_cases += 1
    return n_cases


def suite_preimages(lp: LawParams, rng: random.Random) -> int:
    n = 0
    g_max = lp.depth + 2
    values: dict[Fraction, set[BinaryTail]] = {}
    for m in range(g_max + 3):
        for bits in itertools.product((0, 1), repeat=m):
            for t in (0, 1):
                tail = BinaryTail(bits, t)
                values.setdefault(phi_eval(tail).value, set()).add(tail)
    for g in range(1, g_max + 1):
        for u in range(1, 1 << g, 2):
            q = Dyadic(u, g)
            got = set(two_preimages(q))
            _check(got == values.get(q.value, set()), f"preimages of {q}")
            n += 1
    return n


def suite_tphi(lp: LawParams, rng: random.Random) -> int:
    n = 0
    grid = [Dyadic.of(Fraction(u, 1 << g)) for g in range(4) for u in range(-4, (1 << g) + 5)]
    grid = sorted(set(grid))
    K_max = lp.depth + 2
    for q in grid:
        for d in Direction:
            prev = Clopen.bottom(2)
            for K in range(K_max + 1):
                ray = tphi_ray(q, d, K)
                _check(clopen_leq(prev, ray), f"monotone {q} {d.value} {K}")
                for leaf in ray.leaves:
                    img = ball_image(leaf)
                    inside = img.hi < q if d is Direction.BELOW else img.lo > q
                    _check(inside, f"leaf {leaf} of ray {q} {d.value} not inside")
                prev = ray
                n += 1
    for lo in grid:
        for hi in grid:
            x = IntervalSet.interval(lo, hi)
            expected = lo.value < 0 and hi.value > 1
            reaches = tphi(x, K_max).is_top
            _check(reaches == expected, f"tphi({lo},{hi}) top={reaches}")
            raw = tphi_ray(hi, Direction.BELOW, K_max) & tphi_ray(lo, Direction.ABOVE, K_max)
            _check(raw.is_top == expected, f"rays at ({lo},{hi}) top={raw.is_top}")
            n += 1
    for _ in range(lp.cases):
        g = rng.randint(0, 6)
        u, v = sorted(rng.sample(range((1 << g) + 1), 2)) if g else (0, 1)
        lo, hi = Dyadic.of(Fraction(u, 1 << g)), Dyadic.of(Fraction(v, 1 << g))
        b, K = density_witness(lo, hi)
        _check(clopen_leq(Clopen.ball(b), tphi(IntervalSet.interval(lo, hi), K)),
               f"density witness {b} for ({lo},{hi})")
        n += 1
    return n


def suite_retraction(lp: LawParams, rng: random.Random) -> int:
    p, D = lp.p, min(lp.depth, 4)
    for _ in range(lp.cases):
        x = random_clopen(rng, p, D)
        if x.is_top:
            continue
        K = x.max_depth + rng.randint(0, 1)
        f = build_f(x, K)
        for b, fb in f.table.items():
            _check(fb.depth == b.depth and not x.contains_ball(fb), f"f({b}) = {fb} for x={x}")
            _check(apply_H(Clopen.ball(b), f).is_bottom == x.contains_ball(b),
                   f"H kills {b} wrongly for x={x}")
        report = retract_check(x, K, cases=20, seed=rng.randrange(1 << 30))
        _check(report.ok, f"retraction x={x}: {report.counterexample}")
    return lp.cases


def suite_interleave(lp: LawParams, rng: random.Random) -> int:
    n = 0
    D = min(lp.depth, 4)
    for d in range(D + 1):
        seen = set()
        for b1 in balls_at_depth(d):
            for b2 in balls_at_depth(d):
                z = interleave(b1, b2)
                _check(deinterleave(z) == (b1, b2), f"deinterleave {z}")
                seen.add(z)
                n += 1
        _check(len(seen) == 4**d, f"interleave not injective at depth {d}")
    return n


SUITES: dict[str, Callable[[LawParams, random.Random], int]] = {
    "boolean": suite_boolean,
    "compactness": suite_compactness,
    "frame": suite_frame,
    "interleave": suite_interleave,
    "partition": suite_partition,
    "perfect": suite_perfect,
    "preimages": suite_preimages,
    "retraction": suite_retraction,
    "tphi": suite_tphi,
    "uniform": suite_uniform,
}


def run_laws(lp: LawParams, suites: list[str] | None = None) -> tuple[list[str], bool]:
    """Run the selected suites in name order; return report lines and overall status."""
    names = sorted(suites or SUITES)
    lines = [f"laws p={lp.p} depth={lp.depth} cases={lp.cases} seed={lp.seed}"]
    ok = True
    for name in names:
        rng = random.Random(f"{lp.seed}:{name}")
        try:
            n = SUITES[name](lp, rng)
        except LawViolation as exc:
            lines.append(f"{name}\tFAIL\t{exc}")
            ok = False
        else:
            lines.append(f"{name}\tok\t{n} cases")
    return lines, ok
