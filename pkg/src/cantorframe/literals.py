"""Text literals.

=============  ====================================
ball           ``B(a,n)@p``
clopen         ``{B(a1,n1),B(a2,n2),...}@p``
dyadic         ``u/2^g``, ``u/2``, ``u/8`` or ``u``
binary tail    ``bits:<prefix>;<tail>``
interval set   ``(lo,hi)|(lo,hi)|...`` or ``empty``
=============  ====================================

Malformed text raises :class:`LiteralSyntaxError`. Text that parses but
names a non-normalized value (unreduced residue, composite modulus, even
dyadic numerator, untrimmed tail) raises :class:`PreconditionError`.
"""

from __future__ import annotations

import re

from .balls import MAX_DEPTH, Ball, BinaryTail, Dyadic, check_depth
from .clopen import Clopen
from .errors import LiteralSyntaxError, PreconditionError
from .intervals import Interval, IntervalSet

_INT = r"[+-]?\d+"
_BALL_BODY = re.compile(r"B\((\d+),(\d+)\)")
_BALL = re.compile(r"B\((\d+),(\d+)\)@(\d+)")
_CLOPEN = re.compile(r"\{(.*)\}@(\d+)")
_DYADIC = re.compile(rf"({_INT})(?:/(?:2\^(\d+)|(\d+)))?")
_TAIL = re.compile(r"bits:([01]*);([01])")
_INTERVAL = re.compile(r"\(([^,()]+),([^,()]+)\)")


def _strip(text: str) -> str:
    return re.sub(r"\s+", "", text)


def _ball(a: str, n: str, p: int, max_depth: int) -> Ball:
    depth = check_depth(int(n), max_depth)
    return Ball(int(a), depth, p)


def parse_ball(text: str, max_depth: int = MAX_DEPTH) -> Ball:
    m = _BALL.fullmatch(_strip(text))
    if not m:
        raise LiteralSyntaxError(f"not a ball literal: {text!r}")
    return _ball(m[1], m[2], int(m[3]), max_depth)


def parse_clopen(text: str, max_depth: int = MAX_DEPTH) -> Clopen:
    """Any list of balls is accepted; the result is its canonical union."""
    m = _CLOPEN.fullmatch(_strip(text))
    if not m:
        raise LiteralSyntaxError(f"not a clopen literal: {text!r}")
    body, p = m[1], int(m[2])
    balls = []
    if body:
        parts = re.split(r",(?=B\()", body)
        for part in parts:
            bm = _BALL_BODY.fullmatch(part)
            if not bm:
                raise LiteralSyntaxError(f"bad ball {part!r} in {text!r}")
            balls.append(_ball(bm[1], bm[2], p, max_depth))
    return Clopen(p, balls)


def parse_dyadic(text: str) -> Dyadic:
    m = _DYADIC.fullmatch(_strip(text))
    if not m:
        raise LiteralSyntaxError(f"not a dyadic literal: {text!r}")
    u = int(m[1])
    if m[2] is not None:
        return Dyadic(u, int(m[2]))
    if m[3] is not None:
        den = int(m[3])
        if den == 0 or den & (den - 1):
            raise PreconditionError(f"{text!r} is not a dyadic rational")
        return Dyadic(u, den.bit_length() - 1)
    return Dyadic(u, 0)


def parse_tail(text: str) -> BinaryTail:
    m = _TAIL.fullmatch(_strip(text))
    if not m:
        raise LiteralSyntaxError(f"not a binary tail literal: {text!r}")
    prefix = tuple(int(c) for c in m[1])
    tail = int(m[2])
    if prefix and prefix[-1] == tail:
        raise PreconditionError(f"{text!r} is not trimmed")
    return BinaryTail(prefix, tail)


def _end(text: str, infinite: str):
    if text == infinite or (infinite == "+inf" and text == "inf"):
        return None
    return parse_dyadic(text)


def parse_interval_set(text: str) -> IntervalSet:
    s = _strip(text)
    if s == "empty":
        return IntervalSet.empty()
    comps = []
    for part in s.split("|"):
        m = _INTERVAL.fullmatch(part)
        if not m:
            raise LiteralSyntaxError(f"not an interval literal: {part!r}")
        comps.append(Interval(_end(m[1], "-inf"), _end(m[2], "+inf")))
    return IntervalSet(comps)


def parse_digits(text: str) -> list[int]:
    """Comma separated digits, e.g. ``0,1,2``; an empty string is no digits."""
    s = _strip(text)
    if not s:
        return []
    if not re.fullmatch(r"\d+(,\d+)*", s):
        raise LiteralSyntaxError(f"not a digit list: {text!r}")
    return [int(d) for d in s.split(",")]
