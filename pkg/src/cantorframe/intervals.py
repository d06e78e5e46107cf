"""Finite unions of open intervals with dyadic endpoints, read as traces on
the carrier [0, 1].

Endpoints are :class:`Dyadic` values or ``None`` for an infinite end. Two
sets with the same trace are stored identically: lower ends below 0 become
``-inf``, upper ends above 1 become ``+inf``, empty traces are dropped and
overlapping components are merged. Components that merely touch, like
``(0,1/2)`` and ``(1/2,1)``, stay apart since the shared endpoint is missing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .balls import Dyadic

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class Interval:
    lo: Optional[Dyadic]  # None is -inf
    hi: Optional[Dyadic]  # None is +inf

    def contains(self, x: Fraction) -> bool:
        return (self.lo is None or self.lo.value < x) and (self.hi is None or x < self.hi.value)

    def __str__(self) -> str:
        lo = "-inf" if self.lo is None else str(self.lo)
        hi = "+inf" if self.hi is None else str(self.hi)
        return f"({lo},{hi})"


def _clip(iv: Interval) -> Interval | None:
    lo = None if iv.lo is None or iv.lo.value < _ZERO else iv.lo
    hi = None if iv.hi is None or iv.hi.value > _ONE else iv.hi
    if lo is not None and lo.value >= _ONE:
        return None
    if hi is not None and hi.value <= _ZERO:
        return None
    if lo is not None and hi is not None and lo.value >= hi.value:
        return None
    return Interval(lo, hi)


def _lo_key(iv: Interval) -> Fraction:
    return Fraction(-1) if iv.lo is None else iv.lo.value


def _hi_key(iv: Interval) -> Fraction:
    return Fraction(2) if iv.hi is None else iv.hi.value


class IntervalSet:
    __slots__ = ("components",)

    def __init__(self, components: Iterable[Interval] = ()) -> None:
        clipped = [c for c in map(_clip, components) if c is not None]
        clipped.sort(key=_lo_key)
        merged: list[Interval] = []
        for c in clipped:
            if merged and _lo_key(c) < _hi_key(merged[-1]):
                last = merged[-1]
                if _hi_key(c) > _hi_key(last):
                    merged[-1] = Interval(last.lo, c.hi)
            else:
                merged.append(c)
        self.components: tuple[Interval, ...] = tuple(merged)

    @classmethod
    def top(cls) -> IntervalSet:
        return cls([Interval(None, None)])

    @classmethod
    def empty(cls) -> IntervalSet:
        return cls()

    @classmethod
    def interval(cls, lo, hi) -> IntervalSet:
        """Convenience constructor from numbers, ``Dyadic`` or ``None``."""
        conv = lambda v: v if v is None or isinstance(v, Dyadic) else Dyadic.of(v)
        return cls([Interval(conv(lo), conv(hi))])

    @property
    def is_empty(self) -> bool:
        return not self.components

    def contains(self, x: Fraction) -> bool:
        """Membership of a point of [0, 1] in the trace."""
        return any(c.contains(x) for c in self.components)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntervalSet):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __and__(self, other: IntervalSet) -> IntervalSet:
        return iset_meet(self, other)

    def __or__(self, other: IntervalSet) -> IntervalSet:
        return iset_join(self, other)

    def __le__(self, other: IntervalSet) -> bool:
        return iset_meet(self, other) == self

    def __str__(self) -> str:
        if not self.components:
            return "empty"
        return "|".join(map(str, self.components))

    def __repr__(self) -> str:
        return f"IntervalSet({self})"


def _max_lo(a: Interval, b: Interval) -> Optional[Dyadic]:
    if a.lo is None:
        return b.lo
    if b.lo is None:
        return a.lo
    return max(a.lo, b.lo)


def _min_hi(a: Interval, b: Interval) -> Optional[Dyadic]:
    if a.hi is None:
        return b.hi
    if b.hi is None:
        return a.hi
    return min(a.hi, b.hi)


def iset_meet(x: IntervalSet, y: IntervalSet) -> IntervalSet:
    return IntervalSet(
        Interval(_max_lo(a, b), _min_hi(a, b)) for a in x.components for b in y.components
    )


def iset_join(x: IntervalSet, y: IntervalSet) -> IntervalSet:
    return IntervalSet(x.components + y.components)


def iset_is_top(x: IntervalSet) -> bool:
    return x.components == (Interval(None, None),)
