"""Brute-force semantics: a clopen of depth <= D is a subset of Z/p^D.

Nothing here touches the trie code in :mod:`cantorframe.clopen`; sets are
plain integer bitsets and canonical leaves are found by scanning residue
classes from the coarsest depth down.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .balls import Ball, check_prime
from .clopen import Clopen
from .errors import PreconditionError


@dataclass(frozen=True)
class ResidueSet:
    p: int
    D: int
    members: int  # bit r set <=> residue r mod p^D is in the set

    @property
    def size(self) -> int:
        return self.p**self.D

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def __contains__(self, r: int) -> bool:
        return bool(self.members >> r & 1)

    def elements(self) -> list[int]:
        return [r for r in range(self.size) if self.members >> r & 1]

    @classmethod
    def of(cls, p: int, D: int, elems) -> ResidueSet:
        m = 0
        for r in elems:
            m |= 1 << (r % p**D)
        return cls(p, D, m)

    def _check(self, other: ResidueSet) -> None:
        if (self.p, self.D) != (other.p, other.D):
            raise PreconditionError("residue sets from different contexts")

    def __and__(self, other: ResidueSet) -> ResidueSet:
        self._check(other)
        return ResidueSet(self.p, self.D, self.members & other.members)

    def __or__(self, other: ResidueSet) -> ResidueSet:
        self._check(other)
        return ResidueSet(self.p, self.D, self.members | other.members)

    def __invert__(self) -> ResidueSet:
        return ResidueSet(self.p, self.D, self.full & ~self.members)

    def __le__(self, other: ResidueSet) -> bool:
        self._check(other)
        return self.members & ~other.members == 0


_TABLE_LIMIT = 1 << 12  # precompute class masks only for small rings


def ball_residues(b: Ball, D: int) -> ResidueSet:
    if b.depth > D:
        raise PreconditionError(f"ball {b} deeper than cutoff {D}")
    if b.p**D <= _TABLE_LIMIT:
        return ResidueSet(b.p, D, _mask_index(b.p, D)[b.residue, b.depth])
    return ResidueSet.of(b.p, D, range(b.residue, b.p**D, b.p**b.depth))


def to_residues(x: Clopen, D: int) -> ResidueSet:
    if x.max_depth > D:
        raise PreconditionError(f"clopen of depth {x.max_depth} exceeds cutoff {D}")
    m = 0
    for b in x.leaves:
        m |= ball_residues(b, D).members
    return ResidueSet(x.p, D, m)


@lru_cache(maxsize=64)
def _class_masks(p: int, D: int) -> tuple[tuple[int, int, int], ...]:
    out = []
    for n in range(D + 1):
        mod = p**n
        for a in range(mod):
            cls = 0
            for r in range(a, p**D, mod):
                cls |= 1 << r
            out.append((a, n, cls))
    return tuple(out)


@lru_cache(maxsize=64)
def _mask_index(p: int, D: int) -> dict[tuple[int, int], int]:
    return {(a, n): cls for a, n, cls in _class_masks(p, D)}


def from_residues(s: ResidueSet) -> Clopen:
    p = check_prime(s.p)
    covered = 0
    leaves = []
    for a, n, cls in _class_masks(p, s.D):
        if cls & ~s.members == 0 and cls & ~covered:
            leaves.append(Ball(a, n, p))
            covered |= cls
    return Clopen.from_canonical_leaves(p, leaves)


def all_subsets(p: int, D: int):
    size = p**D
    for m in range(1 << size):
        yield ResidueSet(p, D, m)
