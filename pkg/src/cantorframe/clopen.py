"""Clopen elements of the Cantor frame as canonical p-ary tries.

A clopen is stored as a canonical trie; its maximal balls (leaves) are read
off on demand. Operations combine tries node by node and collapse full or
empty sibling families, so every result is canonical: an antichain with no
complete family of ``p`` sibling leaves, sorted by ``(depth, residue)``.

Trie nodes are ``None`` (empty), ``True`` (full) or a tuple of ``p`` child
nodes indexed by the next digit.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Union

from .balls import Ball, check_prime, same_prime
from .errors import PreconditionError

Node = Union[None, bool, tuple]
_UNBUILT = object()


def _canon(children: tuple) -> Node:
    first = children[0]
    if (first is None or first is True) and children.count(first) == len(children):
        return first
    return children


def _build(items: Iterable[tuple[int, int]], p: int) -> Node:
    # items are (residue, depth) pairs; insert into a mutable trie, then freeze
    root: object = None
    for a, n in items:
        if n == 0:
            return True
        if root is None:
            root = [None] * p
        node = root
        while True:
            a, d = divmod(a, p)
            n -= 1
            child = node[d]
            if child is True:
                break
            if n == 0:
                node[d] = True
                break
            if child is None:
                child = node[d] = [None] * p
            node = child
    return _freeze(root)


def _freeze(node) -> Node:
    if node is None or node is True:
        return node
    return _canon(tuple([c if c is None or c is True else _freeze(c) for c in node]))


def _leaves(node: Node, p: int, out: list[Ball], res: int = 0, depth: int = 0,
            scale: int = 1) -> None:
    if node is None:
        return
    if node is True:
        out.append(Ball._trusted(res, depth, p))
        return
    for d, child in enumerate(node):
        _leaves(child, p, out, res + d * scale, depth + 1, scale * p)


def _height(node: Node) -> int:
    if node is None or node is True:
        return 0
    return 1 + max([_height(c) for c in node])


def _meet(x: Node, y: Node) -> Node:
    if x is None or y is None:
        return None
    if x is True:
        return y
    if y is True:
        return x
    return _canon(tuple([_meet(a, b) for a, b in zip(x, y)]))


def _join(x: Node, y: Node) -> Node:
    if x is True or y is True:
        return True
    if x is None:
        return y
    if y is None:
        return x
    return _canon(tuple([_join(a, b) for a, b in zip(x, y)]))


def _neg(x: Node, p: int) -> Node:
    if x is None:
        return True
    if x is True:
        return None
    return tuple([_neg(c, p) for c in x])


class Clopen:
    """A finite union of balls in canonical form. Immutable."""

    __slots__ = ("p", "_trie", "_leaves", "_hash", "_given")

    def __init__(self, p: int, balls: Iterable[Ball] = ()) -> None:
        check_prime(p)
        balls = list(balls)
        for b in balls:
            if b.p != p:
                raise PreconditionError("prime mismatch")
        self.p = p
        self._trie = _build([(b.residue, b.depth) for b in balls], p)
        self._leaves = self._hash = None
        self._given = False

    @classmethod
    def _from_trie(cls, p: int, trie: Node) -> Clopen:
        obj = cls.__new__(cls)
        obj.p = p
        obj._trie = trie
        obj._leaves = obj._hash = None
        obj._given = False
        return obj

    @classmethod
    def from_canonical_leaves(cls, p: int, leaves: Iterable[Ball]) -> Clopen:
        """Wrap leaves that the caller guarantees are already canonical.

        No normalization happens here and the trie is only built when an
        operation needs it; the brute-force oracle relies on this so that its
        output is compared against, not produced by, the trie code.
        """
        obj = cls.__new__(cls)
        obj.p = p
        obj._trie = _UNBUILT
        obj._leaves = tuple(sorted(leaves, key=lambda b: b.sort_key))
        obj._hash = None
        obj._given = True
        return obj

    @property
    def trie(self) -> Node:
        if self._trie is _UNBUILT:
            self._trie = _build([(b.residue, b.depth) for b in self._leaves], self.p)
        return self._trie

    @property
    def leaves(self) -> tuple[Ball, ...]:
        if self._leaves is None:
            out: list[Ball] = []
            _leaves(self._trie, self.p, out)
            self._leaves = tuple(sorted(out, key=lambda b: b.sort_key))
        return self._leaves

    @classmethod
    def from_pairs(cls, p: int, pairs: Iterable[tuple[int, int]]) -> Clopen:
        """Union of the balls ``(residue, depth)``; inputs must be reduced."""
        return cls._from_trie(p, _build(pairs, p))

    @classmethod
    def top(cls, p: int = 2) -> Clopen:
        return cls._from_trie(check_prime(p), True)

    @classmethod
    def bottom(cls, p: int = 2) -> Clopen:
        return cls._from_trie(check_prime(p), None)

    @classmethod
    def ball(cls, b: Ball) -> Clopen:
        p = b.p
        digits = []
        a = b.residue
        for _ in range(b.depth):
            a, d = divmod(a, p)
            digits.append(d)
        node: Node = True
        for d in reversed(digits):
            kids = [None] * p
            kids[d] = node
            node = tuple(kids)
        return cls._from_trie(p, node)

    @property
    def is_top(self) -> bool:
        return self.trie is True

    @property
    def is_bottom(self) -> bool:
        return self.trie is None

    @property
    def max_depth(self) -> int:
        if self._leaves is not None:
            return max((b.depth for b in self._leaves), default=0)
        return _height(self._trie)

    def contains_ball(self, b: Ball) -> bool:
        """``b <= self``; in canonical form some leaf must contain ``b``."""
        p = self.p
        if b.p != p:
            raise PreconditionError("prime mismatch")
        node = self.trie
        a = b.residue
        for _ in range(b.depth):
            if node is None or node is True:
                break
            a, d = divmod(a, p)
            node = node[d]
        return node is True

    def balls_at(self, depth: int) -> list[Ball]:
        """Decompose into the balls of one fixed depth (at least ``max_depth``)."""
        return [Ball._trusted(r, depth, self.p) for r in self.residues_at(depth)]

    def residues_at(self, depth: int) -> list[int]:
        """Sorted residues of the depth-``depth`` balls making up the clopen."""
        p = self.p
        top = p**depth
        out: list[int] = []
        stack = [(self.trie, 0, 0, 1)]
        while stack:
            node, res, d, scale = stack.pop()
            if node is None:
                continue
            if node is True:
                out.extend(range(res, top, scale))
            elif d == depth:
                raise PreconditionError(
                    f"clopen of depth {self.max_depth} not representable at depth {depth}"
                )
            else:
                for digit, child in enumerate(node):
                    if child is not None:
                        stack.append((child, res + digit * scale, d + 1, scale * p))
        out.sort()
        return out

    def __iter__(self) -> Iterator[Ball]:
        return iter(self.leaves)

    def __len__(self) -> int:
        return len(self.leaves)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Clopen):
            return NotImplemented
        if self.p != other.p:
            return False
        if self._given or other._given:
            # compare as given, so canonicalizing never masks bad input leaves
            return self.leaves == other.leaves
        # canonical tries are equal exactly when their leaf sets are
        return self.trie == other.trie

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.p, self.leaves))
        return self._hash

    def __and__(self, other: Clopen) -> Clopen:
        return clopen_meet(self, other)

    def __or__(self, other: Clopen) -> Clopen:
        return clopen_join(self, other)

    def __invert__(self) -> Clopen:
        return clopen_complement(self)

    def __le__(self, other: Clopen) -> bool:
        return clopen_leq(self, other)

    def __str__(self) -> str:
        inner = ",".join(b.inner_literal() for b in self.leaves)
        return "{" + inner + "}@" + str(self.p)

    def __repr__(self) -> str:
        return f"Clopen({self})"


def clopen_normalize(balls: Iterable[Ball], p: int | None = None) -> Clopen:
    balls = list(balls)
    if p is None:
        if not balls:
            raise PreconditionError("prime required for an empty ball list")
        p = balls[0].p
    return Clopen(p, balls)


def clopen_meet(x: Clopen, y: Clopen) -> Clopen:
    p = same_prime(x.p, y.p)
    return Clopen._from_trie(p, _meet(x.trie, y.trie))


def clopen_join(x: Clopen, y: Clopen) -> Clopen:
    p = same_prime(x.p, y.p)
    return Clopen._from_trie(p, _join(x.trie, y.trie))


def clopen_complement(x: Clopen) -> Clopen:
    return Clopen._from_trie(x.p, _neg(x.trie, x.p))


def clopen_imp(x: Clopen, a: Clopen) -> Clopen:
    """Heyting implication; on complemented elements it is ``not x or a``."""
    p = same_prime(x.p, a.p)
    return Clopen._from_trie(p, _join(_neg(x.trie, p), a.trie))


def clopen_leq(x: Clopen, y: Clopen) -> bool:
    same_prime(x.p, y.p)
    return _meet(x.trie, y.trie) == x.trie


def join_all(xs: Iterable[Clopen], p: int) -> Clopen:
    trie: Node = None
    for x in xs:
        same_prime(p, x.p)
        trie = _join(trie, x.trie)
    return Clopen._from_trie(p, trie)
