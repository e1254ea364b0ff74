"""Partitions in a p x q box: enumeration, conjugation and the star map."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, NamedTuple


class Partition(tuple):
    """Weakly decreasing tuple of nonnegative integers.

    Trailing zeros are stripped on construction, so two partitions with the
    same nonzero parts compare equal. The empty partition ``Partition()``
    plays the role of 0.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(v) for v in parts]
        if any(v < 0 for v in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def largest(self) -> int:
        return self[0] if self else 0

    def padded(self, k: int) -> tuple[int, ...]:
        if len(self) > k:
            raise ValueError(f"{self} has more than {k} parts")
        return tuple(self) + (0,) * (k - len(self))

    def fits(self, p: int, q: int) -> bool:
        return len(self) <= p and self.largest <= q

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


EMPTY = Partition()


class BoxBound(NamedTuple):
    p: int
    q: int


def _check_bound(p: int, q: int) -> None:
    if p < 0 or q < 0:
        raise ValueError(f"box bounds must be nonnegative, got ({p}, {q})")


@lru_cache(maxsize=None)
def _box(p: int, q: int) -> tuple[Partition, ...]:
    parts = [Partition(sorted(c, reverse=True))
             for c in combinations_with_replacement(range(q + 1), p)]
    # reverse-lexicographic order: compare padded tuples from the last slot
    parts.sort(key=lambda lam: lam.padded(p)[::-1])
    return tuple(parts)


def enumerate_B(p: int, q: int) -> list[Partition]:
    """All partitions with at most ``p`` parts, each at most ``q``.

    Ordered reverse-lexicographically on the tuples padded to length p,
    e.g. ``0, (1), (2), (1,1), (2,1), (2,2)`` for the 2 x 2 box.
    """
    _check_bound(p, q)
    return list(_box(p, q))


@lru_cache(maxsize=None)
def _c_box(p: int, q: int) -> tuple[Partition, ...]:
    if p == 0:
        # no first slot, so no partition can have largest part q
        return ()
    return tuple(lam for lam in _box(p, q) if lam.largest == q)


def enumerate_C(p: int, q: int) -> list[Partition]:
    """Partitions of the p x q box whose first part equals ``q``."""
    _check_bound(p, q)
    return list(_c_box(p, q))


def conjugate(lam: Iterable[int]) -> Partition:
    lam = Partition(lam)
    return Partition(sum(1 for part in lam if part >= k)
                     for k in range(1, lam.largest + 1))


def star(lam: Iterable[int], p: int, q: int) -> Partition:
    """Box complement of the conjugate: ``(p - lam'_q, ..., p - lam'_1)``.

    The result lies in the q x p box.
    """
    lam = Partition(lam)
    _check_bound(p, q)
    if not lam.fits(p, q):
        raise ValueError(f"{tuple(lam)} does not fit in the {p}x{q} box")
    if q == 0:
        return EMPTY
    conj = conjugate(lam).padded(q)
    return Partition(p - conj[k] for k in reversed(range(q)))


def drop_first(lam: Iterable[int]) -> Partition:
    lam = Partition(lam)
    return Partition(lam[1:])


def prepend(lam: Iterable[int], first: int) -> Partition:
    """Inverse of :func:`drop_first` on partitions with first part ``first``."""
    return Partition((first, *Partition(lam)))
