"""Arithmetic progressions inside {1,..,n}, treated as finite sets.

Canonical form makes set equality coincide with field equality:

* the empty progression is the singleton value ``EMPTY`` = (base 0, step 0, length 0);
* one-element progressions always carry step 0;
* progressions of length >= 2 carry step >= 1.

A ``Progression`` never knows its ambient n; the lattice layer enforces
that all members fit inside {1,..,n} when a lattice is built.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable


class NotAProgressionError(ValueError):
    """Raised by from_set when a set is not an arithmetic progression."""


@dataclass(frozen=True)
class Progression:
    base: int
    step: int
    length: int

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("length must be >= 0")
        if self.length == 0 and (self.base, self.step) != (0, 0):
            raise ValueError("the empty progression is (0, 0, 0)")
        if self.length >= 1 and self.base < 1:
            raise ValueError("base must be >= 1")
        if self.length == 1 and self.step != 0:
            raise ValueError("singletons carry step 0")
        if self.length >= 2 and self.step < 1:
            raise ValueError("length >= 2 needs step >= 1")

    @property
    def is_empty(self) -> bool:
        return self.length == 0

    @property
    def last(self) -> int:
        if self.is_empty:
            raise ValueError("empty progression has no last element")
        return self.base + (self.length - 1) * self.step

    def elements(self) -> tuple[int, ...]:
        """The members in increasing order; empty tuple for EMPTY."""
        return tuple(self.base + i * self.step for i in range(self.length))

    def __contains__(self, x: int) -> bool:
        if self.is_empty or x < self.base or x > self.last:
            return False
        if self.step == 0:
            return x == self.base
        return (x - self.base) % self.step == 0

    def __str__(self):
        return "{" + ",".join(str(x) for x in self.elements()) + "}"


EMPTY = Progression(0, 0, 0)


def sort_key(p: Progression) -> tuple[int, int, int]:
    """(size, base, step): the canonical element order of the lattice layer."""
    return (p.length, p.base, p.step)


def from_set(elements: Iterable[int]) -> Progression:
    """Canonical progression for a finite set of positive integers.

    Raises NotAProgressionError when the gaps are unequal (e.g. {1,2,4}),
    ValueError when a member is not a positive integer.
    """
    xs = sorted(set(elements))
    if any(not isinstance(x, int) or isinstance(x, bool) or x < 1 for x in xs):
        raise ValueError("members must be positive integers")
    if not xs:
        return EMPTY
    if len(xs) == 1:
        return Progression(xs[0], 0, 1)
    step = xs[1] - xs[0]
    for a, b in zip(xs, xs[1:]):
        if b - a != step:
            raise NotAProgressionError(f"not an arithmetic progression: {set(xs)}")
    return Progression(xs[0], step, len(xs))


def leq(p: Progression, q: Progression) -> bool:
    """Set containment p <= q."""
    if p.is_empty:
        return True
    if q.is_empty:
        return False
    return all(x in q for x in p.elements())


def meet(p: Progression, q: Progression) -> Progression:
    """Set intersection, which is again a progression."""
    if p.is_empty or q.is_empty:
        return EMPTY
    small, big = (p, q) if p.length <= q.length else (q, p)
    common = [x for x in small.elements() if x in big]
    try:
        return from_set(common)
    except NotAProgressionError:  # pragma: no cover - mathematically impossible
        raise AssertionError(
            f"intersection of {p} and {q} is not a progression; this is a bug"
        )


def join_in_ambient(p: Progression, q: Progression) -> Progression:
    """The minimal progression containing both p and q.

    Base is the smallest member, last element the largest, and the step is
    the gcd of all pairwise differences within the union.  The result fits
    inside {1,..,n} whenever p and q do, so it is the join in any L(n)
    containing both.
    """
    if p.is_empty:
        return q
    if q.is_empty:
        return p
    union = sorted(set(p.elements()) | set(q.elements()))
    if len(union) == 1:
        return Progression(union[0], 0, 1)
    lo = union[0]
    step = 0
    for x in union[1:]:
        step = gcd(step, x - lo)
    return Progression(lo, step, (union[-1] - lo) // step + 1)


def covers(q: Progression, p: Progression, lattice) -> bool:
    """True iff q covers p in the given lattice (no element strictly between).

    Both progressions must belong to the lattice.  The answer comes from the
    lattice's cover structure: L(n) is not graded, so there is no rank test.
    """
    try:
        qi = lattice.id_of[q]
        pi = lattice.id_of[p]
    except KeyError as exc:
        raise ValueError(f"progression {exc.args[0]} is not in L({lattice.n})") from None
    return lattice.covers(qi, pi)


def render(p: Progression, n: int) -> str:
    """Compact digit-string form ("1234", "14") for n <= 9, braces otherwise."""
    if p.is_empty:
        return "{}"
    if n <= 9:
        return "".join(str(x) for x in p.elements())
    return str(p)
