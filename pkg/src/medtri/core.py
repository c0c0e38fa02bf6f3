"""Exact integer primitives and median analysis for a single triangle.

The median to side ``x`` of a triangle with sides ``x, y, z`` satisfies
``4*mu**2 == 2*(y**2 + z**2) - x**2``.  Everything here works on that
integer quantity ("quad") so no floating point is ever involved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

#: Largest accepted side length.  Quads stay below 4 * MAX_SIDE**2 < 2**63.
MAX_SIDE = 10**9

INT = "int"
HALF = "half"
IRR = "irr"

SIDE_LABELS = ("a", "b", "c")


class DegenerateTriangleError(ValueError):
    """Side lengths that do not form a genuine (non-degenerate) triangle."""


class ArithmeticRangeError(OverflowError):
    """A value exceeds the supported exact-arithmetic range."""


def isqrt(n: int) -> int:
    """Floor of the square root of ``n`` (exact, any size)."""
    if n < 0:
        raise ValueError(f"isqrt of negative number {n}")
    return math.isqrt(n)


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


class TwoAdic(NamedTuple):
    """``n == 2**valuation * odd_part`` with ``odd_part`` odd."""

    valuation: int
    odd_part: int

    def value(self) -> int:
        return self.odd_part << self.valuation


def two_adic(n: int) -> TwoAdic:
    if n < 1:
        raise ValueError(f"two_adic needs a positive integer, got {n}")
    e = (n & -n).bit_length() - 1
    return TwoAdic(e, n >> e)


def valuation2(n: int) -> int:
    return two_adic(n).valuation


@dataclass(frozen=True)
class Triangle:
    """Three positive integer sides obeying the strict triangle inequality."""

    side_a: int
    side_b: int
    side_c: int

    def __post_init__(self):
        sides = (self.side_a, self.side_b, self.side_c)
        for s in sides:
            if not isinstance(s, int) or isinstance(s, bool):
                raise TypeError(f"side lengths must be integers, got {s!r}")
            if s < 1:
                raise DegenerateTriangleError(f"side lengths must be positive, got {sides}")
            if s > MAX_SIDE:
                raise ArithmeticRangeError(f"side {s} exceeds the cap {MAX_SIDE}")
        a, b, c = sides
        if not (a + b > c and b + c > a and c + a > b):
            raise DegenerateTriangleError(f"{sides} violates the strict triangle inequality")

    @property
    def sides(self) -> tuple[int, int, int]:
        return (self.side_a, self.side_b, self.side_c)

    def __iter__(self):
        return iter(self.sides)

    def __lt__(self, other: Triangle) -> bool:
        return self.sides < other.sides

    @classmethod
    def of(cls, sides) -> Triangle:
        a, b, c = sides
        return cls(int(a), int(b), int(c))

    def is_isosceles(self) -> bool:
        a, b, c = self.sides
        return a == b or b == c or a == c

    def is_equilateral(self) -> bool:
        return self.side_a == self.side_b == self.side_c

    def is_scalene(self) -> bool:
        return not self.is_isosceles()


@dataclass(frozen=True)
class MedianStatus:
    """Exact nature of one median length.

    ``kind`` is ``"int"``, ``"half"`` or ``"irr"``.  For the two rational
    kinds ``twice_mu`` holds ``2*mu`` (even for ``"int"``, odd for ``"half"``).
    """

    kind: str
    twice_mu: int | None = None

    def __post_init__(self):
        if self.kind == IRR:
            if self.twice_mu is not None:
                raise ValueError("irrational status carries no value")
        elif self.kind in (INT, HALF):
            if self.twice_mu is None or self.twice_mu < 1:
                raise ValueError(f"{self.kind} status needs a positive twice_mu")
            if (self.twice_mu % 2 == 0) != (self.kind == INT):
                raise ValueError(f"parity of twice_mu={self.twice_mu} contradicts kind {self.kind!r}")
        else:
            raise ValueError(f"unknown median status {self.kind!r}")

    @classmethod
    def integral(cls, mu: int) -> MedianStatus:
        return cls(INT, 2 * mu)

    @classmethod
    def half_integer(cls, twice_mu: int) -> MedianStatus:
        return cls(HALF, twice_mu)

    @classmethod
    def irrational(cls) -> MedianStatus:
        return cls(IRR)

    @classmethod
    def from_quad(cls, quad: int) -> MedianStatus:
        r = math.isqrt(quad)
        if r * r != quad:
            return cls(IRR)
        return cls(INT if r % 2 == 0 else HALF, r)

    @property
    def is_integral(self) -> bool:
        return self.kind == INT

    @property
    def mu(self) -> Fraction | None:
        """Exact median length, or None when irrational."""
        if self.twice_mu is None:
            return None
        return Fraction(self.twice_mu, 2)

    def format_mu(self) -> str:
        """``"13"``, ``"5/2"`` or ``"irrational"``."""
        if self.kind == INT:
            return str(self.twice_mu // 2)
        if self.kind == HALF:
            return f"{self.twice_mu}/2"
        return "irrational"


@dataclass(frozen=True)
class MedianAnalysis:
    quad_a: int
    quad_b: int
    quad_c: int
    status_a: MedianStatus
    status_b: MedianStatus
    status_c: MedianStatus

    @property
    def quads(self) -> tuple[int, int, int]:
        return (self.quad_a, self.quad_b, self.quad_c)

    @property
    def statuses(self) -> tuple[MedianStatus, MedianStatus, MedianStatus]:
        return (self.status_a, self.status_b, self.status_c)

    @property
    def integral_count(self) -> int:
        return sum(s.is_integral for s in self.statuses)


def _sides(t) -> tuple[int, int, int]:
    if isinstance(t, Triangle):
        return t.sides
    return Triangle.of(t).sides


def median_quad_squares(t: Triangle) -> tuple[int, int, int]:
    """Return ``(4*mu_a**2, 4*mu_b**2, 4*mu_c**2)`` exactly."""
    a, b, c = _sides(t)
    a2, b2, c2 = a * a, b * b, c * c
    quads = (2 * (b2 + c2) - a2, 2 * (a2 + c2) - b2, 2 * (a2 + b2) - c2)
    if max(quads) >= 2**63:
        raise ArithmeticRangeError(f"median quads of {(a, b, c)} exceed 64 bits")
    return quads


def analyze_medians(t: Triangle) -> MedianAnalysis:
    qa, qb, qc = median_quad_squares(t)
    return MedianAnalysis(
        qa, qb, qc,
        MedianStatus.from_quad(qa),
        MedianStatus.from_quad(qb),
        MedianStatus.from_quad(qc),
    )


def integral_median_count(t: Triangle) -> int:
    return analyze_medians(t).integral_count


def canonicalize(t: Triangle) -> tuple[Triangle, tuple[int, int, int]]:
    """Sort sides ascending.

    The returned permutation ``perm`` satisfies
    ``canonical.sides[i] == t.sides[perm[i]]``; apply it to anything indexed
    by side (statuses, quads) with :func:`permute`.  Ties keep input order.
    """
    sides = _sides(t)
    perm = tuple(sorted(range(3), key=lambda i: sides[i]))
    return Triangle.of(sides[i] for i in perm), perm


def permute(perm, values) -> tuple:
    values = tuple(values)
    return tuple(values[i] for i in perm)


def is_pythagorean(t: Triangle) -> bool:
    a, b, c = sorted(_sides(t))
    return a * a + b * b == c * c
