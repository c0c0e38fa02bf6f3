"""Parametric families of integer triangles with integral medians.

Four families are generated:

* ``F1``  right triangles whose hypotenuse median is an integer;
* ``F2a``/``F2b``  isosceles triangles with an integral base median;
* ``F3``  isosceles triangles whose two equal medians are integers,
  built from the solutions of ``x**2 + 2*y**2 == z**2``;
* ``F4``  non-isosceles triangles with two integral medians, found by
  searching odd parts and 2-adic exponents for perfect squares.

Generators iterate their parameters in lexicographic order and re-verify
every emitted hit against :func:`medtri.core.analyze_medians`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Iterable, Iterator

import numpy as np

from .core import (
    MAX_SIDE,
    SIDE_LABELS,
    Triangle,
    analyze_medians,
    canonicalize,
    isqrt,
)
from ._vec import isqrt_array

log = logging.getLogger(__name__)

F1, F2A, F2B, F3, F4 = "F1", "F2a", "F2b", "F3", "F4"
FAMILIES = (F1, F2A, F2B, F3, F4)


@dataclass(frozen=True)
class PythParams:
    m: int
    n: int
    delta: int

    def __post_init__(self):
        check_pyth_params(self.m, self.n, self.delta)


def check_pyth_params(m, n, delta):
    if n < 1:
        raise ValueError(f"n >= 1 violated (n={n})")
    if not m > n:
        raise ValueError(f"m > n violated (m={m}, n={n})")
    if delta < 1:
        raise ValueError(f"delta >= 1 violated (delta={delta})")
    if gcd(m, n) != 1:
        raise ValueError(f"gcd(m, n) = 1 violated (gcd({m}, {n}) = {gcd(m, n)})")
    if (m + n) % 2 == 0:
        raise ValueError(f"m + n odd violated (m + n = {m + n})")


def _pyth_ok(m, n):
    return m > n >= 1 and (m + n) % 2 == 1 and gcd(m, n) == 1


@dataclass(frozen=True)
class F3Params:
    k: int
    L: int
    delta: int

    def __post_init__(self):
        k, L, delta = self.k, self.L, self.delta
        if min(k, L, delta) < 1:
            raise ValueError(f"k, L, delta must be positive, got {(k, L, delta)}")
        if gcd(k, L) != 1:
            raise ValueError(f"gcd(k, L) = 1 violated (gcd({k}, {L}) = {gcd(k, L)})")
        if not abs(k * k - 2 * L * L) > k * L:
            raise ValueError(f"|k^2 - 2L^2| > kL violated ({abs(k * k - 2 * L * L)} <= {k * L})")
        if delta * (k * k + 2 * L * L) % 2:
            raise ValueError("delta * (k^2 + 2L^2) even violated")


@dataclass(frozen=True)
class F4Candidate:
    """Odd parts and exponents of a two-integral-median scalene triangle.

    Sides are ``(2**e1 * a, 2**e1 * b, 2**e3 * c)``; the medians on the
    first two sides are ``M * 2**(e1 - 1)`` and ``N * 2**(e1 - 1)``.
    """

    a: int
    b: int
    c: int
    e1: int
    e3: int
    M: int
    N: int

    def __post_init__(self):
        reason = f4_rejection_reason(self.a, self.b, self.c, self.e1, self.e3)
        if reason is not None:
            raise ValueError(reason)
        m2, n2 = f4_square_terms(self.a, self.b, self.c, self.e1, self.e3)
        if self.M * self.M != m2 or self.N * self.N != n2:
            raise ValueError("M, N do not match the square conditions")

    @property
    def sides(self) -> tuple[int, int, int]:
        return (self.a << self.e1, self.b << self.e1, self.c << self.e3)


@dataclass(frozen=True)
class FamilyHit:
    """One generated triangle.

    ``claimed_medians`` pairs a side label (``"a"``, ``"b"``, ``"c"`` of
    ``triangle``) with the integral median length the family predicts.
    """

    triangle: Triangle
    claimed_medians: tuple[tuple[str, int], ...]
    family: str
    params: tuple[int, ...]

    def verify(self) -> bool:
        statuses = dict(zip(SIDE_LABELS, analyze_medians(self.triangle).statuses))
        return all(
            statuses[label].is_integral and statuses[label].twice_mu == 2 * mu
            for label, mu in self.claimed_medians
        )


def _emit(hit: FamilyHit) -> FamilyHit:
    if not hit.verify():
        raise AssertionError(f"generator produced a hit that fails re-verification: {hit}")
    return hit


def _fits(sides, max_side):
    return max_side is None or max(sides) <= max_side


# --- Pythagorean triangles and F1 -----------------------------------------

def pythagorean(p: PythParams) -> Triangle:
    """Right triangle ``(2*d*m*n, d*(m*m - n*n), d*(m*m + n*n))``."""
    if not isinstance(p, PythParams):
        p = PythParams(*p)
    m, n, d = p.m, p.n, p.delta
    return Triangle(2 * d * m * n, d * (m * m - n * n), d * (m * m + n * n))


def f1_hit(m: int, n: int, delta: int) -> FamilyHit | None:
    if not _pyth_ok(m, n) or delta < 2 or delta % 2:
        return None
    t = pythagorean(PythParams(m, n, delta))
    return _emit(FamilyHit(t, (("c", t.side_c // 2),), F1, (m, n, delta)))


def gen_f1(m_max: int, n_max: int | None = None, delta_max: int = 2, *,
           max_side: int | None = None) -> Iterator[FamilyHit]:
    n_max = m_max - 1 if n_max is None else n_max
    for m in range(2, m_max + 1):
        for n in range(1, min(n_max, m - 1) + 1):
            if not _pyth_ok(m, n):
                continue
            for delta in range(2, delta_max + 1, 2):
                if max_side is not None and delta * (m * m + n * n) > max_side:
                    break
                yield f1_hit(m, n, delta)


# --- F2: isosceles with integral base median --------------------------------

def f2_hit(sub: str, m: int, n: int, delta: int) -> FamilyHit | None:
    """Hit of subfamily ``"a"`` or ``"b"``, or None for invalid parameters."""
    if not _pyth_ok(m, n) or delta < 1:
        return None
    leg = delta * (m * m + n * n)
    if sub == "a":
        base, mu = 4 * delta * m * n, delta * (m * m - n * n)
    elif sub == "b":
        base, mu = 2 * delta * (m * m - n * n), 2 * delta * m * n
    else:
        raise ValueError(f"unknown F2 subfamily {sub!r}")
    family = F2A if sub == "a" else F2B
    return _emit(FamilyHit(Triangle(base, leg, leg), (("a", mu),), family, (m, n, delta)))


def gen_f2(m_max: int, n_max: int | None = None, delta_max: int = 1, *,
           subfamilies: Iterable[str] = ("a", "b"),
           max_side: int | None = None) -> Iterator[FamilyHit]:
    """Both subfamilies by default; all of ``a`` precedes all of ``b``."""
    n_max = m_max - 1 if n_max is None else n_max
    for sub in subfamilies:
        for m in range(2, m_max + 1):
            for n in range(1, min(n_max, m - 1) + 1):
                if not _pyth_ok(m, n):
                    continue
                for delta in range(1, delta_max + 1):
                    hit = f2_hit(sub, m, n, delta)
                    if not _fits(hit.triangle.sides, max_side):
                        break
                    yield hit


# --- x^2 + 2y^2 = z^2 and F3 --------------------------------------------------

def solve_x2_2y2_z2(k: int, L: int, delta: int = 1) -> tuple[int, int, int]:
    """Solution ``(x, y, z)`` of ``x**2 + 2*y**2 == z**2`` for coprime ``k, L``."""
    if min(k, L, delta) < 1:
        raise ValueError(f"k, L, delta must be positive, got {(k, L, delta)}")
    if gcd(k, L) != 1:
        raise ValueError(f"k and L must be coprime (gcd({k}, {L}) = {gcd(k, L)})")
    return (delta * abs(k * k - 2 * L * L), 2 * delta * k * L, delta * (k * k + 2 * L * L))


def f3_hit(k: int, L: int, delta: int) -> FamilyHit | None:
    try:
        F3Params(k, L, delta)
    except ValueError:
        return None
    leg, base, twice_mu = solve_x2_2y2_z2(k, L, delta)
    mu = twice_mu // 2
    hit = _emit(FamilyHit(Triangle(base, leg, leg), (("b", mu), ("c", mu)), F3, (k, L, delta)))
    if analyze_medians(hit.triangle).status_a.is_integral:
        log.warning("F3 point %s: base median is integral too (%s)", (k, L, delta), hit.triangle)
    return hit


def gen_f3(k_max: int, l_max: int, delta_max: int = 2, *,
           max_side: int | None = None) -> Iterator[FamilyHit]:
    for k in range(1, k_max + 1):
        for L in range(1, l_max + 1):
            if max_side is not None and 2 * k * L > max_side:
                break
            for delta in range(1, delta_max + 1):
                hit = f3_hit(k, L, delta)
                if hit is None:
                    continue
                if not _fits(hit.triangle.sides, max_side):
                    break
                yield hit


# --- F4: scalene with two integral medians ----------------------------------

def f4_square_terms(a: int, b: int, c: int, e1: int, e3: int) -> tuple[int, int]:
    """The two quantities that must be odd squares ``M**2`` and ``N**2``."""
    tail = (c * c) << (2 * (e3 - e1) + 1)
    return 2 * b * b - a * a + tail, 2 * a * a - b * b + tail


def f4_rejection_reason(a: int, b: int, c: int, e1: int, e3: int) -> str | None:
    """Why ``(a, b, c, e1, e3)`` is not an F4 point, or None if it is."""
    for name, v in (("a", a), ("b", b), ("c", c)):
        if v < 1 or v % 2 == 0:
            return f"{name} must be an odd positive integer (got {v})"
    if e1 < 1:
        return f"e1 >= 1 violated (e1={e1})"
    if not e1 < e3:
        return f"e1 < e3 violated (e1={e1}, e3={e3})"
    m2, n2 = f4_square_terms(a, b, c, e1, e3)
    for name, s in (("M^2", m2), ("N^2", n2)):
        if s <= 0:
            return f"{name} = {s} is not positive"
        if isqrt(s) ** 2 != s:
            return f"{name} = {s} is not a perfect square"
    x, y, z = a << e1, b << e1, c << e3
    if not (x + y > z and y + z > x and z + x > y):
        return f"implied sides {(x, y, z)} fail the strict triangle inequality"
    if x == y:
        return f"implied sides {(x, y, z)} have alpha == beta"
    if max(x, y, z) > MAX_SIDE:
        return f"implied sides {(x, y, z)} exceed the side cap"
    return None


def f4_hit(a: int, b: int, c: int, e1: int, e3: int) -> FamilyHit | None:
    if f4_rejection_reason(a, b, c, e1, e3) is not None:
        return None
    m2, n2 = f4_square_terms(a, b, c, e1, e3)
    cand = F4Candidate(a, b, c, e1, e3, isqrt(m2), isqrt(n2))
    scale = 1 << (e1 - 1)
    t = Triangle(*cand.sides)
    return _emit(FamilyHit(t, (("a", cand.M * scale), ("b", cand.N * scale)), F4,
                           (a, b, c, e1, e3)))


def gen_f4(odd_max: int, e_max: int, *, max_side: int | None = None,
           on_reject: Callable[[tuple[int, ...], str], None] | None = None,
           ) -> Iterator[FamilyHit]:
    """Search odd ``a, b, c <= odd_max`` and ``1 <= e1 < e3 <= e_max``.

    Hits are yielded in lexicographic order of ``(a, b, c, e1, e3)``.
    ``on_reject`` receives points where both square conditions hold but the
    triangle is degenerate or has ``alpha == beta``.
    """
    points = []
    for e1 in range(1, e_max):
        for e3 in range(e1 + 1, e_max + 1):
            ab_max, c_max = odd_max, odd_max
            if max_side is not None:
                ab_max, c_max = min(ab_max, max_side >> e1), min(c_max, max_side >> e3)
            if ab_max < 1 or c_max < 1:
                continue
            points.extend(_f4_square_points(ab_max, c_max, e1, e3))
    points.sort()
    for p in points:
        reason = f4_rejection_reason(*p)
        if reason is None:
            hit = f4_hit(*p)
            if _fits(hit.triangle.sides, max_side):
                yield hit
        elif on_reject is not None:
            on_reject(p, reason)


def _f4_square_points(ab_max, c_max, e1, e3):
    """All odd (a, b, c) in range where both square terms are positive squares."""
    odd_ab = np.arange(1, ab_max + 1, 2, dtype=np.int64)
    shift = 2 * (e3 - e1) + 1
    out = []
    # quantities reach 2*ab_max**2 + 2**shift * c_max**2; fall back to Python ints past int64
    if 2 * ab_max**2 + (c_max**2 << shift) >= 2**62:
        for a in range(1, ab_max + 1, 2):
            for b in range(1, ab_max + 1, 2):
                for c in range(1, c_max + 1, 2):
                    m2, n2 = f4_square_terms(a, b, c, e1, e3)
                    if m2 > 0 and n2 > 0 and isqrt(m2) ** 2 == m2 and isqrt(n2) ** 2 == n2:
                        out.append((a, b, c, e1, e3))
        return out
    A, B = np.meshgrid(odd_ab, odd_ab, indexing="ij")
    A, B = A.ravel(), B.ravel()
    base_m = 2 * B * B - A * A
    base_n = 2 * A * A - B * B
    for c in range(1, c_max + 1, 2):
        tail = (c * c) << shift
        m2 = base_m + tail
        n2 = base_n + tail
        ok = (m2 > 0) & (n2 > 0)
        idx = np.flatnonzero(ok)
        if idx.size == 0:
            continue
        rm = isqrt_array(m2[idx])
        rn = isqrt_array(n2[idx])
        good = idx[(rm * rm == m2[idx]) & (rn * rn == n2[idx])]
        out.extend((int(A[i]), int(B[i]), c, e1, e3) for i in good)
    return out


# --- deduplication -----------------------------------------------------------

@dataclass
class DedupedHit:
    """All hits that reach the same canonical triangle."""

    triangle: Triangle
    hits: list[FamilyHit] = field(default_factory=list)

    @property
    def sources(self) -> list[tuple[str, tuple[int, ...]]]:
        return [(h.family, h.params) for h in self.hits]


def dedup_hits(hits: Iterable[FamilyHit]) -> list[DedupedHit]:
    """Collapse hits by canonical triangle, in order of first appearance."""
    groups: dict[Triangle, DedupedHit] = {}
    for hit in hits:
        key = canonicalize(hit.triangle)[0]
        groups.setdefault(key, DedupedHit(key)).hits.append(hit)
    return list(groups.values())


def generate(family: str, **bounds) -> Iterator[FamilyHit]:
    """Dispatch by family name (``F1``, ``F2``, ``F2a``, ``F2b``, ``F3``, ``F4``)."""
    key = family.upper()
    if key == "F1":
        return gen_f1(**bounds)
    if key in ("F2", "F2A", "F2B"):
        subs = {"F2": ("a", "b"), "F2A": ("a",), "F2B": ("b",)}[key]
        return gen_f2(subfamilies=subs, **bounds)
    if key == "F3":
        return gen_f3(**bounds)
    if key == "F4":
        return gen_f4(**bounds)
    raise ValueError(f"unknown family {family!r}")
