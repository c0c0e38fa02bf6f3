"""Exhaustive enumeration of integer triangles and median classification.

Triangles are enumerated canonically (``a <= b <= c``) in ``(c, b, a)``
order.  Bulk work runs on numpy blocks, one block per largest side ``c``;
parallel runs split the ``c`` range among processes and merge blocks back
in ``c`` order, so the output never depends on the worker count.
"""

from __future__ import annotations

import hashlib
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Iterator

import numpy as np

from . import families as fam
from ._vec import square_root_or_minus_one
from .core import (
    HALF,
    INT,
    IRR,
    MAX_SIDE,
    SIDE_LABELS,
    MedianStatus,
    Triangle,
    analyze_medians,
    canonicalize,
    is_perfect_square,
    isqrt,
    two_adic,
)

log = logging.getLogger(__name__)

PYTHAGOREAN = "pythagorean"
ISOSCELES = "isosceles"
EQUILATERAL = "equilateral"
F4_FORM = "F4-form"
TAG_ORDER = (PYTHAGOREAN, ISOSCELES, EQUILATERAL, "F1", "F2", "F3", F4_FORM)

SCALENE_ONLY = "scalene"
ISOSCELES_ONLY = "isosceles"


def _check_bound(max_side):
    if not isinstance(max_side, int) or not 1 <= max_side <= MAX_SIDE:
        raise ValueError(f"max_side must be an integer in 1..{MAX_SIDE}, got {max_side!r}")


def enumerate_triangles(max_side: int) -> Iterator[Triangle]:
    """Every canonical triangle with sides <= ``max_side``, ordered by (c, b, a)."""
    _check_bound(max_side)
    for c in range(1, max_side + 1):
        for b in range((c + 2) // 2, c + 1):
            for a in range(c - b + 1, b + 1):
                yield Triangle(a, b, c)


def count_triangles(max_side: int) -> int:
    """Closed-form-free count, summed per largest side."""
    total = 0
    for c in range(1, max_side + 1):
        for b in range((c + 2) // 2, c + 1):
            total += 2 * b - c
    return total


# --- numpy blocks ------------------------------------------------------------

# status codes used inside arrays
_IRR, _HALF, _INT = 0, 1, 2
_CODE_TO_KIND = {_IRR: IRR, _HALF: HALF, _INT: INT}


@dataclass
class Block:
    """All canonical triangles with one largest side ``c`` (arrays aligned)."""

    c: int
    a: np.ndarray
    b: np.ndarray
    quads: np.ndarray  # shape (3, n)
    twice_mu: np.ndarray  # shape (3, n); -1 when irrational

    @property
    def size(self) -> int:
        return self.a.size

    @property
    def codes(self) -> np.ndarray:
        return np.where(self.twice_mu < 0, _IRR, np.where(self.twice_mu % 2 == 0, _INT, _HALF))

    @property
    def integral_count(self) -> np.ndarray:
        t = self.twice_mu
        return ((t >= 0) & (t % 2 == 0)).sum(axis=0)

    def digest(self) -> bytes:
        h = hashlib.sha256()
        h.update(np.int64(self.c).tobytes())
        for arr in (self.a, self.b, self.quads, self.twice_mu):
            h.update(np.ascontiguousarray(arr, dtype="<i8").tobytes())
        return h.digest()


def block_for(c: int) -> Block:
    b_lo = (c + 2) // 2
    bs = np.arange(b_lo, c + 1, dtype=np.int64)
    lengths = 2 * bs - c
    b = np.repeat(bs, lengths)
    # a runs from c - b + 1 up to b within each b group
    starts = np.cumsum(lengths) - lengths
    offset = np.arange(b.size, dtype=np.int64) - np.repeat(starts, lengths)
    a = c - b + 1 + offset
    a2, b2, c2 = a * a, b * b, c * c
    quads = np.stack([2 * (b2 + c2) - a2, 2 * (a2 + c2) - b2, 2 * (a2 + b2) - c2])
    return Block(c, a, b, quads, square_root_or_minus_one(quads))


def _blocks_for_range(c_lo: int, c_hi: int) -> list[Block]:
    return [block_for(c) for c in range(c_lo, c_hi + 1)]


def partition_c_range(max_side: int, parts: int) -> list[tuple[int, int]]:
    """Split ``1..max_side`` into contiguous ranges of roughly equal work (~c**2)."""
    parts = max(1, min(parts, max_side))
    work = np.cumsum(np.arange(1, max_side + 1, dtype=np.float64) ** 2)
    cuts = np.searchsorted(work, work[-1] * np.arange(1, parts) / parts) + 1
    bounds = [1, *sorted(set(int(x) + 1 for x in cuts if 0 < x < max_side)), max_side + 1]
    return [(lo, hi - 1) for lo, hi in zip(bounds, bounds[1:]) if lo <= hi - 1]


def _chunk_worker(args):
    c_lo, c_hi, min_count, summary_only = args
    out = []
    for c in range(c_lo, c_hi + 1):
        blk = block_for(c)
        if summary_only:
            out.append((c, blk.size, np.bincount(blk.integral_count, minlength=4), blk.digest()))
        else:
            keep = blk.integral_count >= min_count
            out.append(_select(blk, keep))
    return out


def _select(blk: Block, keep: np.ndarray):
    return (blk.c, blk.a[keep], blk.b[keep], blk.quads[:, keep], blk.twice_mu[:, keep])


def _map_chunks(max_side, workers, min_count, summary_only):
    # several chunks per worker keeps processes busy while preserving order
    ranges = partition_c_range(max_side, max(1, workers) * 4 if workers > 1 else 1)
    jobs = [(lo, hi, min_count, summary_only) for lo, hi in ranges]
    if workers <= 1:
        for job in jobs:
            yield from _chunk_worker(job)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_chunk_worker, jobs):
            yield from part


# --- records -------------------------------------------------------------------

@dataclass(frozen=True)
class SearchRecord:
    triangle: Triangle
    quads: tuple[int, int, int]
    statuses: tuple[MedianStatus, MedianStatus, MedianStatus]
    integral_count: int
    tags: tuple[str, ...] = field(default=())

    @classmethod
    def from_triangle(cls, t: Triangle, canonical: bool = True) -> SearchRecord:
        if canonical:
            t = canonicalize(t)[0]
        an = analyze_medians(t)
        return cls(t, an.quads, an.statuses, an.integral_count, classify(t, an))

    def mus(self) -> tuple[str, str, str]:
        return tuple(s.format_mu() for s in self.statuses)

    def to_dict(self) -> dict:
        a, b, c = self.triangle.sides
        qa, qb, qc = self.quads
        sa, sb, sc = self.statuses
        return {
            "a": a, "b": b, "c": c,
            "quad_a": qa, "quad_b": qb, "quad_c": qc,
            "status_a": sa.kind, "status_b": sb.kind, "status_c": sc.kind,
            "twice_mu_a": sa.twice_mu, "twice_mu_b": sb.twice_mu, "twice_mu_c": sc.twice_mu,
            "integral_count": self.integral_count,
            "tags": list(self.tags),
        }

    @classmethod
    def from_dict(cls, d: dict) -> SearchRecord:
        def _opt(v):
            return None if v in (None, "") else int(v)

        tags = d["tags"]
        if isinstance(tags, str):
            tags = [x for x in tags.split(";") if x]
        statuses = tuple(
            MedianStatus(d[f"status_{s}"], _opt(d[f"twice_mu_{s}"])) for s in SIDE_LABELS
        )
        return cls(
            Triangle(int(d["a"]), int(d["b"]), int(d["c"])),
            tuple(int(d[f"quad_{s}"]) for s in SIDE_LABELS),
            statuses,
            int(d["integral_count"]),
            tuple(tags),
        )


def _records_from_selection(sel) -> Iterator[SearchRecord]:
    c, a_arr, b_arr, quads, twice = sel
    for i in range(a_arr.size):
        t = Triangle(int(a_arr[i]), int(b_arr[i]), c)
        statuses = tuple(_status(int(twice[j, i])) for j in range(3))
        count = sum(s.is_integral for s in statuses)
        q = (int(quads[0, i]), int(quads[1, i]), int(quads[2, i]))
        yield SearchRecord(t, q, statuses, count, _tags(t, statuses))


def _status(twice_mu: int) -> MedianStatus:
    if twice_mu < 0:
        return MedianStatus(IRR)
    return MedianStatus(INT if twice_mu % 2 == 0 else HALF, twice_mu)


def _passes(t: Triangle, filters) -> bool:
    if not filters:
        return True
    if SCALENE_ONLY in filters and not t.is_scalene():
        return False
    if ISOSCELES_ONLY in filters and not t.is_isosceles():
        return False
    return True


def search_integral_medians(max_side: int, min_count: int = 1, filters: Iterable[str] = (),
                            workers: int = 1) -> Iterator[SearchRecord]:
    """Records for canonical triangles with at least ``min_count`` integral medians.

    ``filters`` may contain ``"scalene"`` or ``"isosceles"``.
    """
    _check_bound(max_side)
    if not 0 <= min_count <= 3:
        raise ValueError(f"min_count must be in 0..3, got {min_count}")
    filters = set(filters)
    unknown = filters - {SCALENE_ONLY, ISOSCELES_ONLY}
    if unknown:
        raise ValueError(f"unknown filters {sorted(unknown)}")
    for sel in _map_chunks(max_side, workers, min_count, summary_only=False):
        for rec in _records_from_selection(sel):
            if _passes(rec.triangle, filters):
                yield rec


@dataclass
class Census:
    """Summary of a full enumeration and median analysis."""

    max_side: int
    triangles: int
    by_integral_count: tuple[int, int, int, int]
    digest: str

    def lines(self) -> list[str]:
        return [
            f"max_side={self.max_side}",
            f"triangles={self.triangles}",
            *(f"integral_count_{i}={n}" for i, n in enumerate(self.by_integral_count)),
            f"sha256={self.digest}",
        ]


def median_census(max_side: int, workers: int = 1) -> Census:
    """Analyze every triangle up to ``max_side``; the digest covers all quads and statuses."""
    _check_bound(max_side)
    h = hashlib.sha256()
    total = 0
    hist = np.zeros(4, dtype=np.int64)
    for c, size, counts, digest in _map_chunks(max_side, workers, 0, summary_only=True):
        h.update(digest)
        total += size
        hist += counts
    return Census(max_side, total, tuple(int(x) for x in hist), h.hexdigest())


# --- classification --------------------------------------------------------------

def _tags(t: Triangle, statuses) -> tuple[str, ...]:
    tags = set()
    a, b, c = t.sides
    integral = [s.is_integral for s in statuses]
    srt = sorted(t.sides)
    if srt[0] ** 2 + srt[1] ** 2 == srt[2] ** 2:
        tags.add(PYTHAGOREAN)
        hyp = max(range(3), key=lambda i: t.sides[i])
        if srt[2] % 2 == 0 and integral[hyp]:
            tags.add("F1")
    if t.is_isosceles():
        tags.add(ISOSCELES)
    if t.is_equilateral():
        tags.add(EQUILATERAL)
    else:
        split = _isosceles_split(t)
        if split is not None:
            base, legs = split
            if integral[base]:
                tags.add("F2")
            if all(integral[i] for i in legs):
                tags.add("F3")
    if t.is_scalene() and _f4_pairs(t.sides, integral):
        tags.add(F4_FORM)
    return tuple(x for x in TAG_ORDER if x in tags)


def _isosceles_split(t: Triangle):
    """(base index, leg indices) of a non-equilateral isosceles triangle."""
    s = t.sides
    for base in range(3):
        legs = [i for i in range(3) if i != base]
        if s[legs[0]] == s[legs[1]] != s[base]:
            return base, legs
    return None


def _f4_pairs(sides, integral) -> list[tuple[int, int, int]]:
    """Index triples (i, j, k): integral medians on i, j with v2(i) = v2(j) < v2(k)."""
    v = [two_adic(x).valuation for x in sides]
    out = []
    for i in range(3):
        for j in range(3):
            if i == j or not (integral[i] and integral[j]):
                continue
            k = 3 - i - j
            if v[i] == v[j] < v[k] and sides[i] < sides[j]:
                out.append((i, j, k))
    return out


def classify(t: Triangle, analysis=None) -> tuple[str, ...]:
    """Tags derivable from the triangle alone, in a fixed order."""
    if not isinstance(t, Triangle):
        t = Triangle.of(t)
    an = analysis or analyze_medians(t)
    return _tags(t, an.statuses)


# --- witnesses ---------------------------------------------------------------------

def _primitive_pythagorean_params(leg_even, leg_odd, hyp):
    """(m, n) with 2mn = leg_even, m^2 - n^2 = leg_odd, m^2 + n^2 = hyp, or None."""
    m2, n2 = (hyp + leg_odd), (hyp - leg_odd)
    if m2 % 2 or n2 % 2:
        return None
    m, n = isqrt(m2 // 2), isqrt(n2 // 2)
    if m * m * 2 != m2 or n * n * 2 != n2 or 2 * m * n != leg_even:
        return None
    return (m, n)


def _pythagorean_witness(x, y, h):
    """(m, n, delta, x_is_even_leg) for the right triangle with legs x, y."""
    g = gcd(gcd(x, y), h)
    px, py, ph = x // g, y // g, h // g
    if px % 2 == 0:
        mn = _primitive_pythagorean_params(px, py, ph)
        return None if mn is None else (*mn, g, True)
    mn = _primitive_pythagorean_params(py, px, ph)
    return None if mn is None else (*mn, g, False)


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def family_witnesses(t: Triangle) -> dict[str, list[tuple[int, ...]]]:
    """Generator parameter points that produce ``t`` (up to side order).

    Keys are family names; F2 points are listed under ``F2a``/``F2b``.
    """
    if not isinstance(t, Triangle):
        t = Triangle.of(t)
    canon = canonicalize(t)[0]
    an = analyze_medians(canon)
    s = canon.sides
    out: dict[str, list[tuple[int, ...]]] = {}

    if s[0] ** 2 + s[1] ** 2 == s[2] ** 2 and s[2] % 2 == 0:
        w = _pythagorean_witness(s[0], s[1], s[2])
        if w is not None:
            out[fam.F1] = [w[:3]]

    split = None if canon.is_equilateral() else _isosceles_split(canon)
    if split is not None:
        base_i, legs = split
        base, leg = s[base_i], s[legs[0]]
        st = an.statuses[base_i]
        if st.is_integral and base % 2 == 0:
            mu = st.twice_mu // 2
            w = _pythagorean_witness(base // 2, mu, leg)
            if w is not None:
                m, n, d, half_base_even = w
                key = fam.F2A if half_base_even else fam.F2B
                out[key] = [(m, n, d)]
        if all(an.statuses[i].is_integral for i in legs) and base % 2 == 0:
            pts = []
            half = base // 2
            for d in _divisors(half):
                kl = half // d
                for k in _divisors(kl):
                    L = kl // k
                    hit = fam.f3_hit(k, L, d)
                    if hit is not None and canonicalize(hit.triangle)[0] == canon:
                        pts.append((k, L, d))
            if pts:
                out[fam.F3] = sorted(pts)

    if canon.is_scalene():
        integral = [x.is_integral for x in an.statuses]
        pts = []
        for i, j, k in _f4_pairs(s, integral):
            for x, y in ((i, j), (j, i)):
                ex, ez = two_adic(s[x]), two_adic(s[k])
                p = (ex.odd_part, two_adic(s[y]).odd_part, ez.odd_part, ex.valuation, ez.valuation)
                if fam.f4_hit(*p) is not None:
                    pts.append(p)
        if pts:
            out[fam.F4] = sorted(pts)
    return out


# --- coverage ----------------------------------------------------------------------

@dataclass
class FamilyCoverage:
    family: str
    brute_force: list[Triangle]
    generated: list[Triangle]
    missing: list[Triangle]
    extra: list[Triangle]

    def summary(self) -> str:
        return (f"{self.family}: brute_force={len(self.brute_force)} generated={len(self.generated)} "
                f"missing={len(self.missing)} extra={len(self.extra)}")


@dataclass
class CoverageReport:
    bound: int
    families: dict[str, FamilyCoverage]
    warnings: list[str] = field(default_factory=list)


def safe_bounds(family: str, max_side: int) -> dict:
    """Generator bounds reaching every family member with sides <= ``max_side``.

    Each side formula grows monotonically in every parameter, so a parameter
    may stop once the smallest side it can produce already exceeds the bound.
    """
    key = family.upper()
    if key == "F1":
        # hypotenuse delta*(m^2 + n^2) with delta >= 2, n >= 1
        m_max = max(2, isqrt(max(0, max_side // 2 - 1)))
        return dict(m_max=m_max, n_max=m_max - 1, delta_max=max_side // 5)
    if key in ("F2", "F2A", "F2B"):
        # legs delta*(m^2 + n^2) >= m^2 + 1
        m_max = max(2, isqrt(max(0, max_side - 1)))
        return dict(m_max=m_max, n_max=m_max - 1, delta_max=max_side // 5)
    if key == "F3":
        # base 2*delta*k*L <= max_side
        return dict(k_max=max(1, max_side // 2), l_max=max(1, max_side // 2),
                    delta_max=max(1, max_side // 2))
    if key == "F4":
        # a, b <= max_side / 2**e1, c <= max_side / 2**e3, 2**e3 <= max_side
        return dict(odd_max=max(1, max_side // 2), e_max=max(2, max_side.bit_length() - 1))
    raise ValueError(f"unknown family {family!r}")


def _is_brute_member(family: str, rec: SearchRecord) -> bool:
    t = rec.triangle
    integral = [s.is_integral for s in rec.statuses]
    if family == "F1":
        return PYTHAGOREAN in rec.tags and t.side_c % 2 == 0
    if family in ("F2", "F3"):
        split = None if t.is_equilateral() else _isosceles_split(t)
        if split is None:
            return False
        base, legs = split
        if family == "F2":
            return integral[base]
        return all(integral[i] for i in legs)
    if family == "F4":
        return t.is_scalene() and sum(integral) >= 2
    raise ValueError(family)


def _bounds_warnings(family, bounds, safe):
    warnings = []
    for key, needed in safe.items():
        given = bounds.get(key)
        if given is not None and given < needed:
            warnings.append(f"{family}: {key}={given} is below {needed}; generated set may be incomplete")
    return warnings


def coverage_report(max_side: int, families: Iterable[str] = ("F1", "F2", "F3", "F4"),
                    bounds: dict[str, dict] | None = None, workers: int = 1) -> CoverageReport:
    """Compare brute-force family members with generator output up to ``max_side``.

    ``missing`` lists brute-force members the generator never produced;
    ``extra`` lists generated triangles absent from the brute-force set.
    """
    _check_bound(max_side)
    families = [f.upper() for f in families]
    bounds = {k.upper(): v for k, v in (bounds or {}).items()}
    min_count = 1
    records = list(search_integral_medians(max_side, min_count, workers=workers))
    report = CoverageReport(max_side, {})
    for family in families:
        brute = sorted({r.triangle for r in records if _is_brute_member(family, r)},
                       key=_canon_key)
        safe = safe_bounds(family, max_side)
        use = bounds.get(family, safe)
        report.warnings.extend(_bounds_warnings(family, use, safe))
        hits = fam.generate(family, max_side=max_side, **use)
        gen = sorted((d.triangle for d in fam.dedup_hits(hits)), key=_canon_key)
        brute_set, gen_set = set(brute), set(gen)
        report.families[family] = FamilyCoverage(
            family, brute, gen,
            missing=[t for t in brute if t not in gen_set],
            extra=[t for t in gen if t not in brute_set],
        )
    return report


def _canon_key(t: Triangle):
    a, b, c = t.sides
    return (c, b, a)


# --- empirical checks ------------------------------------------------------------

def pythagorean_leg_median_check(max_side: int = 200) -> tuple[int, list[SearchRecord]]:
    """Right triangles up to ``max_side`` whose leg medians are not both irrational.

    Returns ``(number of right triangles examined, violations)``.
    """
    _check_bound(max_side)
    examined, violations = 0, []
    m = 2
    while m * m + 1 <= max_side:
        for n in range(1, m):
            if not fam._pyth_ok(m, n):
                continue
            d = 1
            while d * (m * m + n * n) <= max_side:
                t = canonicalize(fam.pythagorean(fam.PythParams(m, n, d)))[0]
                examined += 1
                rec = SearchRecord.from_triangle(t)
                if rec.statuses[0].kind != IRR or rec.statuses[1].kind != IRR:
                    violations.append(rec)
                d += 1
        m += 1
    return examined, violations


def pythagorean_triangles_bruteforce(max_side: int) -> list[Triangle]:
    """Right triangles by direct search; independent of the parametrization."""
    out = []
    for c in range(1, max_side + 1):
        for b in range(1, c):
            a2 = c * c - b * b
            if a2 <= b * b and is_perfect_square(a2):
                out.append(Triangle(isqrt(a2), b, c))
    return out
