"""The 2-adic conditions on ``4k^2 = 2(n2^2 + n3^2) - n1^2`` and the three-median experiment.

The conditions under test: writing ``k = 2**m * M``, ``n1 = 2**e1 * a``,
``n2 = 2**e2 * b``, ``n3 = 2**e3 * c`` with odd ``M, a, b, c``, either

* branch A: ``e1 == e2 < e3``, ``m == e1 - 1`` and
  ``M**2 == 2*b**2 - a**2 + 2**(2*(e3 - e1) + 1) * c**2``, or
* branch B: the same with the roles of ``(e2, b)`` and ``(e3, c)`` swapped.

The claim that every solution satisfies one branch is measured here, not
assumed: failures are returned as data.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import TwoAdic, Triangle, isqrt, two_adic
from .search import _check_bound, search_integral_medians

BRANCH_A = "A"
BRANCH_B = "B"


def check_prop1_equation(k: int, n1: int, n2: int, n3: int) -> bool:
    """True iff ``4*k**2 == 2*(n2**2 + n3**2) - n1**2``."""
    return 4 * k * k == 2 * (n2 * n2 + n3 * n3) - n1 * n1


@dataclass(frozen=True)
class Prop1Instance:
    k: int
    n1: int
    n2: int
    n3: int

    def __post_init__(self):
        if min(self.k, self.n1, self.n2, self.n3) < 1:
            raise ValueError(f"all of k, n1, n2, n3 must be positive: {self.as_tuple()}")
        if not check_prop1_equation(*self.as_tuple()):
            raise ValueError(f"{self.as_tuple()} does not satisfy 4k^2 = 2(n2^2 + n3^2) - n1^2")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.k, self.n1, self.n2, self.n3)


@dataclass(frozen=True)
class Prop1Report:
    instance: Prop1Instance
    decompositions: tuple[TwoAdic, TwoAdic, TwoAdic, TwoAdic]
    branch: str | None
    branches_holding: tuple[str, ...]
    conditions_hold: bool
    violated_details: str
    precondition_flags: tuple[str, ...] = field(default=())

    @property
    def valuations(self) -> tuple[int, int, int, int]:
        return tuple(d.valuation for d in self.decompositions)

    @property
    def odd_parts(self) -> tuple[int, int, int, int]:
        return tuple(d.odd_part for d in self.decompositions)


def _branch_failure(m, M, e1, a, e_eq, b_eq, e_big, c_big, names):
    """None if the branch holds, else a description of the first failed clause."""
    eq, big = names
    if e1 != e_eq:
        return f"e1 = {eq} failed ({e1} != {e_eq})"
    if not e_eq < e_big:
        return f"{eq} < {big} failed ({e_eq} >= {e_big})"
    if m != e1 - 1:
        return f"m = e1 - 1 failed (m={m}, e1={e1})"
    rhs = 2 * b_eq * b_eq - a * a + (c_big * c_big << (2 * (e_big - e1) + 1))
    if M * M != rhs:
        return f"M^2 = {M * M} but the condition gives {rhs}"
    return None


def check_prop1_conditions(inst) -> Prop1Report:
    """Decompose ``k, n1, n2, n3`` and test both branches exactly.

    Raises ValueError when the equation itself does not hold.
    """
    if not isinstance(inst, Prop1Instance):
        inst = Prop1Instance(*inst)
    dk, d1, d2, d3 = (two_adic(x) for x in inst.as_tuple())
    m, M = dk
    e1, a = d1
    e2, b = d2
    e3, c = d3
    fail_a = _branch_failure(m, M, e1, a, e2, b, e3, c, ("e2", "e3"))
    fail_b = _branch_failure(m, M, e1, a, e3, c, e2, b, ("e3", "e2"))
    holding = tuple(name for name, f in ((BRANCH_A, fail_a), (BRANCH_B, fail_b)) if f is None)
    flags = tuple(f"{name} = 0 (exponents are stated as positive)"
                  for name, e in (("e1", e1), ("e2", e2), ("e3", e3)) if e == 0)
    if holding:
        details = ""
    else:
        details = f"branch A: {fail_a}; branch B: {fail_b}"
    return Prop1Report(
        inst, (dk, d1, d2, d3),
        holding[0] if holding else None,
        holding,
        bool(holding),
        details,
        flags,
    )


def construct_from_conditions(a: int, b: int, c: int, e1: int, e3: int) -> Prop1Instance | None:
    """Build ``(k, n1, n2, n3)`` from odd parts and exponents when the square condition holds.

    Returns ``(M * 2**(e1-1), 2**e1 * a, 2**e1 * b, 2**e3 * c)`` where
    ``M**2 = 2*b**2 - a**2 + 2**(2*(e3-e1)+1) * c**2``, or None when that
    quantity is not a positive square.
    """
    for name, v in (("a", a), ("b", b), ("c", c)):
        if v < 1 or v % 2 == 0:
            raise ValueError(f"{name} must be an odd positive integer, got {v}")
    if not 1 <= e1 < e3:
        raise ValueError(f"need 1 <= e1 < e3, got e1={e1}, e3={e3}")
    s = 2 * b * b - a * a + (c * c << (2 * (e3 - e1) + 1))
    if s <= 0:
        return None
    M = isqrt(s)
    if M * M != s:
        return None
    return Prop1Instance(M << (e1 - 1), a << e1, b << e1, c << e3)


@dataclass
class NecessitySurvey:
    max_side: int
    holds: int
    fails: int
    failures: list[Prop1Report]
    flagged: int
    reports: list[Prop1Report] = field(default_factory=list, repr=False)

    @property
    def total(self) -> int:
        return self.holds + self.fails

    def summary(self) -> str:
        return (f"necessity survey up to max side {self.max_side}: {self.total} instances, "
                f"{self.holds} satisfy the 2-adic conditions, {self.fails} do not "
                f"({self.flagged} with a zero exponent)")


def instances_from_triangle(t: Triangle, statuses) -> list[Prop1Instance]:
    """One instance per integral median: (mu, its side, the other two sides)."""
    sides = t.sides
    out = []
    for i, st in enumerate(statuses):
        if st.is_integral:
            others = [sides[j] for j in range(3) if j != i]
            out.append(Prop1Instance(st.twice_mu // 2, sides[i], *others))
    return out


def prop1_necessity_survey(max_side: int, workers: int = 1) -> NecessitySurvey:
    """Run the branch checker on every integral median of every triangle up to ``max_side``."""
    _check_bound(max_side)
    holds = fails = flagged = 0
    failures, reports = [], []
    for rec in search_integral_medians(max_side, 1, workers=workers):
        for inst in instances_from_triangle(rec.triangle, rec.statuses):
            report = check_prop1_conditions(inst)
            reports.append(report)
            if report.precondition_flags:
                flagged += 1
            if report.conditions_hold:
                holds += 1
            else:
                fails += 1
                failures.append(report)
    return NecessitySurvey(max_side, holds, fails, failures, flagged, reports)


@dataclass(frozen=True)
class ThreeMedianFinding:
    triangle: Triangle
    medians: tuple[int, int, int]

    def recheck(self) -> bool:
        """Independent re-evaluation of ``4 mu^2 = 2(y^2 + z^2) - x^2`` for each side."""
        s = self.triangle.sides
        return all(
            4 * mu * mu == 2 * (s[(i + 1) % 3] ** 2 + s[(i + 2) % 3] ** 2) - s[i] ** 2
            for i, mu in enumerate(self.medians)
        )


def prop2_experiment(max_side: int, workers: int = 1) -> list[ThreeMedianFinding]:
    """Every canonical triangle up to ``max_side`` with three integral medians."""
    _check_bound(max_side)
    out = []
    for rec in search_integral_medians(max_side, 3, workers=workers):
        finding = ThreeMedianFinding(rec.triangle, tuple(s.twice_mu // 2 for s in rec.statuses))
        if not finding.recheck():
            raise AssertionError(f"finding {finding} fails direct re-evaluation")
        out.append(finding)
    return out


def prop2_verdict(findings: list[ThreeMedianFinding], max_side: int) -> str:
    """One-line outcome relative to the claim that no such triangle exists."""
    claim = "claim 'no integer-sided triangle has three integral medians'"
    if not findings:
        return f"{claim}: consistent, no counterexample with sides <= {max_side}"
    first = findings[0]
    return (f"{claim}: REFUTED, {len(findings)} counterexample(s) with sides <= {max_side}, "
            f"first {first.triangle.sides} with medians {first.medians}")
