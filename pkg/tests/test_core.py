import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from medtri.core import (
    MAX_SIDE,
    ArithmeticRangeError,
    DegenerateTriangleError,
    MedianStatus,
    Triangle,
    TwoAdic,
    analyze_medians,
    canonicalize,
    integral_median_count,
    is_perfect_square,
    isqrt,
    median_quad_squares,
    permute,
    two_adic,
)
from medtri._vec import isqrt_array, square_root_or_minus_one

from conftest import scan_root


def bisect_isqrt(n):
    lo, hi = 0, n + 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid * mid <= n:
            lo = mid
        else:
            hi = mid
    return lo


@st.composite
def triangles(draw, max_side=MAX_SIDE):
    a = draw(st.integers(1, max_side))
    b = draw(st.integers(1, max_side))
    lo, hi = abs(a - b) + 1, min(a + b - 1, max_side)
    c = draw(st.integers(lo, hi))
    return Triangle(a, b, c)


class TestIsqrt:
    @pytest.mark.parametrize("n, expected", [(0, 0), (99856, 316), (99855, 315), (1, 1), (3, 1)])
    def test_examples(self, n, expected):
        assert isqrt(n) == expected
        assert bisect_isqrt(n) == expected

    def test_negative(self):
        with pytest.raises(ValueError):
            isqrt(-1)

    @given(st.integers(0, 2**130))
    def test_floor_property(self, n):
        r = isqrt(n)
        assert r * r <= n < (r + 1) ** 2
        assert r == bisect_isqrt(n)

    @pytest.mark.parametrize("n, expected", [(25, True), (73, False), (676, True), (0, True), (2, False)])
    def test_perfect_square(self, n, expected):
        assert is_perfect_square(n) is expected
        assert (scan_root(n) is not None) is expected


class TestIsqrtArray:
    def test_matches_scalar_near_squares(self):
        rng = random.Random(3)
        roots = [rng.randrange(1, 3 * 10**9) for _ in range(2000)] + [2**31 - 1, 2**31, 3037000499]
        qs = []
        for r in roots:
            qs += [r * r - 1, r * r, r * r + 1]
        qs = [q for q in qs if 0 <= q < 2**63]
        got = isqrt_array(np.array(qs, dtype=np.int64))
        assert [int(x) for x in got] == [bisect_isqrt(q) for q in qs]

    def test_square_root_or_minus_one(self):
        q = np.array([0, 1, 2, 25, 26, 4 * 10**18], dtype=np.int64)
        assert square_root_or_minus_one(q).tolist() == [0, 1, -1, 5, -1, 2 * 10**9]


class TestTwoAdic:
    @pytest.mark.parametrize("n, expected", [(1, (0, 1)), (136, (3, 17)), (170, (1, 85)), (1024, (10, 1))])
    def test_examples(self, n, expected):
        assert two_adic(n) == TwoAdic(*expected)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            two_adic(0)

    def test_round_trip_first_million(self):
        for n in range(1, 10**6 + 1):
            e, odd = two_adic(n)
            assert odd & 1 and (odd << e) == n

    @given(st.integers(1, 2**200))
    def test_round_trip_large(self, n):
        d = two_adic(n)
        assert d.odd_part % 2 == 1 and d.value() == n

    def test_odd_square_residue(self):
        for x in range(-10**4 + 1, 10**4, 2):
            assert x * x % 8 == 1
            assert x * x % 4 == 1


class TestTriangle:
    @pytest.mark.parametrize("sides", [(1, 1, 2), (1, 2, 3), (3, 1, 1), (0, 1, 1), (-2, 3, 3)])
    def test_degenerate_rejected(self, sides):
        with pytest.raises(DegenerateTriangleError):
            Triangle(*sides)

    def test_cap(self):
        Triangle(MAX_SIDE, MAX_SIDE, MAX_SIDE)
        with pytest.raises(ArithmeticRangeError):
            Triangle(MAX_SIDE + 1, MAX_SIDE, MAX_SIDE)

    def test_non_integer(self):
        with pytest.raises(TypeError):
            Triangle(3.0, 4, 5)


class TestMedians:
    def test_quads_examples(self):
        assert median_quad_squares(Triangle(3, 4, 5)) == (73, 52, 25)
        assert median_quad_squares(Triangle(10, 24, 26))[2] == 676
        assert median_quad_squares(Triangle(2, 2, 2)) == (12, 12, 12)

    def test_analyze_examples(self):
        an = analyze_medians(Triangle(8, 5, 5))
        assert an.quads == (36, 153, 153)
        assert an.statuses == (MedianStatus.integral(3), MedianStatus.irrational(), MedianStatus.irrational())

        an = analyze_medians(Triangle(3, 4, 5))
        assert [s.kind for s in an.statuses] == ["irr", "irr", "half"]
        assert an.status_c.mu == Fraction(5, 2)
        assert an.status_c.format_mu() == "5/2"

        an = analyze_medians(Triangle(136, 170, 174))
        assert an.quads == (99856, 68644, 64516)
        assert [s.mu for s in an.statuses] == [158, 131, 127]

    def test_integral_count_examples(self):
        assert integral_median_count(Triangle(2, 2, 2)) == 0
        assert integral_median_count(Triangle(8, 14, 14)) == 2
        assert integral_median_count(Triangle(136, 170, 174)) == 3

    def test_statuses_against_rational_oracle(self, small_triangles):
        # a median length is rational iff its square mu^2 = quad/4 has a rational root
        for t in small_triangles:
            an = analyze_medians(Triangle(*t))
            for q, s in zip(an.quads, an.statuses):
                r = scan_root(q)
                if r is None:
                    assert s.kind == "irr"
                else:
                    assert s.mu == Fraction(r, 2)
                    assert s.kind == ("int" if r % 2 == 0 else "half")

    @given(triangles())
    def test_positive_and_trichotomy(self, t):
        an = analyze_medians(t)
        assert all(q > 0 for q in an.quads)
        for q, s in zip(an.quads, an.statuses):
            assert [s.kind == k for k in ("int", "half", "irr")].count(True) == 1
            if s.twice_mu is not None:
                assert s.twice_mu ** 2 == q

    @given(triangles(max_side=10**4))
    def test_quad_formula_matches_coordinates(self, t):
        # place B=(0,0), C=(a,0); 4*|A - M|^2 computed from coordinates scaled by 2a
        a, b, c = t.sides
        x2a = a * a + c * c - b * b  # 2a * x_A
        y2a_sq = 4 * a * a * c * c - x2a * x2a  # (2a * y_A)^2
        # 4 mu_a^2 = 4((x_A - a/2)^2 + y_A^2)
        lhs = Fraction(4 * ((x2a - a * a) ** 2 + y2a_sq), 4 * a * a)
        assert lhs == median_quad_squares(t)[0]

    def test_right_triangle_hypotenuse_median(self):
        for m in range(2, 30):
            for n in range(1, m):
                for d in range(1, 4):
                    legs = (2 * d * m * n, d * (m * m - n * n))
                    h = d * (m * m + n * n)
                    assert median_quad_squares(Triangle(*legs, h))[2] == h * h

    def test_status_validation(self):
        with pytest.raises(ValueError):
            MedianStatus("int", 3)
        with pytest.raises(ValueError):
            MedianStatus("half", 4)
        with pytest.raises(ValueError):
            MedianStatus("irr", 2)
        with pytest.raises(ValueError):
            MedianStatus("what", 2)


class TestCanonicalize:
    def test_examples(self):
        t, perm = canonicalize(Triangle(5, 3, 4))
        assert t == Triangle(3, 4, 5) and perm == (1, 2, 0)
        t, perm = canonicalize(Triangle(3, 4, 5))
        assert t == Triangle(3, 4, 5) and perm == (0, 1, 2)
        t, perm = canonicalize(Triangle(14, 8, 14))
        assert t == Triangle(8, 14, 14)

    @given(triangles(max_side=1000))
    def test_statuses_travel_with_sides(self, t):
        canon, perm = canonicalize(t)
        assert canon.sides == tuple(sorted(t.sides))
        assert analyze_medians(canon).statuses == permute(perm, analyze_medians(t).statuses)
