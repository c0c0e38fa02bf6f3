import logging
import re
from math import gcd

import pytest

from medtri import families as fam
from medtri.core import Triangle, analyze_medians, canonicalize


def claimed(hit):
    return dict(hit.claimed_medians)


class TestPythagorean:
    @pytest.mark.parametrize("params, sides", [
        ((2, 1, 1), (4, 3, 5)),
        ((2, 1, 2), (8, 6, 10)),
        ((3, 2, 1), (12, 5, 13)),
    ])
    def test_examples(self, params, sides):
        t = fam.pythagorean(fam.PythParams(*params))
        assert t.sides == sides
        assert sides[0] ** 2 + sides[1] ** 2 == sides[2] ** 2

    @pytest.mark.parametrize("params, fragment", [
        ((1, 2, 1), "m > n"),
        ((3, 1, 1), "m + n odd"),
        ((4, 2, 1), "gcd"),
        ((2, 1, 0), "delta"),
        ((2, 0, 1), "n >= 1"),
    ])
    def test_invalid(self, params, fragment):
        with pytest.raises(ValueError, match=re.escape(fragment)):
            fam.PythParams(*params)


class TestF1:
    def test_examples(self):
        hit = fam.f1_hit(2, 1, 2)
        assert hit.triangle.sides == (8, 6, 10) and claimed(hit) == {"c": 5}
        hit = fam.f1_hit(3, 2, 2)
        assert hit.triangle.sides == (24, 10, 26) and claimed(hit) == {"c": 13}
        assert fam.f1_hit(2, 1, 1) is None

    def test_soundness(self):
        hits = list(fam.gen_f1(12, delta_max=8))
        assert hits
        for h in hits:
            b, g, a = h.triangle.sides
            assert b * b + g * g == a * a and a % 2 == 0
            assert h.params[2] % 2 == 0
            assert h.verify()

    def test_lexicographic(self):
        params = [h.params for h in fam.gen_f1(10, delta_max=6)]
        assert params == sorted(params)


class TestF2:
    @pytest.mark.parametrize("sub, params, sides, mu", [
        ("a", (2, 1, 1), (8, 5, 5), 3),
        ("b", (2, 1, 1), (6, 5, 5), 4),
        ("a", (3, 2, 1), (24, 13, 13), 5),
    ])
    def test_examples(self, sub, params, sides, mu):
        hit = fam.f2_hit(sub, *params)
        assert hit.triangle.sides == sides and claimed(hit) == {"a": mu}
        assert hit.family == ("F2a" if sub == "a" else "F2b")

    def test_pythagorean_substructure(self):
        for h in fam.gen_f2(10, delta_max=4):
            base, leg, leg2 = h.triangle.sides
            mu = claimed(h)["a"]
            assert leg == leg2 and base % 2 == 0
            assert (base // 2) ** 2 + mu ** 2 == leg ** 2

    def test_subfamilies_tagged_separately(self):
        # (6, 5, 5) comes from F2b (2,1,1); (24, 13, 13) from F2a; scaled copies may coincide
        fams = {h.family for h in fam.gen_f2(6, delta_max=3)}
        assert fams == {"F2a", "F2b"}
        only_a = list(fam.gen_f2(6, delta_max=3, subfamilies=("a",)))
        assert {h.family for h in only_a} == {"F2a"}


class TestX2Plus2Y2:
    @pytest.mark.parametrize("args, expected", [
        ((1, 1, 1), (1, 2, 3)),
        ((3, 1, 1), (7, 6, 11)),
        ((2, 1, 1), (2, 4, 6)),
    ])
    def test_examples(self, args, expected):
        x, y, z = fam.solve_x2_2y2_z2(*args)
        assert (x, y, z) == expected and x * x + 2 * y * y == z * z

    def test_grid(self):
        for k in range(1, 40):
            for L in range(1, 40):
                if gcd(k, L) == 1:
                    for d in (1, 2, 5):
                        x, y, z = fam.solve_x2_2y2_z2(k, L, d)
                        assert x * x + 2 * y * y == z * z

    def test_rejects_non_coprime(self):
        with pytest.raises(ValueError):
            fam.solve_x2_2y2_z2(2, 4, 1)

    def test_primitive_solutions_covered(self):
        # every primitive solution with z < 200 is reached by some coprime (k, L), delta = 1 or 2
        reached = set()
        for k in range(1, 20):
            for L in range(1, 15):
                if gcd(k, L) == 1:
                    x, y, z = fam.solve_x2_2y2_z2(k, L)
                    g = gcd(gcd(x, y), z)
                    reached.add((x // g, y // g, z // g))
        for z in range(1, 200):
            for y in range(1, z):
                x2 = z * z - 2 * y * y
                if x2 <= 0:
                    break
                x = int(x2 ** 0.5 + 0.5)
                if x * x == x2 and gcd(gcd(x, y), z) == 1:
                    assert (x, y, z) in reached


class TestF3:
    @pytest.mark.parametrize("params, sides, mu", [
        ((4, 1, 1), (8, 14, 14), 9),
        ((5, 1, 2), (20, 46, 46), 27),
    ])
    def test_examples(self, params, sides, mu):
        hit = fam.f3_hit(*params)
        assert hit.triangle.sides == sides
        assert claimed(hit) == {"b": mu, "c": mu}

    def test_excluded(self):
        assert fam.f3_hit(1, 1, 1) is None
        with pytest.raises(ValueError, match="kL"):
            fam.F3Params(1, 1, 1)
        with pytest.raises(ValueError, match="even"):
            fam.F3Params(3, 1, 1)

    def test_equal_medians(self, caplog):
        caplog.set_level(logging.WARNING, logger="medtri.families")
        hits = list(fam.gen_f3(15, 15, 6))
        base_integral = []
        for h in hits:
            an = analyze_medians(h.triangle)
            assert an.quad_b == an.quad_c and an.status_b.is_integral
            if an.status_a.is_integral:
                base_integral.append(h)
        # any triangle with an integral base median as well is logged, not asserted away
        assert len(caplog.records) == len(base_integral)

    def test_dedup_keeps_all_sources(self):
        hits = list(fam.gen_f3(5, 2, 2))
        groups = {d.triangle: d for d in fam.dedup_hits(hits)}
        d = groups[Triangle(8, 14, 14)]
        assert sorted(d.sources) == [("F3", (1, 2, 2)), ("F3", (4, 1, 1))]


class TestF4:
    def test_example_hit(self):
        hit = fam.f4_hit(85, 87, 17, 1, 3)
        assert hit.triangle.sides == (170, 174, 136)
        assert claimed(hit) == {"a": 131, "b": 127}
        m2, n2 = fam.f4_square_terms(85, 87, 17, 1, 3)
        assert (m2, n2) == (17161, 16129) == (131 ** 2, 127 ** 2)

    def test_rejections(self):
        assert fam.f4_square_terms(3, 5, 1, 1, 2) == (49, 1)
        assert "triangle inequality" in fam.f4_rejection_reason(3, 5, 1, 1, 2)
        assert "e1 < e3" in fam.f4_rejection_reason(7, 9, 3, 1, 1)
        assert "odd" in fam.f4_rejection_reason(2, 9, 3, 1, 2)
        assert fam.f4_hit(3, 5, 1, 1, 2) is None

    def test_candidate_validation(self):
        fam.F4Candidate(85, 87, 17, 1, 3, 131, 127)
        with pytest.raises(ValueError):
            fam.F4Candidate(85, 87, 17, 1, 3, 131, 129)

    def test_grid_matches_scalar_oracle(self):
        vec = [h.params for h in fam.gen_f4(31, 4)]
        scalar = []
        for a in range(1, 32, 2):
            for b in range(1, 32, 2):
                for c in range(1, 32, 2):
                    for e1 in range(1, 4):
                        for e3 in range(e1 + 1, 5):
                            if fam.f4_rejection_reason(a, b, c, e1, e3) is None:
                                scalar.append((a, b, c, e1, e3))
        assert vec == scalar

    def test_diagnostics(self):
        rejected = []
        list(fam.gen_f4(7, 2, on_reject=lambda p, r: rejected.append((p, r))))
        assert ((3, 5, 1, 1, 2), "implied sides (6, 10, 4) fail the strict triangle inequality") in rejected

    def test_scalene(self):
        for h in fam.gen_f4(45, 4):
            x, y, z = h.triangle.sides
            assert x != y and len({x, y, z}) == 3


def test_every_hit_reverifies():
    gens = [
        fam.gen_f1(12, delta_max=6),
        fam.gen_f2(12, delta_max=5),
        fam.gen_f3(12, 12, 5),
        fam.gen_f4(41, 4),
    ]
    for g in gens:
        for h in g:
            statuses = dict(zip("abc", analyze_medians(h.triangle).statuses))
            for label, mu in h.claimed_medians:
                assert statuses[label].is_integral and statuses[label].twice_mu == 2 * mu
            Triangle(*h.triangle.sides)


def test_max_side_restriction():
    for family in ("F1", "F2", "F3", "F4"):
        bounds = {"F1": dict(m_max=20, delta_max=20), "F2": dict(m_max=20, delta_max=20),
                  "F3": dict(k_max=20, l_max=20, delta_max=20), "F4": dict(odd_max=41, e_max=5)}[family]
        full = [h for h in fam.generate(family, **bounds) if max(h.triangle.sides) <= 60]
        cut = list(fam.generate(family, max_side=60, **bounds))
        assert [(h.family, h.params) for h in cut] == [(h.family, h.params) for h in full]


def test_generate_unknown():
    with pytest.raises(ValueError):
        fam.generate("F9")


def test_dedup_canonical():
    hits = list(fam.gen_f4(87, 3))
    for d in fam.dedup_hits(hits):
        assert d.triangle == canonicalize(d.triangle)[0]
        assert all(canonicalize(h.triangle)[0] == d.triangle for h in d.hits)
