# Exhaustive search at scale, classification, and how complete the families are.

import time

import numpy as np

from medtri import search

# Every triangle with sides <= 300, medians analyzed in numpy blocks.
t0 = time.perf_counter()
census = search.median_census(300)
print("\n".join(census.lines()), f"({time.perf_counter() - t0:.2f} s)")

# The records themselves, filtered by the number of integral medians.
two = list(search.search_integral_medians(60, min_count=2))
print(len(two), "triangles with >= 2 integral medians and sides <= 60")
for rec in two[:8]:
    print("  ", rec.triangle.sides, [s.format_mu() for s in rec.statuses], rec.tags)

# How the integral-median triangles spread over the largest side.
cs = np.array([r.triangle.side_c for r in search.search_integral_medians(300, 1)])
hist, edges = np.histogram(cs, bins=6, range=(0, 300))
print("integral-median triangles per largest-side band:", dict(zip(edges[:-1].astype(int).tolist(), hist.tolist())))

# Tags with the generator parameters that reproduce them.
for sides in [(6, 8, 10), (5, 5, 8), (8, 14, 14), (136, 170, 174)]:
    print(sides, search.classify(sides), search.family_witnesses(sides))

# Brute force against the generators.
rep = search.coverage_report(120)
for cov in rep.families.values():
    print(cov.summary())
print("scalene two-median triangles outside the F4 shape:",
      [t.sides for t in rep.families["F4"].missing[:5]], "...")

# Leg medians of right triangles.
examined, violations = search.pythagorean_leg_median_check(200)
print(examined, "right triangles up to 200,", len(violations), "with a rational leg median")
