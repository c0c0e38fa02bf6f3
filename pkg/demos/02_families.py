# The parametric families of triangles with integral medians.

from medtri import families as fam

# F1: right triangles with even hypotenuse, hence an integral hypotenuse median.
for hit in fam.gen_f1(4, delta_max=2):
    print("F1 ", hit.triangle.sides, "median on", hit.claimed_medians, "params", hit.params)

# F2: isosceles triangles whose base median is integral, in two subfamilies.
for hit in fam.gen_f2(3, delta_max=1):
    print(hit.family, hit.triangle.sides, "median on", hit.claimed_medians)

# F3 comes from the solutions of x^2 + 2y^2 = z^2.
print("x^2 + 2y^2 = z^2:", [fam.solve_x2_2y2_z2(k, L) for k, L in [(1, 1), (3, 1), (2, 1)]])
hits = list(fam.gen_f3(5, 2, 2))
for hit in hits:
    print("F3 ", hit.triangle.sides, "equal medians", hit.claimed_medians, "params", hit.params)

# Different parameter points can reach the same triangle; dedup keeps every source.
for group in fam.dedup_hits(hits):
    if len(group.hits) > 1:
        print("shared:", group.triangle.sides, group.sources)

# F4: scalene triangles with two integral medians, found by a search over odd
# parts (a, b, c) and exponents e1 < e3 for simultaneous perfect squares.
f4 = list(fam.gen_f4(87, 3))
print(len(f4), "F4 hits with odd parts <= 87 and e3 <= 3")
print([h for h in f4 if h.params == (85, 87, 17, 1, 3)][0])

# Rejections can be inspected: both square conditions hold here but the
# implied triangle (6, 10, 4) is degenerate.
print(fam.f4_rejection_reason(3, 5, 1, 1, 2))
