# Median lengths of integer triangles, computed exactly.
#
# For sides a, b, c the median to side a satisfies 4*mu_a**2 = 2*(b**2 + c**2) - a**2,
# so every question about a median being rational reduces to whether that integer
# ("quad") is a perfect square.

from medtri import Triangle, analyze_medians, canonicalize, two_adic

# The hypotenuse median of a right triangle is half the hypotenuse.
for sides in [(3, 4, 5), (10, 24, 26)]:
    an = analyze_medians(Triangle(*sides))
    print(sides, "quads:", an.quads, "medians:", [s.format_mu() for s in an.statuses])

# An isosceles triangle with an integral base median ...
print((8, 5, 5), [s.format_mu() for s in analyze_medians(Triangle(8, 5, 5)).statuses])

# ... and one whose two equal medians are integers.
print((8, 14, 14), [s.format_mu() for s in analyze_medians(Triangle(8, 14, 14)).statuses])

# A triangle with all three medians integral.
t = Triangle(136, 170, 174)
an = analyze_medians(t)
print(t.sides, "quads:", an.quads, "medians:", [s.format_mu() for s in an.statuses],
      "integral count:", an.integral_count)

# 2-adic decompositions n = 2**e * odd are the bookkeeping used later on.
for n in t.sides:
    print(n, "=", "2^%d * %d" % two_adic(n))

# Reports use ascending side order; statuses travel with their sides.
canon, perm = canonicalize(Triangle(14, 8, 14))
print("canonical:", canon.sides, "permutation:", perm)
