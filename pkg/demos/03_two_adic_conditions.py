# Testing the 2-adic characterization of 4k^2 = 2(n2^2 + n3^2) - n1^2,
# and looking for triangles with three integral medians.

from medtri import prop_checks as pc

# Building solutions from odd parts and exponents always works ...
inst = pc.construct_from_conditions(85, 87, 17, 1, 3)
print("constructed:", inst.as_tuple(), "equation holds:", pc.check_prop1_equation(*inst.as_tuple()))

rep = pc.check_prop1_conditions(inst)
print("branch:", rep.branch, "decompositions:", rep.decompositions)

# ... but the converse fails: (3, 8, 5, 5) solves the equation (from the
# triangle (8, 5, 5)) with n2, n3 odd, so neither branch applies.
rep = pc.check_prop1_conditions((3, 8, 5, 5))
print((3, 8, 5, 5), "conditions hold:", rep.conditions_hold)
print("  ", rep.violated_details)
print("  ", rep.precondition_flags)

# Equal but positive valuations fail as well.
print((158, 136, 170, 174), pc.check_prop1_conditions((158, 136, 170, 174)).violated_details)

survey = pc.prop1_necessity_survey(60)
print(survey.summary())

# Triangles with all three medians integral.
for bound in (100, 174, 400):
    findings = pc.prop2_experiment(bound)
    print(pc.prop2_verdict(findings, bound))
    for f in findings:
        print("   ", f.triangle.sides, "medians", f.medians, "rechecked:", f.recheck())
