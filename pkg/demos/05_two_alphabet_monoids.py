"""Two-alphabet monoids with a commutation bijection.

Words over X = {x_0..x_{m-1}} and Y = {y_0..y_{n-1}} subject to
y_j x_i = x_i' y_j' have unique X*Y* normal forms.  Whether the monoid
has right LCMs turns out to hinge on gcd(m, n): the survey below finds
explicit failures whenever m and n share a factor, and certifies a box
clean when they do not.
"""

from rlcm.selfsim import (adding_machine, ftheta_display,
                          ftheta_min_common_multiples, ftheta_multiply,
                          ftheta_parse, ftheta_right_lcm,
                          ftheta_right_lcm_survey, prop_compat_check,
                          theta_build, theta_swap)

print("== normal forms ==")
T = theta_build(2, 3)
z1 = ftheta_parse(T, "x0.y1")
z2 = ftheta_parse(T, "x1.")
print(f"x0y1 * x1 = {ftheta_display(ftheta_multiply(T, z1, z2))}")

print()
print("== right LCMs in the coprime case ==")
got = ftheta_right_lcm(T, ftheta_parse(T, "x0."), ftheta_parse(T, ".y1"))
print("lcm(x0, y1) =", ftheta_display(got.lcm))

print()
print("== the survey ==")
for m, n in ((2, 3), (3, 4), (2, 2), (2, 4), (4, 6)):
    verdict = ftheta_right_lcm_survey(theta_build(m, n), (2, 2))
    if verdict.ok:
        print(f"({m},{n}): no failure up to bidegree (2,2) "
              f"({verdict.checked_pairs} pairs)")
    else:
        z1, z2 = verdict.pair
        t1, t2 = verdict.multiples
        print(f"({m},{n}): {ftheta_display(z1)} and {ftheta_display(z2)} "
              f"have two minimal common multiples "
              f"{ftheta_display(t1)}, {ftheta_display(t2)}")

T46 = theta_build(4, 6)
mins = ftheta_min_common_multiples(T46, ftheta_parse(T46, "x2."),
                                   ftheta_parse(T46, ".y2"))
print("(4,6) minimal common multiples of x2 and y2:",
      ", ".join(ftheta_display(t) for t in mins))

print()
print("== tables compatible with the odometers ==")
report = prop_compat_check(T, adding_machine(2), adding_machine(3),
                           range(-8, 9))
for line in report.lines():
    print(line)
broken = theta_swap(T, (0, 0), (1, 1))
print("after swapping two table entries:",
      "still fine" if prop_compat_check(
          broken, adding_machine(2), adding_machine(3),
          range(-8, 9)).ok else "violation detected")
