"""Gluing two monoids along an action and a restriction.

A two-factor product U ⋈ A multiplies pairs by

    (u, a)(v, b) = (u (a·v), (a|_v) b),

and eight axioms (B1)-(B8) make this associative.  The positive
Baumslag-Solitar monoid BS(2,3)+ and the affine monoid over N both
factor this way, which is what gives them closed-form right LCMs.
"""

from rlcm.catalog import get_semigroup, get_zs_descriptor
from rlcm.core import enumerate_ball
from rlcm.zs import zs_axiom_check, zs_semigroup

print("== axiom certification ==")
D = get_zs_descriptor("bs:2,3")
report = zs_axiom_check(D, enumerate_ball(D.U, 3), enumerate_ball(D.A, 3))
for line in report.lines():
    print(line)

print()
print("== the product of the factors ==")
P = zs_semigroup(D)
ball = enumerate_ball(P, 2)
print(f"radius-2 ball of {P.name} has {len(ball)} elements")
p, q = (("0", 1), ("2", 0))
print(f"{P.display(p)} * {P.display(q)} = {P.display(P.multiply(p, q))}")

print()
print("== closed right LCMs through the factorization ==")
# BS(2,3)+ elements decompose as (word of b^k a letters, power of b);
# the right LCM is computed in the product and pulled back.
bs = get_semigroup("bs:2,3")
a = bs.parse("a")
b = bs.parse("b")
got = bs.right_lcm(a, b)
print(f"lcm(a, b) = {bs.display(got.lcm)}")
assert bs.multiply(a, got.p_comp) == got.lcm
assert bs.multiply(b, got.q_comp) == got.lcm
print("a and b*a never meet:", bs.right_lcm(a, bs.parse("b*a")))

nxn = get_semigroup("nxn")
got = nxn.right_lcm((1, 2), (2, 3))
print(f"lcm((1,2), (2,3)) in the affine monoid over N = "
      f"{nxn.display(got.lcm)}")
