"""The two-sided monomial calculus and its operator shadow.

Products of the generating isometries v_p and their adjoints collapse to
zero or to a single monomial v_p v_q*; the collapse is driven entirely
by right LCMs.  The same words act on a finite ball as partial
injections, and the two pictures must agree vector by vector.
"""

from rlcm.catalog import get_semigroup
from rlcm.core import enumerate_ball
from rlcm.regrep import RepContext, oracle_check_monomial, verify_relations
from rlcm.star import (ZERO, is_foundation_set, mono_display, v, vstar,
                       word_normalize)

S = get_semigroup("frac")

print("== collapsing words ==")
words = {
    "v(1,2)* v(1,2)": [vstar(S, (1, 2)), v(S, (1, 2))],
    "v(0,2)* v(1,2)": [vstar(S, (0, 2)), v(S, (1, 2))],
    "v(1,2)* v(5,6)": [vstar(S, (1, 2)), v(S, (5, 6))],
}
for text, tokens in words.items():
    print(f"{text}  ->  {mono_display(S, word_normalize(S, tokens))}")

print()
print("== the operator check ==")
ctx = RepContext(S, enumerate_ball(S, 3))
tokens = [((1, 2), True), ((5, 6), False)]
compared, escaped, bad = oracle_check_monomial(S, tokens, ctx)
print(f"v(1,2)* v(5,6): {compared} vectors compared, "
      f"{escaped} escaped, {len(bad)} disagreements")

print()
print("== relation suites in the regular representation ==")
from rlcm.catalog import get_zs_descriptor

D = get_zs_descriptor("nxn")
for suite in ("Li", "covariance", "K"):
    for line in verify_relations(D, radius=2, suite=suite).lines():
        print(line)

print()
print("== foundation sets ==")
free = get_semigroup("free:2")
print("{0, 1}:", is_foundation_set(free, ["0", "1"], "exact").status)
print("{00, 1}:", is_foundation_set(free, ["00", "1"], "exact").status)
ball = enumerate_ball(S, 3)
print("{(0,2), (1,2)} in the progressions:",
      is_foundation_set(S, [(0, 2), (1, 2)], "bounded", ball=ball).status)
assert word_normalize(S, [vstar(S, (0, 2)), v(S, (1, 2))]) is ZERO
