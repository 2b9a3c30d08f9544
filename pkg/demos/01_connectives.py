"""The four interpretations of the connectives, side by side.

Every truth degree lives in [0, 1].  An interpretation fixes four operations:
negation, a t-norm (conjunction), its t-conorm (disjunction), and an
implication.  Swapping the interpretation changes every evaluation downstream
while all the structural laws keep holding.
"""

from fuzzytl import Interpretation
from fuzzytl.algebra import drastic_product, drastic_sum, ops_for, weak_and, weak_or

PAIRS = [(0.3, 0.7), (0.6, 0.3), (0.8, 0.4), (1.0, 0.2), (0.5, 0.5)]

print("tnorm / tconorm / implies at a glance")
for interp in Interpretation:
    ops = ops_for(interp)
    print(f"\n  {interp.value}")
    for a, b in PAIRS:
        print(
            f"    a={a} b={b}:  a&b={ops.tnorm(a, b):.4g}"
            f"  a|b={ops.tconorm(a, b):.4g}"
            f"  a->b={ops.implies(a, b):.4g}"
            f"  !a={ops.neg(a):.4g}"
        )

print("\nevery t-norm sits between the drastic product and min,")
print("every t-conorm between max and the drastic sum:")
a, b = 0.6, 0.7
for interp in Interpretation:
    ops = ops_for(interp)
    print(
        f"  {interp.value:12s}  {drastic_product(a, b):.2g} <= {ops.tnorm(a, b):.4g} <= {min(a, b):.2g}"
        f"   and   {max(a, b):.2g} <= {ops.tconorm(a, b):.4g} <= {drastic_sum(a, b):.2g}"
    )

print("\nthe lattice (weak) connectives collapse to min and max under all four:")
for interp in Interpretation:
    print(
        f"  {interp.value:12s}  0.3 && 0.7 -> {weak_and(interp, 0.3, 0.7):.4g}"
        f"   0.3 || 0.7 -> {weak_or(interp, 0.3, 0.7):.4g}"
    )
