"""A day of smart-grid monitoring with relaxed temporal operators.

The generated trace covers 1440 minutes with a fuzzy availability degree a,
crisp metering/control/connection atoms d, c, s, and a fuzzy consumption
atom p.  Plain always is hostage to the single worst minute; almost-always
may write off a few bad minutes at a price, which is the whole point of the
relaxed operators.
"""

from fuzzytl import AvoidingFunction, EvalContext, Interpretation, evaluate, parse
from fuzzytl.demo import generate_day

trace = generate_day(minutes=1440, seed=7)
eta = AvoidingFunction.gaussian(20)
ctx = EvalContext(trace, Interpretation.ZADEH, eta)

worst_a = min(row[0] for row in trace.states)
below = sum(1 for row in trace.states if row[0] < 1.0)
print(f"1440 minutes; worst availability degree {worst_a:.3f}; {below} minutes below 1.0\n")

plain = evaluate(ctx, parse("G[1439] a")).value
relaxed = evaluate(ctx, parse("AG[1439] a")).value
print(f"G[1439] a  = {plain:.6f}   (exactly the worst minute)")
print(f"AG[1439] a = {relaxed:.6f}   (may discard up to 20 minutes, each at a price)")

print("\nreactivity: whenever metering data arrives, control should follow within a minute")
print("  d -> W[1] c at the first metering minutes:")
for pos in (0, 15, 30, 45):
    v = evaluate(ctx, parse("d -> W[1] c"), pos).value
    print(f"    minute {pos:4d}: {v:.4f}")

print("\nno outage until consumption is moderate, strict and relaxed:")
strict_u = evaluate(ctx, parse("s U[1439] p")).value
relaxed_u = evaluate(ctx, parse("s AU[1439] p")).value
print(f"  s U[1439] p  = {strict_u:.6f}")
print(f"  s AU[1439] p = {relaxed_u:.6f}")

print("\nthe same relaxed availability claim under each interpretation:")
for interp in Interpretation:
    v = evaluate(EvalContext(trace, interp, eta), parse("AG[120] a")).value
    print(f"  {interp.value:12s} AG[120] a = {v:.6f}")
