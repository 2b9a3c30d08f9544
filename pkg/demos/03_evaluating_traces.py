"""Evaluating formulas over a finite trace, operator by operator.

The running example: one atom p with degrees 0.1, 0.2, 1, 0.1 and the
penalty table eta = [1, 0.5, 0.3].  The almost-always family trades avoided
instants against penalties, which makes its value non-monotone in the
window length.
"""

from fuzzytl import (
    AvoidingFunction,
    EvalContext,
    FinitePolicy,
    Interpretation,
    Trace,
    evaluate,
    parse,
)

trace = Trace(("p",), ((0.1,), (0.2,), (1.0,), (0.1,)))
eta = AvoidingFunction((1.0, 0.5, 0.3))
ctx = EvalContext(trace, Interpretation.ZADEH, eta)

print("the trace:", [row[0] for row in trace.states], " eta:", list(eta.table))

print("\nplain bounded operators:")
for text in ["p", "X p", "F[2] p", "G[2] p", "p U[2] p"]:
    print(f"  {text:12s} = {evaluate(ctx, parse(text)).value}")

print("\nthe almost-always family is not monotone in the window:")
for t in range(4):
    r = evaluate(ctx, parse(f"AG[{t}] p"))
    print(f"  AG[{t}] p = {r.value}")
print("  (window 2 beats its neighbours: dropping the two dips keeps the 1.0)")

print("\nsoon, within, lasts:")
for text in ["S p", "W[1] p", "L[2] p"]:
    print(f"  {text:8s} = {evaluate(ctx, parse(text)).value}")

print("\nunbounded operators on a finite trace only bound the limit:")
for text in ["F p", "G p", "AG p"]:
    r = evaluate(ctx, parse(text))
    print(f"  {text:6s} = {r.value}  [{r.exactness.value}]")

print("\nthe strict policy rejects windows that leave the trace;")
print("pad-zero treats missing states as all-zero instead:")
from fuzzytl import HorizonExceedsTrace

try:
    evaluate(ctx, parse("G[9] p"))
except HorizonExceedsTrace as err:
    print("  strict:", err)
padded = EvalContext(trace, Interpretation.ZADEH, eta, FinitePolicy.PAD_ZERO)
print("  pad-zero G[9] p =", evaluate(padded, parse("G[9] p")).value)

print("\nthe same formula under all four interpretations:")
for interp in Interpretation:
    c = EvalContext(trace, interp, eta)
    print(f"  {interp.value:12s} AG[2] p = {evaluate(c, parse('AG[2] p')).value}")
