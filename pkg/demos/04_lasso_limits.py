"""Exact limits of unbounded operators on lasso traces.

A lasso is a finite prefix plus a loop that repeats forever.  On such a
trace the unbounded operators have closed-form limits: idempotent
interpretations read them off the loop, while the Archimedean ones collapse
to 0 or 1 unless the loop is constant at the boundary.  The bracketing
oracle reproduces the same numbers by brute horizon growth.
"""

from fuzzytl import (
    AvoidingFunction,
    EvalContext,
    Interpretation,
    Trace,
    evaluate,
    parse,
)
from fuzzytl.oracle import oracle_limit

lasso = Trace(("p", "q"), ((0.9, 0.0), (0.5, 0.25), (0.7, 0.5)), loop_start=1)
eta = AvoidingFunction((1.0, 0.5))

print("prefix [0.9], loop [0.5, 0.7] for p; loop [0.25, 0.5] for q\n")
for text in ["F p", "G p", "AG p", "p U q", "p AU q"]:
    print(f"  {text}:")
    for interp in Interpretation:
        ctx = EvalContext(lasso, interp, eta)
        exact = evaluate(ctx, parse(text)).value
        bracket = oracle_limit(ctx, parse(text), 0, 1e-7)
        print(f"    {interp.value:12s} exact={exact!r:<22} bracket={bracket!r}")

print("\na constant loop makes eventually and always coincide (min/max logics):")
const = Trace(("p",), ((0.4,),), loop_start=0)
for interp in (Interpretation.ZADEH, Interpretation.GODEL):
    ctx = EvalContext(const, interp, eta)
    print(
        f"  {interp.value:12s} F p = {evaluate(ctx, parse('F p')).value}"
        f"  G p = {evaluate(ctx, parse('G p')).value}"
    )

print("\nunder the Archimedean logics a loop below 1 starves always entirely:")
for interp in (Interpretation.LUKASIEWICZ, Interpretation.PRODUCT):
    ctx = EvalContext(lasso, interp, eta)
    print(f"  {interp.value:12s} G p = {evaluate(ctx, parse('G p')).value}")
