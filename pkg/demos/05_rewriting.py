"""Value-preserving rewrites and lowering to adequate connective sets.

Each interpretation keeps a small set of connectives that can express the
rest.  The relaxed operators expand through the penalty-scaling operator
O[j]; under the product interpretation the expansion of a bounded
almost-always explodes, which the node budget catches.
"""

import random

from fuzzytl import AvoidingFunction, EvalContext, FinitePolicy, Interpretation, evaluate, format_formula, parse
from fuzzytl.checks import random_trace
from fuzzytl.errors import BudgetExceeded
from fuzzytl.rewrite import adequate_connectives, lower_to_adequate, rewrite_once, rule_set

eta = AvoidingFunction((1.0, 0.5, 0.3))
rules = rule_set(eta)

print("single rules:")
for name, text in [
    ("within-expand", "W[2] p"),
    ("FG-dual", "G p"),
    ("F-from-until", "F p"),
    ("soon-expand", "S p"),
    ("U-unfold", "p U[2] q"),
]:
    out = rewrite_once(parse(text), rules[name])
    print(f"  {name:14s} {text!r} -> {format_formula(out)!r}")

print("\nlowering to each adequate set (and checking the value survives):")
rng = random.Random(0)
trace = random_trace(rng, max_len=6)
for interp in Interpretation:
    lowered = lower_to_adequate(parse("L[2] p || S q"), interp, budget=100_000, eta=eta)
    ctx = EvalContext(trace, interp, eta, FinitePolicy.PAD_ZERO)
    before = evaluate(ctx, parse("L[2] p || S q")).value
    after = evaluate(ctx, lowered, 0).value
    kinds = sorted(k.__name__ for k in adequate_connectives(interp))
    print(f"  {interp.value:12s} difference={abs(before - after):.1e}  target={{{', '.join(kinds)}}}")

print("\nthe product expansion of AG[4] p cannot stay inside 10000 nodes:")
try:
    lower_to_adequate(parse("AG[4] p"), Interpretation.PRODUCT, budget=10_000, eta=eta)
except BudgetExceeded as err:
    print(f"  budget exceeded as expected: {err}")
