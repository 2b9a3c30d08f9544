"""The concrete syntax: atoms, bounds in brackets, and operator precedence.

Unary operators bind tightest, then the until family, then & / &&, then
| / ||, then -> (right-associative).  X[k] is sugar for k stacked next
operators, and O[j] scales its argument by the j-th penalty.
"""

from fuzzytl import format_formula, parse

SAMPLES = [
    "AG[1440] a",
    "d -> W[1] c",
    "p U q & r",
    "!p | q -> S r",
    "X[3] (p && q)",
    "G[10] (request -> W[2] grant)",
    "(p & q) U r",
    "O[2] p | true",
]

print("parse, then print back canonically:")
for text in SAMPLES:
    f = parse(text)
    printed = format_formula(f)
    again = parse(printed)
    print(f"  {text!r:40s} -> {printed!r:40s} stable={again == f}")

print("\nprecedence in action: 'p U q & r' groups the until first:")
print(" ", parse("p U q & r"))
print("  equal to '(p U q) & r':", parse("p U q & r") == parse("(p U q) & r"))

print("\nsyntax errors carry a source span and the expected tokens:")
from fuzzytl import ParseError

for bad in ["p &", "F[2", "AG[x] p"]:
    try:
        parse(bad)
    except ParseError as err:
        print(f"  {bad!r}: {err}")
