import random

import pytest

from fuzzytl.checks import random_formula
from fuzzytl.core import (
    AlmostAlwaysB,
    AlmostUntilB,
    And,
    Atom,
    Bot,
    EventuallyB,
    Implies,
    Lasts,
    Next,
    Not,
    Or,
    Scale,
    Soon,
    Top,
    Until,
    UntilB,
    WeakAnd,
    WeakOr,
    Within,
)
from fuzzytl.errors import ParseError
from fuzzytl.parser import format_formula, parse


def test_parses_bounded_almost_always():
    assert parse("AG[1440] a") == AlmostAlwaysB(1440, Atom("a"))


def test_parses_implication_with_within():
    assert parse("d -> W[1] c") == Implies(Atom("d"), Within(1, Atom("c")))


def test_until_binds_tighter_than_and():
    assert parse("p U q & r") == And(Until(Atom("p"), Atom("q")), Atom("r"))


def test_constants_and_weak_connectives():
    assert parse("true && false") == WeakAnd(Top(), Bot())
    assert parse("p || q | r") == Or(WeakOr(Atom("p"), Atom("q")), Atom("r"))


def test_next_sugar_nests():
    assert parse("X[3] p") == Next(Next(Next(Atom("p"))))
    assert parse("X[0] p") == Atom("p")
    assert parse("X p") == Next(Atom("p"))


def test_until_family_is_left_associative():
    assert parse("p U q AU r") == parse("(p U q) AU r")
    assert parse("p U[2] q") == UntilB(2, Atom("p"), Atom("q"))
    assert parse("p AU[2] q") == AlmostUntilB(2, Atom("p"), Atom("q"))


def test_implication_is_right_associative():
    assert parse("p -> q -> r") == Implies(Atom("p"), Implies(Atom("q"), Atom("r")))


def test_scale_and_lasts():
    assert parse("O[2] p") == Scale(2, Atom("p"))
    assert parse("L[3] p") == Lasts(3, Atom("p"))


def test_keywords_are_not_atoms():
    with pytest.raises(ParseError):
        parse("U")
    with pytest.raises(ParseError):
        parse("p & true q")
    # but identifiers merely containing keyword letters are atoms
    assert parse("Until_ok") == Atom("Until_ok")
    assert parse("Fp") == Atom("Fp")


def test_bound_ceiling():
    parse("F[1000000] p")
    with pytest.raises(ParseError):
        parse("F[1000001] p")


def test_mandatory_bounds():
    for text in ("L p", "W p", "O p"):
        with pytest.raises(ParseError):
            parse(text)


def test_format_examples():
    assert format_formula(AlmostAlwaysB(5, Atom("p"))) == "AG[5] p"
    assert format_formula(Implies(Atom("p"), Implies(Atom("q"), Atom("r")))) == "p -> q -> r"
    assert format_formula(Until(And(Atom("p"), Atom("q")), Atom("r"))) == "(p & q) U r"
    assert format_formula(Not(EventuallyB(2, Not(Atom("p"))))) == "!F[2]!p"
    assert format_formula(Next(Next(Soon(Atom("p"))))) == "X[2] S p"


@pytest.mark.parametrize(
    "text",
    [
        "",
        "p &",
        "(p",
        "p)",
        "F[",
        "F[2 p",
        "p -> ",
        "p @ q",
        "AG[x] p",
        "!",
        "p U",
    ],
)
def test_rejected_inputs_carry_spans(text):
    with pytest.raises(ParseError) as err:
        parse(text)
    span = err.value.span
    assert 0 <= span.start <= span.end <= len(text)
    assert tuple(span) == (span.start, span.end)


def test_round_trip_random_formulas():
    """Formatting then parsing reproduces the tree, 1000 times."""
    rng = random.Random(2024)
    for _ in range(1000):
        f = random_formula(rng, atoms=("p", "q", "longer_name"), depth=rng.randint(0, 8), n_eta=4)
        text = format_formula(f)
        assert parse(text) == f, text


def test_round_trip_is_stable():
    rng = random.Random(5)
    for _ in range(200):
        f = random_formula(rng, depth=5, n_eta=3)
        once = format_formula(f)
        assert format_formula(parse(once)) == once
