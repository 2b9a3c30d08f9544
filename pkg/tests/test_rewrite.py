import random

import pytest

from fuzzytl.checks import random_eta, random_trace
from fuzzytl.core import (
    AlmostAlways,
    Always,
    Atom,
    AvoidingFunction,
    Interpretation,
    Not,
    Top,
    Trace,
    Until,
    node_count,
)
from fuzzytl.errors import BudgetExceeded, NotLowerable
from fuzzytl.evaluator import EvalContext, FinitePolicy, evaluate
from fuzzytl.parser import format_formula, parse
from fuzzytl.rewrite import (
    in_adequate_set,
    lower_to_adequate,
    rewrite_once,
    rule_set,
)

Z = Interpretation.ZADEH
G = Interpretation.GODEL
L = Interpretation.LUKASIEWICZ
P = Interpretation.PRODUCT

ETA_3 = AvoidingFunction((1.0, 0.5, 0.3))
RULES_3 = rule_set(ETA_3)


class TestRewriteOnce:
    def test_within_expands_through_the_penalty_tail(self):
        out = rewrite_once(parse("W[2] p"), RULES_3["within-expand"])
        assert format_formula(out) == "F[2] p | X[3] O[1] p | X[4] O[2] p"

    def test_fg_dual(self):
        out = rewrite_once(parse("G p"), RULES_3["FG-dual"])
        assert format_formula(out) == "!F!p"

    def test_f_from_until(self):
        out = rewrite_once(parse("F p"), RULES_3["F-from-until"])
        assert out == Until(Top(), Atom("p"))
        assert format_formula(out) == "true U p"

    def test_no_match_is_identity(self):
        f = parse("p & q")
        assert rewrite_once(f, RULES_3["FG-dual"]) is f

    def test_leftmost_outermost(self):
        f = parse("G(G p & q)")
        out = rewrite_once(f, RULES_3["FG-dual"])
        assert out == parse("!F!(G p & q)")

    def test_soon_expand_crisp_table_is_next(self):
        rules = rule_set(AvoidingFunction.crisp())
        assert rewrite_once(parse("S p"), rules["soon-expand"]) == parse("X p")
        assert rewrite_once(parse("W[2] p"), rules["within-expand"]) == parse("F[2] p")


class TestRuleSoundness:
    """Spot checks; the broad sweep lives in the rewrites law suite."""

    @pytest.mark.parametrize("name", sorted(rule_set(ETA_3)))
    def test_rule_preserves_value_on_random_samples(self, name):
        from fuzzytl.checks import _pattern_instance

        rng = random.Random(hash(name) & 0xFFFF)
        for _ in range(40):
            eta = random_eta(rng, max_n=4, min_n=2 if name == "scale-to-and" else 1)
            rule = rule_set(eta)[name]
            before = _pattern_instance(rng, name, eta.n_eta)
            after = rewrite_once(before, rule)
            trace = random_trace(rng, max_len=7)
            pos = rng.randrange(len(trace))
            for interp in rule.applicable_interps:
                ctx = EvalContext(trace, interp, eta, FinitePolicy.PAD_ZERO)
                v0 = evaluate(ctx, before, pos).value
                v1 = evaluate(ctx, after, pos).value
                assert abs(v0 - v1) <= 1e-12, (name, interp, format_formula(before))


class TestLowering:
    @pytest.mark.parametrize("interp", [Z, G, L, P], ids=lambda i: i.value)
    def test_lowering_reaches_target_and_preserves_value(self, interp):
        rng = random.Random(interp.value)
        corpus = ["S p", "W[1] p", "L[2] p", "AG[2] p", "p U[2] q", "p AU[1] q", "p || q", "!p | q"]
        for text in corpus:
            f = parse(text)
            eta = random_eta(rng, max_n=3)
            lowered = lower_to_adequate(f, interp, budget=200_000, eta=eta)
            assert in_adequate_set(lowered, interp), (text, format_formula(lowered))
            for _ in range(5):
                trace = random_trace(rng, max_len=6)
                ctx = EvalContext(trace, interp, eta, FinitePolicy.PAD_ZERO)
                pos = rng.randrange(len(trace))
                v0 = evaluate(ctx, f, pos).value
                v1 = evaluate(ctx, lowered, pos).value
                assert abs(v0 - v1) <= 1e-12, (text, interp)

    def test_zadeh_always_goes_through_duality(self):
        lowered = lower_to_adequate(parse("G p"), Z, eta=ETA_3)
        assert in_adequate_set(lowered, Z)
        assert lowered == parse("!(true U !p)")

    def test_product_almost_always_blows_the_budget(self):
        with pytest.raises(BudgetExceeded) as err:
            lower_to_adequate(parse("AG[4] p"), P, budget=10_000, eta=ETA_3)
        assert node_count(err.value.partial) > 10_000

    def test_unbounded_almost_always_is_not_lowerable(self):
        for interp in (Z, G, L, P):
            with pytest.raises(NotLowerable):
                lower_to_adequate(AlmostAlways(Atom("p")), interp, eta=ETA_3)

    def test_godel_unbounded_always_is_not_lowerable(self):
        # the duality needs an involutive negation and until cannot express it
        with pytest.raises(NotLowerable):
            lower_to_adequate(Always(Atom("p")), G, eta=ETA_3)

    def test_budget_carries_partial_form(self):
        with pytest.raises(BudgetExceeded) as err:
            lower_to_adequate(parse("AG[4] p | AG[4] q"), P, budget=500, eta=ETA_3)
        assert err.value.partial is not None


class TestDualityScope:
    def test_fg_dual_not_offered_for_godel_or_product(self):
        rule = RULES_3["FG-dual"]
        assert G not in rule.applicable_interps
        assert P not in rule.applicable_interps

    def test_fg_dual_fails_numerically_under_godel(self):
        half = Trace(("p",), ((0.5,),), loop_start=0)
        ctx = EvalContext(half, G, AvoidingFunction.crisp())
        # !p collapses to 0 under the strict negation, so !F!p swings to 1
        dual = evaluate(ctx, Not(parse("F !p"))).value
        plain = evaluate(ctx, parse("G p")).value
        assert dual != plain
        assert (dual, plain) == (1.0, 0.5)
