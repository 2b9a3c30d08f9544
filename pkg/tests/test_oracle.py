import pytest

from fuzzytl.core import (
    Atom,
    AvoidingFunction,
    Eventually,
    Interpretation,
    Trace,
)
from fuzzytl.errors import NotALasso, NotCrisp, WindowTooLarge
from fuzzytl.evaluator import EvalContext, evaluate
from fuzzytl.oracle import (
    ltl_evaluate,
    oracle_almost_always,
    oracle_almost_until,
    oracle_limit,
)
from fuzzytl.parser import parse

Z = Interpretation.ZADEH
L = Interpretation.LUKASIEWICZ
P = Interpretation.PRODUCT

WORKED = Trace(("p",), ((0.1,), (0.2,), (1.0,), (0.1,)))
ETA_3 = AvoidingFunction((1.0, 0.5, 0.3))


class TestEnumerationOracle:
    def test_worked_values(self):
        ctx = EvalContext(WORKED, Z, ETA_3)
        assert oracle_almost_always(ctx, Atom("p"), 0, 2) == 0.3
        assert oracle_almost_always(ctx, Atom("p"), 0, 3) == 0.1

    def test_window_of_one_is_the_child(self):
        ctx = EvalContext(WORKED, Z, ETA_3)
        assert oracle_almost_always(ctx, Atom("p"), 0, 0) == 0.1

    def test_guard(self):
        lasso = Trace(("p",), ((0.5,),), loop_start=0)
        ctx = EvalContext(lasso, Z, ETA_3)
        with pytest.raises(WindowTooLarge):
            oracle_almost_always(ctx, Atom("p"), 0, 21)
        with pytest.raises(WindowTooLarge):
            oracle_almost_until(ctx, Atom("p"), Atom("p"), 0, 21)

    def test_almost_until_matches_evaluator(self):
        trace = Trace(("f", "s"), ((1.0, 0.0), (0.25, 0.5), (0.75, 1.0), (0.5, 0.0)))
        for interp in Interpretation:
            ctx = EvalContext(trace, interp, ETA_3)
            for t in range(4):
                direct = oracle_almost_until(ctx, Atom("f"), Atom("s"), 0, t)
                via = evaluate(ctx, parse(f"f AU[{t}] s")).value
                assert abs(direct - via) <= 1e-12


class TestLimitOracle:
    def test_min_stabilizes_in_one_loop(self):
        lasso = Trace(("p",), ((0.9,), (0.5,), (0.7,)), loop_start=1)
        ctx = EvalContext(lasso, Z, ETA_3)
        assert oracle_limit(ctx, parse("G p"), 0, 1e-9) == 0.5

    def test_capped_sum_saturates(self):
        lasso = Trace(("p",), ((0.3,),), loop_start=0)
        ctx = EvalContext(lasso, L, ETA_3)
        assert oracle_limit(ctx, parse("F p"), 0, 1e-9) == 1.0

    def test_all_ones_product(self):
        lasso = Trace(("p",), ((1.0,), (1.0,)), loop_start=1)
        ctx = EvalContext(lasso, P, ETA_3)
        assert oracle_limit(ctx, parse("G p"), 0, 1e-9) == 1.0

    def test_requires_lasso(self):
        ctx = EvalContext(WORKED, Z, ETA_3)
        with pytest.raises(NotALasso):
            oracle_limit(ctx, parse("G p"), 0, 1e-9)

    def test_requires_unbounded_head(self):
        lasso = Trace(("p",), ((0.5,),), loop_start=0)
        ctx = EvalContext(lasso, Z, ETA_3)
        with pytest.raises(TypeError):
            oracle_limit(ctx, parse("p"), 0, 1e-9)
        with pytest.raises(ValueError):
            oracle_limit(ctx, parse("F p"), 0, 0.0)


class TestCrispReference:
    LASSO = Trace(("p", "q"), ((1.0, 0.0), (0.0, 1.0), (1.0, 1.0)), loop_start=2)

    def test_classical_verdicts(self):
        assert ltl_evaluate(self.LASSO, parse("F p"), 1).value is True
        assert ltl_evaluate(self.LASSO, parse("G p"), 0).value is False
        assert ltl_evaluate(self.LASSO, parse("p U q"), 0).value is True
        assert ltl_evaluate(self.LASSO, parse("G q"), 2).value is True

    def test_soon_collapses_to_next(self):
        eta1 = AvoidingFunction.crisp()
        for interp in Interpretation:
            ctx = EvalContext(self.LASSO, interp, eta1)
            for pos in range(3):
                fuzzy = evaluate(ctx, parse("S p"), pos).value
                crisp = ltl_evaluate(self.LASSO, parse("X p"), pos).value
                assert fuzzy == (1.0 if crisp else 0.0)

    def test_rejects_fuzzy_traces(self):
        with pytest.raises(NotCrisp):
            ltl_evaluate(WORKED, parse("F p"), 0)

    def test_unbounded_needs_lasso(self):
        crisp_finite = Trace(("p",), ((1.0,), (0.0,)))
        with pytest.raises(NotALasso):
            ltl_evaluate(crisp_finite, Eventually(Atom("p")), 0)

    def test_bounded_on_crisp_finite(self):
        crisp_finite = Trace(("p", "q"), ((1.0, 0.0), (0.0, 1.0)))
        assert ltl_evaluate(crisp_finite, parse("F[1] q"), 0).value is True
        assert ltl_evaluate(crisp_finite, parse("p U[1] q"), 0).value is True
        assert ltl_evaluate(crisp_finite, parse("G[1] p"), 0).value is False
