"""Value-preserving formula transformations and adequate-set lowering.

Rules come in two kinds: interpretation-generic identities (dualities,
De Morgan, unfoldings) and expansions of the relaxed operators, which are
built against a concrete avoiding table because their shape depends on n_eta.
Where a rule realizes a plain maximum it uses the strong disjunction under
Zadeh and Godel (where the t-conorm is the maximum) and the lattice
disjunction under Lukasiewicz and Product.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Optional

from .core import (
    ETA_ATOM_PREFIX,
    AlmostAlwaysB,
    AlmostUntil,
    AlmostUntilB,
    Always,
    AlwaysB,
    And,
    Atom,
    AvoidingFunction,
    Bot,
    Eventually,
    EventuallyB,
    Formula,
    Implies,
    Interpretation,
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
    children,
    with_children,
)
from .errors import BudgetExceeded, NotLowerable

_Z = Interpretation.ZADEH
_G = Interpretation.GODEL
_L = Interpretation.LUKASIEWICZ
_P = Interpretation.PRODUCT

Transform = Callable[[Formula], Optional[Formula]]


@dataclass(frozen=True)
class RewriteRule:
    """A named pattern -> replacement, sound under the listed interpretations."""

    name: str
    applicable_interps: frozenset
    transform: Transform


def _nexts(k: int, f: Formula) -> Formula:
    for _ in range(k):
        f = Next(f)
    return f


def _fold_or(terms: list[Formula]) -> Formula:
    acc = terms[0]
    for term in terms[1:]:
        acc = Or(acc, term)
    return acc


def _fold_weak_or(terms: list[Formula]) -> Formula:
    acc = terms[0]
    for term in terms[1:]:
        acc = WeakOr(acc, term)
    return acc


def _fold_and(terms: list[Formula]) -> Formula:
    acc = terms[0]
    for term in terms[1:]:
        acc = And(acc, term)
    return acc


def eta_atom(j: int) -> Atom:
    """The reserved companion atom whose degree is eta(j) at every instant."""
    return Atom(f"{ETA_ATOM_PREFIX}{j}")


# -- interpretation-generic identities ---------------------------------------


def _t_fg_dual(f):
    if isinstance(f, Always):
        return Not(Eventually(Not(f.arg)))
    return None


def _t_gf_dual(f):
    if isinstance(f, Eventually):
        return Not(Always(Not(f.arg)))
    return None


def _t_f_from_until(f):
    if isinstance(f, Eventually):
        return Until(Top(), f.arg)
    return None


def _t_demorgan_or(f):
    if isinstance(f, Or):
        return Not(And(Not(f.left), Not(f.right)))
    return None


def _t_demorgan_and(f):
    if isinstance(f, And):
        return Not(Or(Not(f.left), Not(f.right)))
    return None


def _t_implies_material(f):
    if isinstance(f, Implies):
        return Or(Not(f.left), f.right)
    return None


def _t_not_via_implies(f):
    if isinstance(f, Not):
        return Implies(f.arg, Bot())
    return None


def _t_or_as_lattice(f):
    if isinstance(f, Or):
        return WeakOr(f.left, f.right)
    return None


def _t_weak_and_collapse(f):
    if isinstance(f, WeakAnd):
        return And(f.left, f.right)
    return None


def _t_weak_or_collapse(f):
    if isinstance(f, WeakOr):
        return Or(f.left, f.right)
    return None


def _t_weak_and_define(f):
    if isinstance(f, WeakAnd):
        return And(f.left, Implies(f.left, f.right))
    return None


def _t_weak_or_define(f):
    if isinstance(f, WeakOr):
        l, r = f.left, f.right
        return WeakAnd(Implies(Implies(l, r), r), Implies(Implies(r, l), l))
    return None


def _t_f_unfold(f):
    if isinstance(f, EventuallyB):
        if f.bound == 0:
            return f.arg
        return Or(f.arg, Next(EventuallyB(f.bound - 1, f.arg)))
    return None


def _t_g_unfold(f):
    if isinstance(f, AlwaysB):
        if f.bound == 0:
            return f.arg
        return And(f.arg, Next(AlwaysB(f.bound - 1, f.arg)))
    return None


def _make_u_unfold(disj):
    def transform(f):
        if isinstance(f, UntilB):
            if f.bound == 0:
                return f.right
            return disj(f.right, And(f.left, Next(UntilB(f.bound - 1, f.left, f.right))))
        return None

    return transform


def _make_au_unfold(disj):
    def transform(f):
        if isinstance(f, AlmostUntilB):
            if f.bound == 0:
                return f.right
            t = f.bound
            step = And(AlmostAlwaysB(t - 1, f.left), _nexts(t, f.right))
            return disj(AlmostUntilB(t - 1, f.left, f.right), step)
        return None

    return transform


def _t_scale_to_and(f):
    # under the product t-norm, multiplying by eta(j) is conjunction with the
    # constant companion atom
    if isinstance(f, Scale):
        return And(f.arg, eta_atom(f.index))
    return None


# -- expansions built against a concrete avoiding table ----------------------


def _make_soon_expand(eta: AvoidingFunction):
    def transform(f):
        if isinstance(f, Soon):
            terms = [Next(f.arg)]
            for d in range(2, eta.n_eta + 1):
                terms.append(_nexts(d, Scale(d - 1, f.arg)))
            return _fold_or(terms)
        return None

    return transform


def _make_within_expand(eta: AvoidingFunction):
    def transform(f):
        if isinstance(f, Within):
            t = f.bound
            terms: list[Formula] = [EventuallyB(t, f.arg)]
            for d in range(t + 1, t + eta.n_eta):
                terms.append(_nexts(d, Scale(d - t, f.arg)))
            return _fold_or(terms)
        return None

    return transform


def _make_lasts_expand(eta: AvoidingFunction, fold_max):
    def transform(f):
        if isinstance(f, Lasts):
            t = f.bound
            terms: list[Formula] = []
            for j in range(min(t, eta.n_eta - 1) + 1):
                body = AlwaysB(t - j, f.arg)
                terms.append(body if j == 0 else Scale(j, body))
            return fold_max(terms)
        return None

    return transform


def _make_ag_expand(eta: AvoidingFunction, fold_max):
    def transform(f):
        if isinstance(f, AlmostAlwaysB):
            t = f.bound
            terms: list[Formula] = []
            for j in range(min(t, eta.n_eta - 1) + 1):
                for kept in itertools.combinations(range(t + 1), t + 1 - j):
                    body = _fold_and([_nexts(h, f.arg) for h in kept])
                    terms.append(body if j == 0 else Scale(j, body))
            return fold_max(terms)
        return None

    return transform


def rule_set(eta: AvoidingFunction) -> dict[str, RewriteRule]:
    """Every shipped rule, with the relaxed-operator expansions bound to eta."""
    all_four = frozenset({_Z, _G, _L, _P})
    rules = [
        RewriteRule("FG-dual", frozenset({_Z, _L}), _t_fg_dual),
        RewriteRule("GF-dual", frozenset({_Z, _L}), _t_gf_dual),
        RewriteRule("F-from-until", frozenset({_Z, _G}), _t_f_from_until),
        RewriteRule("demorgan-or", frozenset({_Z, _L}), _t_demorgan_or),
        RewriteRule("demorgan-and", frozenset({_Z, _L}), _t_demorgan_and),
        RewriteRule("implies-material", frozenset({_Z, _L}), _t_implies_material),
        RewriteRule("not-via-implies", all_four, _t_not_via_implies),
        RewriteRule("or-as-lattice", frozenset({_Z, _G}), _t_or_as_lattice),
        RewriteRule("weak-and-collapse", frozenset({_Z, _G}), _t_weak_and_collapse),
        RewriteRule("weak-or-collapse", frozenset({_Z, _G}), _t_weak_or_collapse),
        RewriteRule("weak-and-define", frozenset({_G, _L, _P}), _t_weak_and_define),
        RewriteRule("weak-or-define", frozenset({_G, _L, _P}), _t_weak_or_define),
        RewriteRule("F-unfold", all_four, _t_f_unfold),
        RewriteRule("G-unfold", all_four, _t_g_unfold),
        RewriteRule("U-unfold", frozenset({_Z, _G}), _make_u_unfold(Or)),
        RewriteRule("U-unfold-w", frozenset({_L, _P}), _make_u_unfold(WeakOr)),
        RewriteRule("AU-unfold", frozenset({_Z, _G}), _make_au_unfold(Or)),
        RewriteRule("AU-unfold-w", frozenset({_L, _P}), _make_au_unfold(WeakOr)),
        RewriteRule("scale-to-and", frozenset({_P}), _t_scale_to_and),
        RewriteRule("soon-expand", all_four, _make_soon_expand(eta)),
        RewriteRule("within-expand", all_four, _make_within_expand(eta)),
        RewriteRule("lasts-expand", frozenset({_Z, _G}), _make_lasts_expand(eta, _fold_or)),
        RewriteRule("lasts-expand-w", frozenset({_L, _P}), _make_lasts_expand(eta, _fold_weak_or)),
        RewriteRule("ag-expand", frozenset({_Z, _G}), _make_ag_expand(eta, _fold_or)),
        RewriteRule("ag-expand-w", frozenset({_L, _P}), _make_ag_expand(eta, _fold_weak_or)),
    ]
    return {rule.name: rule for rule in rules}


# ---------------------------------------------------------------------------
# Application
# ---------------------------------------------------------------------------


def _rewrite_first(f: Formula, rule: RewriteRule) -> Optional[Formula]:
    replaced = rule.transform(f)
    if replaced is not None:
        return replaced
    kids = children(f)
    for i, kid in enumerate(kids):
        new_kid = _rewrite_first(kid, rule)
        if new_kid is not None:
            return with_children(f, kids[:i] + (new_kid,) + kids[i + 1:])
    return None


def rewrite_once(f: Formula, rule: RewriteRule) -> Formula:
    """One leftmost-outermost application; the formula itself if no match."""
    out = _rewrite_first(f, rule)
    return f if out is None else out


#: Connectives each logic keeps after lowering (atoms and constants always pass).
_TARGETS = {
    _Z: frozenset({And, Not, Next, Until, AlmostUntil, Scale}),
    _G: frozenset({And, Implies, Next, Until, AlmostUntil, Scale}),
    _L: frozenset({And, Implies, Next, Eventually, Until, AlmostUntil, Scale}),
    _P: frozenset({And, Implies, Or, Next, Eventually, Always, Until, AlmostUntil}),
}

_ALWAYS_OK = frozenset({Atom, Top, Bot})

#: Which rule removes which offending node kind, per interpretation.
_STRATEGIES = {
    _Z: {
        Or: "demorgan-or",
        Implies: "implies-material",
        WeakAnd: "weak-and-collapse",
        WeakOr: "weak-or-collapse",
        Soon: "soon-expand",
        EventuallyB: "F-unfold",
        AlwaysB: "G-unfold",
        Within: "within-expand",
        Lasts: "lasts-expand",
        AlmostAlwaysB: "ag-expand",
        UntilB: "U-unfold",
        AlmostUntilB: "AU-unfold",
        Eventually: "F-from-until",
        Always: "FG-dual",
    },
    _G: {
        Not: "not-via-implies",
        Or: "or-as-lattice",
        WeakAnd: "weak-and-define",
        WeakOr: "weak-or-define",
        Soon: "soon-expand",
        EventuallyB: "F-unfold",
        AlwaysB: "G-unfold",
        Within: "within-expand",
        Lasts: "lasts-expand",
        AlmostAlwaysB: "ag-expand",
        UntilB: "U-unfold",
        AlmostUntilB: "AU-unfold",
        Eventually: "F-from-until",
    },
    _L: {
        Not: "not-via-implies",
        Or: "demorgan-or",
        WeakAnd: "weak-and-define",
        WeakOr: "weak-or-define",
        Soon: "soon-expand",
        EventuallyB: "F-unfold",
        AlwaysB: "G-unfold",
        Within: "within-expand",
        Lasts: "lasts-expand-w",
        AlmostAlwaysB: "ag-expand-w",
        UntilB: "U-unfold-w",
        AlmostUntilB: "AU-unfold-w",
        Always: "FG-dual",
    },
    _P: {
        Not: "not-via-implies",
        WeakAnd: "weak-and-define",
        WeakOr: "weak-or-define",
        Soon: "soon-expand",
        EventuallyB: "F-unfold",
        AlwaysB: "G-unfold",
        Within: "within-expand",
        Lasts: "lasts-expand-w",
        AlmostAlwaysB: "ag-expand-w",
        UntilB: "U-unfold-w",
        AlmostUntilB: "AU-unfold-w",
        Scale: "scale-to-and",
    },
}


def adequate_connectives(interp: Interpretation) -> frozenset:
    """The node kinds a fully lowered formula may contain."""
    return _TARGETS[interp] | _ALWAYS_OK


def in_adequate_set(f: Formula, interp: Interpretation) -> bool:
    allowed = adequate_connectives(interp)
    stack = [f]
    while stack:
        node = stack.pop()
        if type(node) not in allowed:
            return False
        stack.extend(children(node))
    return True


class _LoweringState:
    """Tracks the expanded tree size across a lowering run.

    Rewrites share subtrees, so sizes are memoized per object; the cache
    holds a reference to each node to keep ids stable.
    """

    def __init__(self, budget: int):
        self.budget = budget
        self.total = 0
        self._sizes: dict[int, tuple[Formula, int]] = {}

    def size(self, f: Formula) -> int:
        hit = self._sizes.get(id(f))
        if hit is not None:
            return hit[1]
        total = 1
        for kid in children(f):
            total += self.size(kid)
        self._sizes[id(f)] = (f, total)
        return total

    def charge(self, old: Formula, new: Formula) -> None:
        self.total += self.size(new) - self.size(old)

    def over_budget(self) -> bool:
        return self.total > self.budget


def _lower_node(f: Formula, strategy, rules, allowed, state: _LoweringState) -> Formula:
    while type(f) not in allowed:
        rule_name = strategy.get(type(f))
        if rule_name is None:
            raise NotLowerable(
                f"no sound rule removes {type(f).__name__} under this interpretation",
                partial=f,
            )
        new = rules[rule_name].transform(f)
        if new is None:
            raise NotLowerable(f"rule {rule_name} did not apply to {type(f).__name__}", partial=f)
        state.charge(f, new)
        f = new
        if state.over_budget():
            raise BudgetExceeded(
                f"lowered form reached {state.total} nodes (budget {state.budget})", partial=f
            )
    kids = children(f)
    if not kids:
        return f
    lowered: list[Formula] = []
    for i, kid in enumerate(kids):
        try:
            lowered.append(_lower_node(kid, strategy, rules, allowed, state))
        except (BudgetExceeded, NotLowerable) as exc:
            exc.partial = with_children(f, (*lowered, exc.partial, *kids[i + 1:]))
            raise
    return with_children(f, tuple(lowered))


def lower_to_adequate(
    f: Formula,
    interp: Interpretation,
    budget: int = 100_000,
    eta: Optional[AvoidingFunction] = None,
) -> Formula:
    """Rewrite until only the interpretation's adequate connectives remain.

    ``eta`` shapes the relaxed-operator expansions; it defaults to the crisp
    table (n_eta = 1).  Raises BudgetExceeded once the tree outgrows
    ``budget`` nodes, and NotLowerable when an operator has no sound removal
    rule under this interpretation (unbounded almost-always everywhere;
    unbounded always under Godel).
    """
    if eta is None:
        eta = AvoidingFunction.crisp()
    rules = rule_set(eta)
    allowed = adequate_connectives(interp)
    strategy = _STRATEGIES[interp]
    state = _LoweringState(budget)
    state.total = state.size(f)
    if state.over_budget():
        raise BudgetExceeded(
            f"input already has {state.total} nodes (budget {budget})", partial=f
        )
    return _lower_node(f, strategy, rules, allowed, state)
