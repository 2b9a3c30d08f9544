"""Recursive truth-degree evaluation over finite and lasso traces.

Bounded operators evaluate their window directly; unbounded operators reach
their exact limit on lasso traces and fall back to the largest window that
fits on finite traces, tagging the result with a bound direction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from . import algebra
from .algebra import ConnectiveOps, scale
from .core import (
    ETA_ATOM_PREFIX,
    AlmostAlways,
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
    TruthDegree,
    Trace,
    Until,
    UntilB,
    WeakAnd,
    WeakOr,
    Within,
)
from .errors import (
    HorizonExceedsTrace,
    NotALasso,
    PositionOutOfRange,
    ScaleIndexOutOfRange,
)

_IDEMPOTENT = frozenset({Interpretation.ZADEH, Interpretation.GODEL})


class FinitePolicy(Enum):
    """What to do when evaluation walks past the end of a finite trace."""

    STRICT = "strict"
    PAD_ZERO = "pad-zero"


class Exactness(Enum):
    EXACT = "Exact"
    LOWER_BOUND = "LowerBound"
    UPPER_BOUND = "UpperBound"
    APPROXIMATE = "Approximate"


_EXACT = Exactness.EXACT
_LOWER = Exactness.LOWER_BOUND
_UPPER = Exactness.UPPER_BOUND
_APPROX = Exactness.APPROXIMATE


def _combine(a: Exactness, b: Exactness) -> Exactness:
    """Join two bound directions under a monotone-increasing combination."""
    if a is _EXACT:
        return b
    if b is _EXACT:
        return a
    if a is b:
        return a
    return _APPROX


def _flip(e: Exactness) -> Exactness:
    if e is _LOWER:
        return _UPPER
    if e is _UPPER:
        return _LOWER
    return e


@dataclass(frozen=True)
class EvalContext:
    """Everything one evaluation needs; immutable, shareable."""

    trace: Trace
    interp: Interpretation
    eta: AvoidingFunction
    finite_policy: FinitePolicy = FinitePolicy.STRICT
    _ops: ConnectiveOps = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_ops", algebra.ops_for(self.interp))

    @property
    def ops(self) -> ConnectiveOps:
        return self._ops


@dataclass(frozen=True)
class EvalResult:
    value: TruthDegree
    exactness: Exactness


class ComparisonCounter:
    """Counts value comparisons made by the almost-always selection."""

    __slots__ = ("count",)

    def __init__(self) -> None:
        self.count = 0


# ---------------------------------------------------------------------------
# Selection of the smallest window values
# ---------------------------------------------------------------------------


def _select_smallest(values, keep: int, counter: Optional[ComparisonCounter]):
    """The ``keep`` smallest (value, position) pairs, ascending.

    Ties resolve to the earliest position.  Maintains a bounded sorted list,
    so each element costs one comparison against the current cutoff plus
    O(log keep) on insertion.
    """
    kept: list[tuple[float, int]] = []
    n_cmp = 0
    for pos, v in enumerate(values):
        entry = (v, pos)
        if len(kept) >= keep:
            n_cmp += 1
            if entry >= kept[-1]:
                continue
        # binary search for the insertion point
        lo, hi = 0, len(kept)
        while lo < hi:
            mid = (lo + hi) // 2
            n_cmp += 1
            if entry < kept[mid]:
                hi = mid
            else:
                lo = mid + 1
        kept.insert(lo, entry)
        if len(kept) > keep:
            kept.pop()
    if counter is not None:
        counter.count += n_cmp
    return kept


def _fold_tnorm(ops: ConnectiveOps, values) -> float:
    it = iter(values)
    acc = next(it)
    tnorm = ops.tnorm
    for v in it:
        acc = tnorm(acc, v)
    return acc


def _almost_always_value(
    interp: Interpretation,
    ops: ConnectiveOps,
    eta: AvoidingFunction,
    values: list[float],
    counter: Optional[ComparisonCounter] = None,
) -> float:
    """max over j <= min(t, n_eta - 1) of eta(j) * (t-norm of the window
    minus its j smallest values); the retained set is never empty."""
    m = len(values)
    j_max = min(m - 1, eta.n_eta - 1)
    kept = _select_smallest(values, j_max + 1, counter)
    best = None
    if interp in _IDEMPOTENT:
        # the window product minus j smallest is just the (j+1)-th smallest
        for j in range(j_max + 1):
            cand = scale(kept[j][0], eta.lookup(j))
            if best is None or cand > best:
                best = cand
            if counter is not None:
                counter.count += 1
    else:
        for j in range(j_max + 1):
            dropped = {p for _, p in kept[:j]}
            retained = (v for p, v in enumerate(values) if p not in dropped)
            cand = scale(_fold_tnorm(ops, retained), eta.lookup(j))
            if best is None or cand > best:
                best = cand
            if counter is not None:
                counter.count += 1
    return best


# ---------------------------------------------------------------------------
# The recursive evaluator
# ---------------------------------------------------------------------------


def _canonical_tail(ctx: EvalContext, pos: int) -> int:
    trace = ctx.trace
    if trace.loop_start is not None:
        return trace.resolve(pos)
    if ctx.finite_policy is FinitePolicy.STRICT:
        raise HorizonExceedsTrace(
            f"position {pos} leaves the {trace._length}-state finite trace "
            "under the strict policy"
        )
    return trace._length  # every padded position is the same all-zero state


def _eval(ctx, f, pos, memo):
    if pos >= ctx.trace._length:
        pos = _canonical_tail(ctx, pos)
    key = (f, pos)
    hit = memo.get(key)
    if hit is not None:
        return hit
    result = _HANDLERS[type(f)](ctx, f, pos, memo)
    memo[key] = result
    return result


def _h_atom(ctx, f, pos, memo):
    name = f.name
    if name.startswith(ETA_ATOM_PREFIX):
        suffix = name[len(ETA_ATOM_PREFIX):]
        if suffix.isdigit():
            return ctx.eta.lookup(int(suffix)), _EXACT
    trace = ctx.trace
    if pos >= trace._length:  # padded region of a finite trace
        return 0.0, _EXACT
    k = trace._index.get(name)
    if k is None:
        return trace.at(pos, name), _EXACT  # delegates the unknown-atom error
    return trace.states[pos][k], _EXACT


def _h_top(ctx, f, pos, memo):
    return 1.0, _EXACT


def _h_bot(ctx, f, pos, memo):
    return 0.0, _EXACT


def _h_not(ctx, f, pos, memo):
    v, ex = _eval(ctx, f.arg, pos, memo)
    return ctx.ops.neg(v), _flip(ex)


def _h_and(ctx, f, pos, memo):
    lv, lex = _eval(ctx, f.left, pos, memo)
    rv, rex = _eval(ctx, f.right, pos, memo)
    return ctx.ops.tnorm(lv, rv), _combine(lex, rex)


def _h_or(ctx, f, pos, memo):
    lv, lex = _eval(ctx, f.left, pos, memo)
    rv, rex = _eval(ctx, f.right, pos, memo)
    return ctx.ops.tconorm(lv, rv), _combine(lex, rex)


def _h_implies(ctx, f, pos, memo):
    lv, lex = _eval(ctx, f.left, pos, memo)
    rv, rex = _eval(ctx, f.right, pos, memo)
    return ctx.ops.implies(lv, rv), _combine(_flip(lex), rex)


def _h_weak_and(ctx, f, pos, memo):
    lv, lex = _eval(ctx, f.left, pos, memo)
    rv, rex = _eval(ctx, f.right, pos, memo)
    return algebra.weak_and(ctx.interp, lv, rv), _combine(lex, rex)


def _h_weak_or(ctx, f, pos, memo):
    lv, lex = _eval(ctx, f.left, pos, memo)
    rv, rex = _eval(ctx, f.right, pos, memo)
    return algebra.weak_or(ctx.interp, lv, rv), _combine(lex, rex)


def _h_next(ctx, f, pos, memo):
    # unwrap next-chains iteratively so X[k] sugar cannot blow the stack
    steps = 0
    inner = f
    while isinstance(inner, Next):
        steps += 1
        inner = inner.arg
    return _eval(ctx, inner, pos + steps, memo)


def _h_soon(ctx, f, pos, memo):
    eta = ctx.eta
    tconorm = ctx.ops.tconorm
    acc = None
    ex = _EXACT
    for d in range(1, eta.n_eta + 1):
        v, cex = _eval(ctx, f.arg, pos + d, memo)
        term = scale(v, eta.lookup(d - 1))
        acc = term if acc is None else tconorm(acc, term)
        ex = _combine(ex, cex)
    return acc, ex


def _f_window(ctx, arg, pos, t, memo):
    tconorm = ctx.ops.tconorm
    acc, ex = _eval(ctx, arg, pos, memo)
    for d in range(1, t + 1):
        v, cex = _eval(ctx, arg, pos + d, memo)
        acc = tconorm(acc, v)
        ex = _combine(ex, cex)
    return acc, ex


def _g_window(ctx, arg, pos, t, memo):
    tnorm = ctx.ops.tnorm
    acc, ex = _eval(ctx, arg, pos, memo)
    for d in range(1, t + 1):
        v, cex = _eval(ctx, arg, pos + d, memo)
        acc = tnorm(acc, v)
        ex = _combine(ex, cex)
    return acc, ex


def _h_eventually_b(ctx, f, pos, memo):
    return _f_window(ctx, f.arg, pos, f.bound, memo)


def _h_always_b(ctx, f, pos, memo):
    return _g_window(ctx, f.arg, pos, f.bound, memo)


def _h_within(ctx, f, pos, memo):
    # within t: satisfied inside the next t instants at full weight, or in the
    # following n_eta - 1 instants at a decreasing penalty
    t = f.bound
    eta = ctx.eta
    tconorm = ctx.ops.tconorm
    acc = None
    ex = _EXACT
    for d in range(t + eta.n_eta):
        v, cex = _eval(ctx, f.arg, pos + d, memo)
        acc_term = scale(v, eta.lookup(d - t))
        acc = acc_term if acc is None else tconorm(acc, acc_term)
        ex = _combine(ex, cex)
    return acc, ex


def _h_lasts(ctx, f, pos, memo):
    t = f.bound
    eta = ctx.eta
    tnorm = ctx.ops.tnorm
    # prefix folds give every G over a shorter window in one pass
    v, ex = _eval(ctx, f.arg, pos, memo)
    prefix = [v]
    for d in range(1, t + 1):
        w, cex = _eval(ctx, f.arg, pos + d, memo)
        prefix.append(tnorm(prefix[-1], w))
        ex = _combine(ex, cex)
    best = None
    for j in range(min(t, eta.n_eta - 1) + 1):
        cand = scale(prefix[t - j], eta.lookup(j))
        if best is None or cand > best:
            best = cand
    return best, ex


def _window_values(ctx, arg, pos, t, memo):
    values = []
    ex = _EXACT
    for d in range(t + 1):
        v, cex = _eval(ctx, arg, pos + d, memo)
        values.append(v)
        ex = _combine(ex, cex)
    return values, ex


def _ag_window(ctx, arg, pos, t, memo, counter=None):
    values, ex = _window_values(ctx, arg, pos, t, memo)
    value = _almost_always_value(ctx.interp, ctx.ops, ctx.eta, values, counter)
    return value, ex


def _h_almost_always_b(ctx, f, pos, memo):
    return _ag_window(ctx, f.arg, pos, f.bound, memo)


def _u_window(ctx, left, right, pos, t, memo):
    tnorm = ctx.ops.tnorm
    best, ex = _eval(ctx, right, pos, memo)
    prefix = None
    for k in range(1, t + 1):
        pv, pex = _eval(ctx, left, pos + k - 1, memo)
        prefix = pv if prefix is None else tnorm(prefix, pv)
        rv, rex = _eval(ctx, right, pos + k, memo)
        cand = tnorm(prefix, rv)
        if cand > best:
            best = cand
        ex = _combine(ex, _combine(pex, rex))
    return best, ex


def _au_window(ctx, left, right, pos, t, memo):
    tnorm = ctx.ops.tnorm
    best, ex = _eval(ctx, right, pos, memo)
    values: list[float] = []
    for k in range(1, t + 1):
        pv, pex = _eval(ctx, left, pos + k - 1, memo)
        values.append(pv)
        relaxed = _almost_always_value(ctx.interp, ctx.ops, ctx.eta, values)
        rv, rex = _eval(ctx, right, pos + k, memo)
        cand = tnorm(relaxed, rv)
        if cand > best:
            best = cand
        ex = _combine(ex, _combine(pex, rex))
    return best, ex


def _h_until_b(ctx, f, pos, memo):
    return _u_window(ctx, f.left, f.right, pos, f.bound, memo)


def _h_almost_until_b(ctx, f, pos, memo):
    return _au_window(ctx, f.left, f.right, pos, f.bound, memo)


def _h_scale(ctx, f, pos, memo):
    if not 1 <= f.index < ctx.eta.n_eta:
        raise ScaleIndexOutOfRange(
            f"scaling index {f.index} outside 1..{ctx.eta.n_eta - 1}"
        )
    v, ex = _eval(ctx, f.arg, pos, memo)
    return scale(v, ctx.eta.lookup(f.index)), ex


# -- unbounded operators -----------------------------------------------------


def _largest_window(ctx, pos: int) -> int:
    return max(0, len(ctx.trace) - 1 - pos)


def _suffix_values(ctx, arg, pos, memo):
    """Child values along the suffix: the pre-loop stretch and one period."""
    trace = ctx.trace
    start = trace.resolve(pos)
    ls = trace.loop_start
    span = trace.loop_length
    prefix = []
    for p in range(start, ls):
        prefix.append(_eval(ctx, arg, p, memo)[0])
    loop_base = max(start, ls)
    loop = [_eval(ctx, arg, loop_base + d, memo)[0] for d in range(span)]
    return prefix, loop


def _unb_always(ctx, arg, pos, memo):
    prefix, loop = _suffix_values(ctx, arg, pos, memo)
    if ctx.interp in _IDEMPOTENT:
        return min(prefix + loop)
    if all(v == 1.0 for v in loop):
        return _fold_tnorm(ctx.ops, prefix) if prefix else 1.0
    return 0.0  # any loop value below 1 recurs forever and drives the product to 0


def _unb_eventually(ctx, arg, pos, memo):
    prefix, loop = _suffix_values(ctx, arg, pos, memo)
    if ctx.interp in _IDEMPOTENT:
        return max(prefix + loop)
    if all(v == 0.0 for v in loop):
        if not prefix:
            return 0.0
        acc = prefix[0]
        for v in prefix[1:]:
            acc = ctx.ops.tconorm(acc, v)
        return acc
    return 1.0  # a positive loop value recurs forever and saturates the sum


def _unb_almost_always(ctx, arg, pos, memo):
    prefix, loop = _suffix_values(ctx, arg, pos, memo)
    eta = ctx.eta
    best = None
    if ctx.interp in _IDEMPOTENT:
        loop_min = min(loop)
        sp = sorted(prefix)
        for j in range(eta.n_eta):
            if j < len(sp):
                gj = sp[j] if sp[j] < loop_min else loop_min
            else:
                gj = loop_min  # loop values recur forever; dropping them is futile
            cand = scale(gj, eta.lookup(j))
            if best is None or cand > best:
                best = cand
        return best
    if all(v == 1.0 for v in loop):
        sp = sorted(prefix)
        for j in range(eta.n_eta):
            rest = sp[j:]
            gj = _fold_tnorm(ctx.ops, rest) if rest else 1.0
            cand = scale(gj, eta.lookup(j))
            if best is None or cand > best:
                best = cand
        return best
    return 0.0


def _loop_shape(ctx, pos):
    trace = ctx.trace
    start = trace.resolve(pos)
    rel_prefix = max(0, trace.loop_start - start)
    return start, rel_prefix, trace.loop_length


def _unb_until(ctx, left, right, pos, memo):
    # the running prefix product never increases, so every candidate one full
    # loop later is dominated; scanning the pre-loop stretch plus one period
    # reaches the exact limit
    tnorm = ctx.ops.tnorm
    start, rel_prefix, span = _loop_shape(ctx, pos)
    best = _eval(ctx, right, start, memo)[0]
    prefix_prod = None
    for k in range(1, rel_prefix + span + 1):
        pv = _eval(ctx, left, start + k - 1, memo)[0]
        prefix_prod = pv if prefix_prod is None else tnorm(prefix_prod, pv)
        if prefix_prod <= best:
            break  # no later candidate can beat the product that caps it
        rv = _eval(ctx, right, start + k, memo)[0]
        cand = tnorm(prefix_prod, rv)
        if cand > best:
            best = cand
    return best


def _unb_almost_until(ctx, left, right, pos, memo):
    # same dominance argument; once the window spans n_eta values the relaxed
    # product is non-increasing in the window, so one extra period suffices
    tnorm = ctx.ops.tnorm
    eta = ctx.eta
    start, rel_prefix, span = _loop_shape(ctx, pos)
    best = _eval(ctx, right, start, memo)[0]
    values: list[float] = []
    k_max = max(rel_prefix, eta.n_eta) + span
    for k in range(1, k_max + 1):
        values.append(_eval(ctx, left, start + k - 1, memo)[0])
        relaxed = _almost_always_value(ctx.interp, ctx.ops, eta, values)
        rv = _eval(ctx, right, start + k, memo)[0]
        cand = tnorm(relaxed, rv)
        if cand > best:
            best = cand
    return best


def _unbounded_value(ctx, f, pos, memo):
    if isinstance(f, Always):
        return _unb_always(ctx, f.arg, pos, memo)
    if isinstance(f, Eventually):
        return _unb_eventually(ctx, f.arg, pos, memo)
    if isinstance(f, AlmostAlways):
        return _unb_almost_always(ctx, f.arg, pos, memo)
    if isinstance(f, Until):
        return _unb_until(ctx, f.left, f.right, pos, memo)
    if isinstance(f, AlmostUntil):
        return _unb_almost_until(ctx, f.left, f.right, pos, memo)
    raise TypeError(f"{type(f).__name__} has no unbounded limit form")


def _h_eventually(ctx, f, pos, memo):
    if ctx.trace.is_lasso:
        return _unbounded_value(ctx, f, pos, memo), _EXACT
    v, ex = _f_window(ctx, f.arg, pos, _largest_window(ctx, pos), memo)
    return v, _combine(ex, _LOWER)


def _h_always(ctx, f, pos, memo):
    if ctx.trace.is_lasso:
        return _unbounded_value(ctx, f, pos, memo), _EXACT
    v, ex = _g_window(ctx, f.arg, pos, _largest_window(ctx, pos), memo)
    return v, _combine(ex, _UPPER)


def _h_almost_always(ctx, f, pos, memo):
    if ctx.trace.is_lasso:
        return _unbounded_value(ctx, f, pos, memo), _EXACT
    v, ex = _ag_window(ctx, f.arg, pos, _largest_window(ctx, pos), memo)
    return v, _APPROX  # not monotone in the horizon, so no bound direction


def _h_until(ctx, f, pos, memo):
    if ctx.trace.is_lasso:
        return _unbounded_value(ctx, f, pos, memo), _EXACT
    v, ex = _u_window(ctx, f.left, f.right, pos, _largest_window(ctx, pos), memo)
    return v, _combine(ex, _LOWER)


def _h_almost_until(ctx, f, pos, memo):
    if ctx.trace.is_lasso:
        return _unbounded_value(ctx, f, pos, memo), _EXACT
    v, ex = _au_window(ctx, f.left, f.right, pos, _largest_window(ctx, pos), memo)
    return v, _combine(ex, _LOWER)


_HANDLERS = {
    Atom: _h_atom,
    Top: _h_top,
    Bot: _h_bot,
    Not: _h_not,
    And: _h_and,
    Or: _h_or,
    Implies: _h_implies,
    WeakAnd: _h_weak_and,
    WeakOr: _h_weak_or,
    Next: _h_next,
    Soon: _h_soon,
    Eventually: _h_eventually,
    EventuallyB: _h_eventually_b,
    Always: _h_always,
    AlwaysB: _h_always_b,
    AlmostAlways: _h_almost_always,
    AlmostAlwaysB: _h_almost_always_b,
    Lasts: _h_lasts,
    Within: _h_within,
    Until: _h_until,
    UntilB: _h_until_b,
    AlmostUntil: _h_almost_until,
    AlmostUntilB: _h_almost_until_b,
    Scale: _h_scale,
}


# ---------------------------------------------------------------------------
# Public entry points
# ---------------------------------------------------------------------------


def evaluate(ctx: EvalContext, f: Formula, pos: int = 0) -> EvalResult:
    """The truth degree of ``f`` along the trace from position ``pos``."""
    if pos < 0:
        raise PositionOutOfRange(f"negative position {pos}")
    trace = ctx.trace
    if (
        not trace.is_lasso
        and pos >= len(trace)
        and ctx.finite_policy is FinitePolicy.STRICT
    ):
        raise PositionOutOfRange(
            f"position {pos} past the end of a {len(trace)}-state finite trace"
        )
    value, exactness = _eval(ctx, f, pos, {})
    return EvalResult(value, exactness)


def almost_always_fast(
    ctx: EvalContext,
    phi: Formula,
    pos: int,
    t: int,
    counter: Optional[ComparisonCounter] = None,
) -> TruthDegree:
    """Bounded almost-always over the window pos..pos+t.

    One pass collects the child evaluations, a bounded selection finds the
    candidate drop sets, and each avoidance count contributes one weighted
    product; the idempotent interpretations read the product straight off the
    selection.
    """
    memo: dict = {}
    values, _ = _window_values(ctx, phi, pos, t, memo)
    return _almost_always_value(ctx.interp, ctx.ops, ctx.eta, values, counter)


def eval_unbounded_lasso(ctx: EvalContext, f: Formula, pos: int = 0) -> TruthDegree:
    """Exact limit of an unbounded-headed formula on a lasso trace."""
    if not ctx.trace.is_lasso:
        raise NotALasso("unbounded limits need a lasso trace")
    if type(f) not in (Always, Eventually, AlmostAlways, Until, AlmostUntil):
        raise TypeError(f"{type(f).__name__} is not an unbounded operator")
    return _unbounded_value(ctx, f, pos, {})
