"""Core domain types: truth degrees, formulas, traces, avoiding functions.

Everything here is immutable after construction and safe to share between
concurrent readers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional

from .errors import NotALasso, PositionOutOfRange, UnknownAtom, ValidationError

#: A truth degree is a plain float in [0, 1].
TruthDegree = float

#: Atoms with this prefix resolve to avoiding-table entries, not trace lookups.
ETA_ATOM_PREFIX = "__eta_"


def degree(value: float) -> TruthDegree:
    """Validate and return a truth degree; rejects anything outside [0, 1]."""
    value = float(value)
    if math.isnan(value) or not 0.0 <= value <= 1.0:
        raise ValidationError(f"truth degree {value!r} outside [0, 1]")
    return value


class Interpretation(Enum):
    """Which family of connective operations evaluation uses."""

    ZADEH = "zadeh"
    GODEL = "godel"
    LUKASIEWICZ = "lukasiewicz"
    PRODUCT = "product"


# ---------------------------------------------------------------------------
# Formulas
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Formula:
    """Base class of the abstract syntax tree; all nodes are frozen."""


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class Top(Formula):
    """Constant truth 1."""


@dataclass(frozen=True)
class Bot(Formula):
    """Constant truth 0."""


@dataclass(frozen=True)
class Not(Formula):
    arg: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class WeakAnd(Formula):
    """Lattice conjunction (pointwise minimum under every interpretation)."""

    left: Formula
    right: Formula


@dataclass(frozen=True)
class WeakOr(Formula):
    """Lattice disjunction (pointwise maximum under every interpretation)."""

    left: Formula
    right: Formula


def _check_bound(t: int) -> None:
    if not isinstance(t, int) or isinstance(t, bool) or t < 0:
        raise ValidationError(f"temporal bound must be a natural number, got {t!r}")


@dataclass(frozen=True)
class Next(Formula):
    arg: Formula


@dataclass(frozen=True)
class Soon(Formula):
    """Next, relaxed: tolerates up to n_eta instants of delay with penalties."""

    arg: Formula


@dataclass(frozen=True)
class Eventually(Formula):
    arg: Formula


@dataclass(frozen=True)
class EventuallyB(Formula):
    bound: int
    arg: Formula

    def __post_init__(self) -> None:
        _check_bound(self.bound)


@dataclass(frozen=True)
class Always(Formula):
    arg: Formula


@dataclass(frozen=True)
class AlwaysB(Formula):
    bound: int
    arg: Formula

    def __post_init__(self) -> None:
        _check_bound(self.bound)


@dataclass(frozen=True)
class AlmostAlways(Formula):
    arg: Formula


@dataclass(frozen=True)
class AlmostAlwaysB(Formula):
    bound: int
    arg: Formula

    def __post_init__(self) -> None:
        _check_bound(self.bound)


@dataclass(frozen=True)
class Lasts(Formula):
    """Holds for the next `bound` instants, possibly cut short near the end."""

    bound: int
    arg: Formula

    def __post_init__(self) -> None:
        _check_bound(self.bound)


@dataclass(frozen=True)
class Within(Formula):
    """Holds within `bound` instants, or a little later at a penalty."""

    bound: int
    arg: Formula

    def __post_init__(self) -> None:
        _check_bound(self.bound)


@dataclass(frozen=True)
class Until(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class UntilB(Formula):
    bound: int
    left: Formula
    right: Formula

    def __post_init__(self) -> None:
        _check_bound(self.bound)


@dataclass(frozen=True)
class AlmostUntil(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class AlmostUntilB(Formula):
    bound: int
    left: Formula
    right: Formula

    def __post_init__(self) -> None:
        _check_bound(self.bound)


@dataclass(frozen=True)
class Scale(Formula):
    """Multiplies the child's degree by eta(index); 1 <= index < n_eta at eval time."""

    index: int
    arg: Formula

    def __post_init__(self) -> None:
        _check_bound(self.index)


def children(f: Formula) -> tuple[Formula, ...]:
    """Direct subformulas, left to right."""
    if isinstance(f, (Atom, Top, Bot)):
        return ()
    if hasattr(f, "arg"):
        return (f.arg,)
    return (f.left, f.right)


def with_children(f: Formula, new: tuple[Formula, ...]) -> Formula:
    """Rebuild the same node kind around replacement children."""
    if isinstance(f, (Atom, Top, Bot)):
        return f
    cls = type(f)
    if hasattr(f, "arg"):
        if hasattr(f, "bound"):
            return cls(f.bound, new[0])
        if hasattr(f, "index"):
            return cls(f.index, new[0])
        return cls(new[0])
    if hasattr(f, "bound"):
        return cls(f.bound, new[0], new[1])
    return cls(new[0], new[1])


def node_count(f: Formula) -> int:
    """Number of nodes in the tree (iterative; rewriting can build deep trees)."""
    count = 0
    stack = [f]
    while stack:
        node = stack.pop()
        count += 1
        stack.extend(children(node))
    return count


# ---------------------------------------------------------------------------
# Avoiding function
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AvoidingFunction:
    """Penalty table [eta(0), ..., eta(n_eta - 1)]; zero from n_eta onward.

    The stored table is the nonzero prefix: eta(0) = 1, strictly decreasing,
    every stored entry positive.
    """

    table: tuple[TruthDegree, ...]

    def __post_init__(self) -> None:
        table = tuple(degree(v) for v in self.table)
        object.__setattr__(self, "table", table)
        if not table:
            raise ValidationError("avoiding function table must be nonempty")
        if table[0] != 1.0:
            raise ValidationError(f"eta(0) must be 1, got {table[0]!r}")
        for i in range(1, len(table)):
            if not table[i] < table[i - 1]:
                raise ValidationError(
                    f"avoiding table must be strictly decreasing: eta({i - 1})={table[i - 1]!r} "
                    f"vs eta({i})={table[i]!r}"
                )
        if table[-1] <= 0.0:
            raise ValidationError("stored avoiding table holds the nonzero prefix only")

    @property
    def n_eta(self) -> int:
        return len(self.table)

    def lookup(self, i: int) -> TruthDegree:
        """eta(i): 1 for i <= 0, table value inside the prefix, 0 beyond."""
        if i <= 0:
            return 1.0
        if i < len(self.table):
            return self.table[i]
        return 0.0

    @classmethod
    def from_values(cls, values: Iterable[float]) -> "AvoidingFunction":
        return cls(tuple(values))

    @classmethod
    def crisp(cls) -> "AvoidingFunction":
        """n_eta = 1: no delay or avoidance is tolerated at all."""
        return cls((1.0,))

    @classmethod
    def gaussian(cls, width: int) -> "AvoidingFunction":
        """Table exp(-(n/width)^2) for n = 0..width; n_eta = width + 1."""
        if width < 1:
            raise ValidationError(f"gaussian width must be >= 1, got {width!r}")
        return cls(tuple(math.exp(-((n / width) ** 2)) for n in range(width + 1)))


# ---------------------------------------------------------------------------
# Traces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Trace:
    """A finite or lasso-shaped linear time structure.

    ``states[i][k]`` is the degree of ``atoms[k]`` at instant ``i``.  When
    ``loop_start`` is set the trace denotes the infinite path
    ``states[:loop_start] + cycle(states[loop_start:])``.
    """

    atoms: tuple[str, ...]
    states: tuple[tuple[TruthDegree, ...], ...]
    loop_start: Optional[int] = None
    _index: dict = field(default_factory=dict, compare=False, repr=False)
    _length: int = field(default=0, compare=False, repr=False)

    def __post_init__(self) -> None:
        atoms = tuple(self.atoms)
        object.__setattr__(self, "atoms", atoms)
        if len(set(atoms)) != len(atoms):
            raise ValidationError("duplicate atom names in trace")
        states = tuple(tuple(degree(v) for v in row) for row in self.states)
        object.__setattr__(self, "states", states)
        if not states:
            raise ValidationError("trace must have at least one state")
        for i, row in enumerate(states):
            if len(row) != len(atoms):
                raise ValidationError(
                    f"state {i} has {len(row)} entries for {len(atoms)} atoms"
                )
        if self.loop_start is not None:
            if not isinstance(self.loop_start, int) or not 0 <= self.loop_start < len(states):
                raise ValidationError(
                    f"loop start {self.loop_start!r} outside 0..{len(states) - 1}"
                )
        self._index.update({name: k for k, name in enumerate(atoms)})
        object.__setattr__(self, "_length", len(states))

    @property
    def is_lasso(self) -> bool:
        return self.loop_start is not None

    def __len__(self) -> int:
        return self._length

    @property
    def loop_length(self) -> int:
        if self.loop_start is None:
            raise NotALasso("finite trace has no loop")
        return len(self.states) - self.loop_start

    def resolve(self, pos: int) -> int:
        """Map a path position onto a stored state index (wrapping the loop)."""
        if pos < 0:
            raise PositionOutOfRange(f"negative position {pos}")
        if pos < len(self.states):
            return pos
        if self.loop_start is None:
            raise PositionOutOfRange(
                f"position {pos} past the end of a {len(self.states)}-state finite trace"
            )
        span = len(self.states) - self.loop_start
        return self.loop_start + (pos - self.loop_start) % span

    def at(self, pos: int, atom: str) -> TruthDegree:
        """The atom's degree at the resolved position."""
        k = self._index.get(atom)
        if k is None:
            raise UnknownAtom(f"atom {atom!r} not in trace (atoms: {', '.join(self.atoms)})")
        return self.states[self.resolve(pos)][k]
