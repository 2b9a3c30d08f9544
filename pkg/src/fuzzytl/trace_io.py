"""Trace files (JSON and CSV) and the command line's avoiding-table forms."""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Optional

from .core import AvoidingFunction, Trace
from .errors import ValidationError
from .parser import KEYWORDS

_ATOM_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def _check_atom_names(atoms) -> tuple[str, ...]:
    names = tuple(atoms)
    for name in names:
        if not isinstance(name, str) or not _ATOM_RE.match(name) or name in KEYWORDS:
            raise ValidationError(f"{name!r} is not a usable atom name")
    return names


def trace_from_json(text: str) -> Trace:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"bad JSON trace: {exc}") from exc
    if not isinstance(doc, dict) or "atoms" not in doc or "states" not in doc:
        raise ValidationError("JSON trace needs 'atoms' and 'states' keys")
    atoms = _check_atom_names(doc["atoms"])
    states = doc["states"]
    if not isinstance(states, list) or not all(isinstance(r, list) for r in states):
        raise ValidationError("'states' must be a list of rows")
    loop = doc.get("loop")
    if loop is not None and not isinstance(loop, int):
        raise ValidationError(f"'loop' must be an integer index, got {loop!r}")
    return Trace(atoms, tuple(tuple(row) for row in states), loop)


def trace_from_csv(text: str) -> Trace:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValidationError("empty CSV trace")
    loop: Optional[int] = None
    if lines[0].startswith("#"):
        directive = lines.pop(0).lstrip("#").strip()
        m = re.match(r"loop\s*=\s*(\d+)\Z", directive)
        if not m:
            raise ValidationError(f"bad directive line {directive!r}; expected 'loop=K'")
        loop = int(m.group(1))
        if not lines:
            raise ValidationError("CSV trace has a directive but no header")
    atoms = _check_atom_names(cell.strip() for cell in lines[0].split(","))
    rows = []
    for ln in lines[1:]:
        cells = [cell.strip() for cell in ln.split(",")]
        try:
            rows.append(tuple(float(cell) for cell in cells))
        except ValueError as exc:
            raise ValidationError(f"bad CSV value in row {ln!r}") from exc
    return Trace(atoms, tuple(rows), loop)


def load_trace(path: str | Path) -> Trace:
    text = Path(path).read_text()
    head = text.lstrip()[:1]
    if head == "{":
        return trace_from_json(text)
    return trace_from_csv(text)


def trace_to_json(trace: Trace) -> str:
    doc: dict = {"atoms": list(trace.atoms), "states": [list(row) for row in trace.states]}
    if trace.loop_start is not None:
        doc["loop"] = trace.loop_start
    return json.dumps(doc)


def trace_to_csv(trace: Trace) -> str:
    lines = []
    if trace.loop_start is not None:
        lines.append(f"# loop={trace.loop_start}")
    lines.append(",".join(trace.atoms))
    for row in trace.states:
        lines.append(",".join(repr(v) for v in row))
    return "\n".join(lines) + "\n"


def save_trace(trace: Trace, path: str | Path) -> None:
    path = Path(path)
    if path.suffix.lower() == ".csv":
        path.write_text(trace_to_csv(trace))
    else:
        path.write_text(trace_to_json(trace))


def parse_eta_spec(spec: str) -> AvoidingFunction:
    """``table:v0,v1,...``, ``gauss:K`` (exp(-(n/K)^2) tabulated), or ``crisp``."""
    if spec == "crisp":
        return AvoidingFunction.crisp()
    if spec.startswith("table:"):
        body = spec[len("table:"):]
        try:
            values = tuple(float(v) for v in body.split(","))
        except ValueError as exc:
            raise ValidationError(f"bad eta table {body!r}") from exc
        return AvoidingFunction(values)
    if spec.startswith("gauss:"):
        body = spec[len("gauss:"):]
        if not body.isdigit():
            raise ValidationError(f"bad gaussian width {body!r}")
        return AvoidingFunction.gaussian(int(body))
    raise ValidationError(
        f"unknown eta spec {spec!r}; use 'table:v0,v1,...', 'gauss:K', or 'crisp'"
    )
