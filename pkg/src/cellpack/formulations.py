"""Mathematical-programming formulations as LP-format text, plus exact checking.

Three formulations of the same problem are emitted:

* ``basic`` -- mixed-integer: placement binaries ``x_i_j_k`` (square k in row
  i, column j) with continuous row heights ``y_i`` and column widths ``z_j``.
* ``sorted`` -- integer-linear over the same binaries; restricting the search
  to layouts whose squares shrink rightward and upward lets the first row and
  column express the objective and width directly.
* ``rc`` -- integer-quadratic over just ``mu_i`` / ``nu_i`` (square i sits in
  the first column / first row): 2n binaries instead of n^3, at the price of
  one bilinear constraint per square.

Emission is byte-deterministic, and :func:`check_assignment` re-evaluates the
emitted rows in exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import Instance, Layout

KINDS = ("basic", "sorted", "rc")
VARIANTS = ("default", "relaxed")

LinTerm = tuple[int, str]
QuadTerm = tuple[int, str, str]


@dataclass(frozen=True)
class Row:
    """One named constraint: linear terms, optional bilinear terms, sense, rhs."""

    name: str
    terms: tuple[LinTerm, ...]
    sense: str
    rhs: int
    qterms: tuple[QuadTerm, ...] = ()


@dataclass(frozen=True)
class Bound:
    name: str
    low: int
    high: int


@dataclass(frozen=True)
class ModelDocument:
    """One emitted formulation: LP text plus the structured rows behind it."""

    kind: str
    text: str
    variable_count: int
    constraint_count: int
    objective: tuple[LinTerm, ...]
    rows: tuple[Row, ...]
    binaries: tuple[str, ...]
    continuous: tuple[str, ...] = ()
    variant: str = "default"


def _x(i: int, j: int, k: int) -> str:
    return f"x_{i}_{j}_{k}"


def _basic_parts(inst: Instance):
    n, b = inst.n, inst.strip_width
    total = sum(inst.lengths)
    rng = range(1, n + 1)
    binaries = tuple(_x(i, j, k) for i in rng for j in rng for k in rng)
    continuous = tuple(f"y_{i}" for i in rng) + tuple(f"z_{j}" for j in rng)
    objective = tuple((1, f"y_{i}") for i in rng)
    rows: list[Row] = []
    for k in rng:
        rows.append(
            Row(f"assign_{k}", tuple((1, _x(i, j, k)) for i in rng for j in rng), "=", 1)
        )
    for i in rng:
        for j in rng:
            rows.append(Row(f"cell_{i}_{j}", tuple((1, _x(i, j, k)) for k in rng), "<=", 1))
    for i in rng:
        for j in rng:
            terms = ((1, f"y_{i}"),) + tuple((-inst.lengths[k - 1], _x(i, j, k)) for k in rng)
            rows.append(Row(f"rowh_{i}_{j}", terms, ">=", 0))
    for i in rng:
        for j in rng:
            terms = ((1, f"z_{j}"),) + tuple((-inst.lengths[k - 1], _x(i, j, k)) for k in rng)
            rows.append(Row(f"colw_{i}_{j}", terms, ">=", 0))
    rows.append(Row("width", tuple((1, f"z_{j}") for j in rng), "<=", b))
    bounds = tuple(Bound(name, 0, total) for name in continuous)
    return objective, tuple(rows), binaries, continuous, bounds


def _sorted_parts(inst: Instance):
    n, b = inst.n, inst.strip_width
    rng = range(1, n + 1)
    length = lambda k: inst.lengths[k - 1]
    binaries = tuple(_x(i, j, k) for i in rng for j in rng for k in rng)
    objective = tuple((length(k), _x(i, 1, k)) for i in rng for k in rng)
    rows: list[Row] = []
    for k in rng:
        rows.append(
            Row(f"assign_{k}", tuple((1, _x(i, j, k)) for i in rng for j in rng), "=", 1)
        )
    for i in rng:
        for j in rng:
            rows.append(Row(f"cell_{i}_{j}", tuple((1, _x(i, j, k)) for k in rng), "<=", 1))
    rows.append(Row("width", tuple((length(k), _x(1, j, k)) for j in rng for k in rng), "<=", b))
    for i in rng:
        for j in range(2, n + 1):
            terms = tuple((length(k), _x(i, j - 1, k)) for k in rng) + tuple(
                (-length(k), _x(i, j, k)) for k in rng
            )
            rows.append(Row(f"rsort_{i}_{j}", terms, ">=", 0))
    for j in rng:
        for i in range(2, n + 1):
            terms = tuple((length(k), _x(i - 1, j, k)) for k in rng) + tuple(
                (-length(k), _x(i, j, k)) for k in rng
            )
            rows.append(Row(f"csort_{i}_{j}", terms, ">=", 0))
    return objective, tuple(rows), binaries, (), ()


def _rc_parts(inst: Instance, variant: str):
    n, b = inst.n, inst.strip_width
    rng = range(1, n + 1)
    length = lambda k: inst.lengths[k - 1]
    binaries = tuple(f"mu_{i}" for i in rng) + tuple(f"nu_{i}" for i in rng)
    objective = tuple((length(i), f"mu_{i}") for i in rng)
    rows: list[Row] = [
        Row("width", tuple((length(i), f"nu_{i}") for i in rng), "<=", b),
        Row("base_mu", ((1, "mu_1"),), "=", 1),
        Row("base_nu", ((1, "nu_1"),), "=", 1),
    ]
    for i in range(2, n + 1):
        qterms = tuple(
            (1, f"mu_{j}", f"nu_{jj}") for j in range(1, i) for jj in range(1, i)
        )
        rows.append(
            Row(f"rc_{i}", ((1, f"mu_{i}"), (1, f"nu_{i}")), ">=", i, qterms=qterms)
        )
        if variant != "relaxed":
            rows.append(Row(f"cap_{i}", ((1, f"mu_{i}"), (1, f"nu_{i}")), "<=", 1))
    return objective, tuple(rows), binaries, (), ()


def _format_expr(terms: tuple[LinTerm, ...], qterms: tuple[QuadTerm, ...] = ()) -> str:
    parts: list[str] = []
    for coef, name in terms:
        sign = "-" if coef < 0 else "+"
        mag = abs(coef)
        body = name if mag == 1 else f"{mag} {name}"
        parts.append(f"{sign} {body}")
    if qterms:
        qparts = []
        for coef, a, c in qterms:
            body = f"{a} * {c}" if coef == 1 else f"{coef} {a} * {c}"
            qparts.append(body)
        parts.append("+ [ " + " + ".join(qparts) + " ]")
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else text


def _render(
    kind: str,
    inst: Instance,
    objective,
    rows,
    binaries,
    bounds,
    variant: str,
) -> str:
    lines = [f"\\ {kind} formulation ({variant}): {inst.n} squares, strip width {inst.strip_width}"]
    lines.append("Minimize")
    lines.append(f" obj: {_format_expr(objective)}")
    lines.append("Subject To")
    for row in rows:
        lines.append(f" {row.name}: {_format_expr(row.terms, row.qterms)} {row.sense} {row.rhs}")
    if bounds:
        lines.append("Bounds")
        for bound in bounds:
            lines.append(f" {bound.low} <= {bound.name} <= {bound.high}")
    lines.append("Binaries")
    for start in range(0, len(binaries), 8):
        lines.append(" " + " ".join(binaries[start : start + 8]))
    lines.append("End")
    return "\n".join(lines) + "\n"


def emit_model(inst: Instance, kind: str, variant: str = "default") -> ModelDocument:
    """Emit one formulation for an instance; output bytes depend only on inputs."""
    if kind not in KINDS:
        raise ValueError(f"unknown model kind {kind!r}; expected one of {KINDS}")
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    if variant == "relaxed" and kind != "rc":
        raise ValueError("the relaxed variant only applies to the rc kind")
    if kind == "basic":
        objective, rows, binaries, continuous, bounds = _basic_parts(inst)
    elif kind == "sorted":
        objective, rows, binaries, continuous, bounds = _sorted_parts(inst)
    else:
        objective, rows, binaries, continuous, bounds = _rc_parts(inst, variant)
    text = _render(kind, inst, objective, rows, binaries, bounds, variant)
    return ModelDocument(
        kind=kind,
        text=text,
        variable_count=len(binaries) + len(continuous),
        constraint_count=len(rows),
        objective=objective,
        rows=rows,
        binaries=binaries,
        continuous=tuple(continuous),
        variant=variant,
    )


def emit_basic_model(inst: Instance) -> ModelDocument:
    return emit_model(inst, "basic")


def emit_sorted_model(inst: Instance) -> ModelDocument:
    return emit_model(inst, "sorted")


def emit_rc_model(inst: Instance, variant: str = "default") -> ModelDocument:
    return emit_model(inst, "rc", variant)


def check_assignment(
    doc: ModelDocument, inst: Instance, assignment: Mapping[str, int]
) -> tuple[bool, int, list[str]]:
    """Evaluate every row of a model under an assignment, exactly.

    Returns feasibility, the objective value, and the names of violated rows
    in emission order.  Binary variables must all be present with values 0 or
    1; the basic kind additionally needs its continuous variables.
    """
    binset = set(doc.binaries)
    expected = 2 * inst.n if doc.kind == "rc" else inst.n ** 3
    if len(binset) != expected:
        raise ValueError("document does not match the instance")

    known = binset | set(doc.continuous)
    for name in assignment:
        if name not in known:
            raise ValueError(f"unknown variable {name!r}")
    values: dict[str, int] = {}
    for name in doc.binaries:
        if name not in assignment:
            raise ValueError(f"assignment missing binary variable {name!r}")
        value = int(assignment[name])
        if value not in (0, 1):
            raise ValueError(f"non-binary value {assignment[name]!r} for binary variable {name!r}")
        values[name] = value
    for name in doc.continuous:
        if name not in assignment:
            raise ValueError(f"assignment missing variable {name!r}")
        values[name] = int(assignment[name])

    violated: list[str] = []
    for row in doc.rows:
        lhs = sum(coef * values[name] for coef, name in row.terms)
        lhs += sum(coef * values[a] * values[c] for coef, a, c in row.qterms)
        ok = (
            lhs <= row.rhs
            if row.sense == "<="
            else lhs >= row.rhs
            if row.sense == ">="
            else lhs == row.rhs
        )
        if not ok:
            violated.append(row.name)
    objective = sum(coef * values[name] for coef, name in doc.objective)
    return not violated, objective, violated


def assignment_from_layout(kind: str, inst: Instance, layout: Layout) -> dict[str, int]:
    """Variable assignment encoding a layout in the given formulation.

    Filler labels occupy cells but carry no variables; for the basic kind the
    continuous row heights and column widths are set to their tight values.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown model kind {kind!r}; expected one of {KINDS}")
    n = inst.n
    if layout.p > n or layout.q > n:
        raise ValueError("layout does not fit the n x n placement grid of the model")
    rng = range(1, n + 1)
    if kind == "rc":
        first_col = {layout.cells[i][0] for i in range(layout.p)}
        first_row = set(layout.cells[0])
        asg = {f"mu_{i}": int(i in first_col) for i in rng}
        asg.update({f"nu_{i}": int(i in first_row) for i in rng})
        return asg

    asg = {_x(i, j, k): 0 for i in rng for j in rng for k in rng}
    for i in range(layout.p):
        for j in range(layout.q):
            label = layout.cells[i][j]
            if label <= n:
                asg[_x(i + 1, j + 1, label)] = 1
    if kind == "basic":
        for i in rng:
            row = layout.cells[i - 1] if i <= layout.p else ()
            asg[f"y_{i}"] = max((inst.side(v) for v in row), default=0)
        for j in rng:
            col = (
                tuple(layout.cells[i][j - 1] for i in range(layout.p))
                if j <= layout.q
                else ()
            )
            asg[f"z_{j}"] = max((inst.side(v) for v in col), default=0)
    return asg


def parse_assignment_text(text: str, source: str = "<string>") -> dict[str, int]:
    """Parse a two-column ``name value`` assignment file; '#' starts a comment."""
    values: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(
                f"{source}, line {lineno}: expected 'name value', got {raw.strip()!r}"
            )
        name, tok = parts
        try:
            value = int(tok)
        except ValueError:
            raise ValueError(
                f"{source}, line {lineno}: value must be an integer, got {tok!r}"
            ) from None
        if name in values:
            raise ValueError(f"{source}, line {lineno}: duplicate variable {name!r}")
        values[name] = value
    return values
