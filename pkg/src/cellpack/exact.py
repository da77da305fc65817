"""Exact solvers over RC layouts.

Two pseudo-polynomial dynamic programs plus an exponential brute force:

* :func:`solve_dp` minimizes the height subject to a strip-width budget and
  recovers an optimal RC sequence by backtracking.
* :func:`solve_dp_low_memory` computes the same objective with two rolling
  table slices and no recovery.
* :func:`solve_ripp_width_dp` handles the rectangle generalization the other
  way round: it finds the smallest height budget whose best achievable width
  still fits the strip.
* :func:`brute_force_oracle` enumerates every RC sequence outright and is the
  reference the fast solvers are tested against.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .core import (
    ADD_COL,
    ADD_ROW,
    Instance,
    InstanceError,
    RCSequence,
    ceil_div,
    ceil_sqrt,
    eval_rc_sequence,
)

INF = math.inf

ORACLE_MAX_N = 20


@dataclass(frozen=True)
class RippInstance:
    """Rectangles whose widths and heights are each non-increasing, plus the strip width."""

    widths: tuple[int, ...]
    heights: tuple[int, ...]
    strip_width: int

    def __post_init__(self) -> None:
        n = len(self.widths)
        if n == 0 or len(self.heights) != n:
            raise InstanceError("widths and heights must be non-empty and equally long")
        for value in (*self.widths, *self.heights):
            if not isinstance(value, int) or value < 1:
                raise InstanceError(f"rectangle sides must be positive integers, got {value!r}")
        if any(a < b for a, b in zip(self.widths, self.widths[1:])):
            raise InstanceError("widths must be non-increasing")
        if any(a < b for a, b in zip(self.heights, self.heights[1:])):
            raise InstanceError("heights must be non-increasing")
        if not isinstance(self.strip_width, int) or self.widths[0] > self.strip_width:
            raise InstanceError(
                f"infeasible instance: widest rectangle {self.widths[0]} exceeds "
                f"strip width {self.strip_width}"
            )

    @property
    def n(self) -> int:
        return len(self.widths)

    def width_of(self, label: int) -> int:
        return self.widths[label - 1] if label <= len(self.widths) else 0

    def height_of(self, label: int) -> int:
        return self.heights[label - 1] if label <= len(self.heights) else 0


@dataclass(frozen=True)
class DpSolution:
    """Solver result: objective value plus the RC sequence that attains it."""

    objective: int
    shape: tuple[int, int]
    rc_sequence: RCSequence
    budget_used: int


def restricted_shapes(n: int) -> list[tuple[int, int]]:
    """Grid shapes that suffice to hold an optimal packing of n squares.

    Appending a row or column once every square is placed costs nothing, so
    any sequence has the same width and height as its shortest prefix covering
    all n squares.  The final append of such a prefix left fewer than n cells
    behind, which pins the shape: the last column append gives j = ceil(n/i)
    for each row count i, the last row append gives i = ceil(n/j) for each
    column count j.  Requiring both conditions at once (one j per i AND one i
    per j) looks tempting but drops optimal shapes; see the solver tests for
    a five-square counterexample.
    """
    shapes: list[tuple[int, int]] = []
    seen = set()
    for i in range(1, n + 1):
        j = ceil_div(n, i)
        if (i, j) not in seen:
            seen.add((i, j))
            shapes.append((i, j))
    for j in range(1, n + 1):
        i = ceil_div(n, j)
        if (i, j) not in seen:
            seen.add((i, j))
            shapes.append((i, j))
    return shapes


def solve_dp(inst: Instance) -> DpSolution:
    """Minimize packing height over all RC layouts by dynamic programming.

    State (i, j, k): squares 1..ij packed into i rows and j columns within
    width budget k.  A shape is entered either by adding its top row (height
    grows by that row's largest square) or its rightmost column (the budget
    shrinks by that column's largest square).  Only shapes below some
    restricted candidate are filled: sum(n/i) of them per sweep, so the table
    stays within O(n log n) cells per width budget.
    """
    n, b = inst.n, inst.strip_width
    l1 = inst.lengths[0]
    side = inst.side
    span = b - l1 + 1

    table: dict[tuple[int, int], list] = {}
    parent: dict[tuple[int, int], list] = {}

    def compute(i: int, j: int) -> None:
        if i == 1 and j == 1:
            table[1, 1] = [l1] * span
            parent[1, 1] = [None] * span
            return
        row_add = side((i - 1) * j + 1)
        col_need = side(i * (j - 1) + 1)
        up = table.get((i - 1, j))
        left = table.get((i, j - 1))
        vals = [INF] * span
        pars: list = [None] * span
        for k in range(span):
            via_row = up[k] + row_add if up is not None else INF
            kk = k - col_need
            via_col = left[kk] if (left is not None and kk >= 0) else INF
            if via_row == INF and via_col == INF:
                continue
            if via_row <= via_col:
                vals[k] = via_row
                pars[k] = ADD_ROW
            else:
                vals[k] = via_col
                pars[k] = ADD_COL
        table[i, j] = vals
        parent[i, j] = pars

    best: tuple[int, tuple[int, int]] | None = None

    def consider(i: int, j: int) -> None:
        nonlocal best
        value = table[i, j][span - 1]
        if value != INF and (best is None or value < best[0]):
            best = (value, (i, j))

    for i in range(1, n + 1):
        jmax = ceil_div(n, i)
        for j in range(1, jmax + 1):
            compute(i, j)
        consider(i, jmax)
    for j in range(1, n + 1):
        imax = ceil_div(n, j)
        for i in range(1, imax + 1):
            if (i, j) not in table:
                compute(i, j)
        consider(imax, j)

    assert best is not None  # the single-column shape is always feasible
    objective, (bi, bj) = best

    ops: list[str] = []
    i, j, k = bi, bj, span - 1
    while (i, j) != (1, 1):
        op = parent[i, j][k]
        ops.append(op)
        if op == ADD_ROW:
            i -= 1
        else:
            k -= side(i * (j - 1) + 1)
            j -= 1
    seq = RCSequence(tuple(reversed(ops)))
    width, height = eval_rc_sequence(seq, inst)
    assert height == objective and width <= b
    return DpSolution(objective=objective, shape=(bi, bj), rc_sequence=seq, budget_used=width)


def solve_dp_low_memory(inst: Instance) -> int:
    """Same objective as :func:`solve_dp` with two rolling slices; no recovery.

    Two sweeps cover the restricted shapes: one walks row counts up to n
    keeping only ceil(sqrt n) column entries alive per width budget (catching
    the shapes at most ceil(sqrt n) wide), the other is its transpose.
    Slices are indexed by the parity of the outer loop.
    """
    n, b = inst.n, inst.strip_width
    l1 = inst.lengths[0]
    side = inst.side
    span = b - l1 + 1
    root = ceil_sqrt(n)
    best = INF

    rows = [[[INF] * span for _ in range(root + 1)] for _ in range(2)]
    for i in range(1, n + 1):
        cur = rows[i % 2]
        prev = rows[(i - 1) % 2]
        for j in range(1, root + 1):
            slot = cur[j]
            if i == 1 and j == 1:
                for k in range(span):
                    slot[k] = l1
                continue
            row_add = side((i - 1) * j + 1)
            col_need = side(i * (j - 1) + 1)
            up = prev[j]
            left = cur[j - 1]
            for k in range(span):
                via_row = up[k] + row_add
                kk = k - col_need
                via_col = left[kk] if kk >= 0 else INF
                slot[k] = via_row if via_row <= via_col else via_col
        jc = ceil_div(n, i)
        if jc <= root and cur[jc][span - 1] < best:
            best = cur[jc][span - 1]

    cols = [[[INF] * span for _ in range(root + 1)] for _ in range(2)]
    for j in range(1, n + 1):
        cur = cols[j % 2]
        prev = cols[(j - 1) % 2]
        for i in range(1, root + 1):
            slot = cur[i]
            if i == 1 and j == 1:
                for k in range(span):
                    slot[k] = l1
                continue
            row_add = side((i - 1) * j + 1)
            col_need = side(i * (j - 1) + 1)
            up = cur[i - 1]
            left = prev[i]
            for k in range(span):
                via_row = up[k] + row_add
                kk = k - col_need
                via_col = left[kk] if kk >= 0 else INF
                slot[k] = via_row if via_row <= via_col else via_col
        ic = ceil_div(n, j)
        if ic <= root and cur[ic][span - 1] < best:
            best = cur[ic][span - 1]

    return int(best)


def eval_rc_sequence_rect(seq: RCSequence, rinst: RippInstance) -> tuple[int, int]:
    """Width and height of the packing an RC sequence describes for rectangles."""
    w = rinst.widths[0]
    h = rinst.heights[0]
    p = q = 1
    for op in seq.ops:
        lead = p * q + 1
        if op == ADD_ROW:
            h += rinst.height_of(lead)
            p += 1
        else:
            w += rinst.width_of(lead)
            q += 1
    return w, h


def solve_ripp_width_dp(rinst: RippInstance) -> DpSolution:
    """Minimize packing height for sorted rectangles via the width table.

    State (i, j, k): the smallest achievable width when rectangles 1..ij fill
    i rows and j columns without the height exceeding k.  The objective is the
    smallest k, scanned upward per candidate shape, whose width fits the
    strip.
    """
    n, b = rinst.n, rinst.strip_width
    h1 = rinst.heights[0]
    w1 = rinst.widths[0]
    hsum = sum(rinst.heights)
    span = hsum - h1 + 1

    table: dict[tuple[int, int], list] = {}
    parent: dict[tuple[int, int], list] = {}

    def compute(i: int, j: int) -> None:
        if i == 1 and j == 1:
            table[1, 1] = [w1] * span
            parent[1, 1] = [None] * span
            return
        col_add = rinst.width_of(i * (j - 1) + 1)
        row_need = rinst.height_of((i - 1) * j + 1)
        up = table.get((i - 1, j))
        left = table.get((i, j - 1))
        vals = [INF] * span
        pars: list = [None] * span
        for k in range(span):
            kk = k - row_need
            via_row = up[kk] if (up is not None and kk >= 0) else INF
            via_col = left[k] + col_add if left is not None else INF
            if via_row == INF and via_col == INF:
                continue
            if via_row <= via_col:
                vals[k] = via_row
                pars[k] = ADD_ROW
            else:
                vals[k] = via_col
                pars[k] = ADD_COL
        table[i, j] = vals
        parent[i, j] = pars

    for i in range(1, n + 1):
        for j in range(1, ceil_div(n, i) + 1):
            compute(i, j)
    for j in range(1, n + 1):
        for i in range(1, ceil_div(n, j) + 1):
            if (i, j) not in table:
                compute(i, j)

    best: tuple[int, tuple[int, int]] | None = None
    for (i, j) in restricted_shapes(n):
        vals = table[i, j]
        for k in range(span):
            if vals[k] <= b:
                budget = h1 + k
                if best is None or budget < best[0]:
                    best = (budget, (i, j))
                break

    assert best is not None  # one tall column always fits the strip
    objective, (bi, bj) = best

    ops: list[str] = []
    i, j, k = bi, bj, objective - h1
    while (i, j) != (1, 1):
        op = parent[i, j][k]
        ops.append(op)
        if op == ADD_ROW:
            k -= rinst.height_of((i - 1) * j + 1)
            i -= 1
        else:
            j -= 1
    seq = RCSequence(tuple(reversed(ops)))
    width, height = eval_rc_sequence_rect(seq, rinst)
    assert height == objective and width <= b
    return DpSolution(objective=objective, shape=(bi, bj), rc_sequence=seq, budget_used=width)


def brute_force_oracle(inst: Instance, max_n: int = ORACLE_MAX_N) -> DpSolution:
    """Enumerate every RC sequence on every restricted shape; exact but exponential.

    Ties on height are broken by the lexicographically smallest sequence with
    row-append ordered before column-append.
    """
    if inst.n > max_n:
        raise ValueError(f"instance too large for oracle (n={inst.n} > {max_n})")
    b = inst.strip_width
    best: tuple[tuple[int, tuple[int, ...]], RCSequence, tuple[int, int], int] | None = None
    for (p, q) in restricted_shapes(inst.n):
        length = p + q - 2
        for rows_at in itertools.combinations(range(length), p - 1):
            ops = [ADD_COL] * length
            for t in rows_at:
                ops[t] = ADD_ROW
            seq = RCSequence(tuple(ops))
            w, h = eval_rc_sequence(seq, inst)
            if w > b:
                continue
            key = (h, tuple(0 if op == ADD_ROW else 1 for op in ops))
            if best is None or key < best[0]:
                best = (key, seq, (p, q), w)
    assert best is not None
    (h, _), seq, shape, w = best
    return DpSolution(objective=h, shape=shape, rc_sequence=seq, budget_used=w)
