"""Domain types and layout algebra for partitioned square packing.

A packing places every square in its own rectangular cell, the cells being
formed by horizontal and vertical partitions that each span the whole strip.
Three solution representations are supported, from most general to most
compact:

* :class:`Layout` -- a p x q matrix of distinct cell labels; rows count from
  the bottom of the strip, columns from the left.  Label ``i`` stands for the
  i-th largest square; labels above ``n`` are zero-size fillers for spare
  cells.
* sorted layouts -- layouts whose labels ascend along every row and column,
  so only the first row and first column govern the overall width and height.
* row-column (RC) layouts -- layouts built from a single cell by repeatedly
  appending a full row or column, encoded by an :class:`RCSequence`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

ADD_ROW = "R"
ADD_COL = "C"


class InstanceError(ValueError):
    """Raised for inputs that cannot form a feasible problem instance."""


class LayoutError(ValueError):
    """Raised for malformed layouts or layout arguments violating a precondition."""


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def ceil_sqrt(x: int) -> int:
    r = math.isqrt(x)
    return r if r * r == x else r + 1


@dataclass(frozen=True)
class Instance:
    """Problem input: square side lengths (largest first) plus the strip width.

    ``lengths`` is always stored in non-increasing order.  ``order`` maps each
    stored position to the 1-based index the square had in the caller's input,
    so solutions can be reported against the original numbering.
    """

    lengths: tuple[int, ...]
    strip_width: int
    order: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not self.lengths:
            raise InstanceError("instance needs at least one square")
        for length in self.lengths:
            if not isinstance(length, int) or length < 1:
                raise InstanceError(
                    f"side lengths must be positive integers, got {length!r}"
                )
        if not isinstance(self.strip_width, int) or self.strip_width < 1:
            raise InstanceError(
                f"strip width must be a positive integer, got {self.strip_width!r}"
            )
        if any(a < b for a, b in zip(self.lengths, self.lengths[1:])):
            raise InstanceError(
                "lengths must be non-increasing; use Instance.from_lengths to normalize"
            )
        if self.lengths[0] > self.strip_width:
            raise InstanceError(
                f"infeasible instance: largest square {self.lengths[0]} exceeds "
                f"strip width {self.strip_width}"
            )
        if not self.order:
            object.__setattr__(self, "order", tuple(range(1, len(self.lengths) + 1)))
        if sorted(self.order) != list(range(1, len(self.lengths) + 1)):
            raise InstanceError("order must be a permutation of 1..n")

    @classmethod
    def from_lengths(cls, lengths: Sequence[int], strip_width: int) -> "Instance":
        """Build a normalized instance from side lengths given in any order.

        Squares of equal length keep their input order, which keeps every
        downstream tie-break deterministic.
        """
        idx = sorted(range(len(lengths)), key=lambda i: -lengths[i])
        return cls(
            tuple(int(lengths[i]) for i in idx),
            int(strip_width),
            tuple(i + 1 for i in idx),
        )

    @property
    def n(self) -> int:
        return len(self.lengths)

    def side(self, label: int) -> int:
        """Side length of the square behind a cell label (0 for filler labels)."""
        return self.lengths[label - 1] if label <= len(self.lengths) else 0

    def original_lengths(self) -> tuple[int, ...]:
        """Side lengths in the order the caller supplied them."""
        out = [0] * len(self.lengths)
        for pos, orig in enumerate(self.order):
            out[orig - 1] = self.lengths[pos]
        return tuple(out)

    def original_index(self, label: int) -> int:
        """1-based input position of the square stored at ``label``."""
        return self.order[label - 1]


@dataclass(frozen=True)
class Layout:
    """Grid of cell labels; ``cells[0]`` is the bottom row, left to right."""

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.cells or not self.cells[0]:
            raise LayoutError("layout needs at least one row and one column")
        q = len(self.cells[0])
        if any(len(row) != q for row in self.cells):
            raise LayoutError("layout rows must all have the same length")
        labels = [v for row in self.cells for v in row]
        if sorted(labels) != list(range(1, len(labels) + 1)):
            raise LayoutError("layout must contain each label 1..p*q exactly once")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Layout":
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @property
    def p(self) -> int:
        """Row count."""
        return len(self.cells)

    @property
    def q(self) -> int:
        """Column count."""
        return len(self.cells[0])


def base_layout() -> Layout:
    """The 1 x 1 layout holding only label 1."""
    return Layout(((1,),))


@dataclass(frozen=True)
class RCSequence:
    """Construction recipe for an RC layout: one entry per appended row/column."""

    ops: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        for op in self.ops:
            if op not in (ADD_ROW, ADD_COL):
                raise LayoutError(
                    f"RC operation must be {ADD_ROW!r} or {ADD_COL!r}, got {op!r}"
                )

    @classmethod
    def from_string(cls, text: str) -> "RCSequence":
        return cls(tuple(text.strip().upper()))

    def __str__(self) -> str:
        return "".join(self.ops)

    def __len__(self) -> int:
        return len(self.ops)

    @property
    def shape(self) -> tuple[int, int]:
        p = 1 + sum(1 for op in self.ops if op == ADD_ROW)
        return p, 1 + len(self.ops) - (p - 1)


def layout_width(layout: Layout, inst: Instance) -> int:
    """Total width: each column is as wide as its largest square."""
    return sum(
        max(inst.side(layout.cells[i][j]) for i in range(layout.p))
        for j in range(layout.q)
    )


def layout_height(layout: Layout, inst: Instance) -> int:
    """Total height: each row is as tall as its largest square."""
    return sum(max(inst.side(v) for v in row) for row in layout.cells)


def is_sorted_layout(layout: Layout) -> bool:
    """Whether labels strictly ascend left-to-right and bottom-to-top."""
    for row in layout.cells:
        for a, b in zip(row, row[1:]):
            if a >= b:
                return False
    for j in range(layout.q):
        for i in range(layout.p - 1):
            if layout.cells[i][j] >= layout.cells[i + 1][j]:
                return False
    return True


def to_sorted_layout(layout: Layout) -> Layout:
    """Rearrange a layout so labels ascend along every row and column.

    The result never has a larger width or height than the input, whatever
    instance the labels refer to.  Works row by row: move the row holding the
    smallest remaining label to the front, pull each column's smallest label
    into that row, order the columns by their front label, then freeze the
    front row and repeat on the rest.
    """
    work = [list(row) for row in layout.cells]
    q = layout.q
    done: list[tuple[int, ...]] = []
    while work:
        i_min = min(range(len(work)), key=lambda i: min(work[i]))
        work[0], work[i_min] = work[i_min], work[0]
        for j in range(q):
            i_min = min(range(len(work)), key=lambda i: work[i][j])
            work[0][j], work[i_min][j] = work[i_min][j], work[0][j]
        cols = sorted(range(q), key=lambda j: work[0][j])
        work = [[row[j] for j in cols] for row in work]
        done.append(tuple(work[0]))
        work = work[1:]
    return Layout(tuple(done))


def apply_ar(layout: Layout) -> Layout:
    """Append a new top row labeled pq+1 .. pq+q."""
    m = layout.p * layout.q
    return Layout(layout.cells + (tuple(range(m + 1, m + layout.q + 1)),))


def apply_ac(layout: Layout) -> Layout:
    """Append a new right column labeled pq+1 .. pq+p, bottom to top."""
    m = layout.p * layout.q
    return Layout(tuple(row + (m + 1 + i,) for i, row in enumerate(layout.cells)))


def is_rc_layout(layout: Layout) -> bool:
    """Whether the layout arises from the single cell via row/column appends.

    Decided by peeling: the last append must have left either the top row or
    the rightmost column holding the highest labels in order, so strip
    whichever matches and repeat.  At most one of the two can match while the
    grid is larger than a single row or column.
    """
    rows = [list(r) for r in layout.cells]
    p, q = len(rows), len(rows[0])
    while p > 1 or q > 1:
        if p > 1 and rows[-1] == list(range((p - 1) * q + 1, p * q + 1)):
            rows.pop()
            p -= 1
        elif q > 1 and [r[-1] for r in rows] == list(range(p * (q - 1) + 1, p * q + 1)):
            rows = [r[:-1] for r in rows]
            q -= 1
        else:
            return False
    return rows == [[1]]


def sorted_to_rc_layout(layout: Layout) -> Layout:
    """Rebuild a sorted layout as an RC layout without growing width or height.

    Grows an RC sub-grid from the bottom-left cell.  The next label always
    sits at the sub-grid's right or top edge; absorbing that edge as a full
    appended column or row may require renumbering its remaining cells, which
    is done by swapping each offending label downwards with its predecessor.
    Every swap moves a larger label (a no-larger square) into the governing
    cell, so the overall metrics never increase.
    """
    if not is_sorted_layout(layout):
        raise LayoutError("input must be a sorted layout")
    p, q = layout.p, layout.q
    cells = [list(row) for row in layout.cells]
    pos = {cells[i][j]: (i, j) for i in range(p) for j in range(q)}

    def swap(a: tuple[int, int], b: tuple[int, int]) -> None:
        (ai, aj), (bi, bj) = a, b
        va, vb = cells[ai][aj], cells[bi][bj]
        cells[ai][aj], cells[bi][bj] = vb, va
        pos[va], pos[vb] = (bi, bj), (ai, aj)

    pc, qc = 1, 1
    while pc < p or qc < q:
        grown = False
        base = pc * qc
        if qc < q and cells[0][qc] == base + 1:
            for k in range(2, pc + 1):
                while cells[k - 1][qc] > base + k:
                    swap(pos[cells[k - 1][qc] - 1], (k - 1, qc))
            qc += 1
            grown = True
        base = pc * qc
        if pc < p and cells[pc][0] == base + 1:
            for k in range(2, qc + 1):
                while cells[pc][k - 1] > base + k:
                    swap(pos[cells[pc][k - 1] - 1], (pc, k - 1))
            pc += 1
            grown = True
        if not grown:
            raise LayoutError("sorted layout lost its extension invariant")
    return Layout(tuple(tuple(row) for row in cells))


def rc_sequence_to_layout(seq: RCSequence) -> Layout:
    """Materialize the layout an RC sequence builds."""
    layout = base_layout()
    for op in seq.ops:
        layout = apply_ar(layout) if op == ADD_ROW else apply_ac(layout)
    return layout


def eval_rc_sequence(seq: RCSequence, inst: Instance) -> tuple[int, int]:
    """Width and height of the packing an RC sequence describes, in O(len) time.

    Each append is governed by its lowest new label, the largest square in the
    appended row or column.
    """
    w = h = inst.lengths[0]
    p = q = 1
    for op in seq.ops:
        lead = inst.side(p * q + 1)
        if op == ADD_ROW:
            h += lead
            p += 1
        else:
            w += lead
            q += 1
    return w, h


def bottleneck_values(layout: Layout) -> tuple[int, ...]:
    """Ascending labels found in the first row or first column of a sorted layout.

    Only these squares contribute to the width and height.
    """
    if not is_sorted_layout(layout):
        raise LayoutError("bottleneck values are defined for sorted layouts only")
    first = set(layout.cells[0])
    first.update(layout.cells[i][0] for i in range(layout.p))
    return tuple(sorted(first))


def omega(k: int) -> int:
    """Largest label the k-th smallest bottleneck of any sorted layout can carry."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    if k % 2:
        return (k + 1) * (k - 1) // 4 + 1
    return k * k // 4 + 1


@dataclass(frozen=True)
class SolutionReport:
    """A packing plus its evaluated size against a concrete instance.

    Cell labels refer to the instance's internal (size-sorted) numbering;
    ``input_index`` translates them back to the caller's original numbering.
    """

    width: int
    height: int
    layout: Layout
    rc_sequence: Optional[RCSequence]
    feasible: bool
    input_order: tuple[int, ...] = ()

    @classmethod
    def from_sequence(cls, seq: RCSequence, inst: Instance) -> "SolutionReport":
        w, h = eval_rc_sequence(seq, inst)
        return cls(w, h, rc_sequence_to_layout(seq), seq, w <= inst.strip_width, inst.order)

    @classmethod
    def from_layout(cls, layout: Layout, inst: Instance) -> "SolutionReport":
        w = layout_width(layout, inst)
        h = layout_height(layout, inst)
        return cls(w, h, layout, None, w <= inst.strip_width, inst.order)

    def input_index(self, label: int) -> int:
        """The caller's 1-based index for a cell label; 0 for filler labels."""
        return self.input_order[label - 1] if label <= len(self.input_order) else 0


def enumerate_sorted_layouts(p: int, q: int) -> Iterator[Layout]:
    """Yield every sorted layout of shape p x q.

    Labels are placed in increasing order; label v may extend row i exactly
    when the cell below its target is already filled, which enumerates each
    sorted layout once.
    """
    total = p * q
    grid = [[0] * q for _ in range(p)]
    fill = [0] * p

    def place(v: int) -> Iterator[Layout]:
        if v > total:
            yield Layout(tuple(tuple(row) for row in grid))
            return
        for i in range(p):
            j = fill[i]
            if j < q and (i == 0 or fill[i - 1] > j):
                grid[i][j] = v
                fill[i] += 1
                yield from place(v + 1)
                fill[i] -= 1
                grid[i][j] = 0

    yield from place(1)
