"""Height minimization in k dimensions, plus partition-thickness preprocessing.

The grid generalizes directly: a k-dimensional layout grows from a single
cell by appending full slabs, and each slab is as thick as its largest cube,
the one with the lowest new label.  Dimensions 1..k-1 carry fixed capacities;
the extent of dimension k is minimized.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Sequence

from .core import Instance, InstanceError
from .exact import RippInstance, solve_dp, solve_ripp_width_dp


@dataclass(frozen=True)
class KInstance:
    """Cubes to pack into a k-dimensional grid with capped extents in all but one axis."""

    dims: int
    lengths: tuple[int, ...]
    budgets: tuple[int, ...]
    max_states: int = 2_000_000

    def __post_init__(self) -> None:
        if self.dims < 2:
            raise InstanceError(f"dimension count must be at least 2, got {self.dims}")
        if len(self.budgets) != self.dims - 1:
            raise InstanceError(
                f"expected {self.dims - 1} budgets for {self.dims} dimensions, "
                f"got {len(self.budgets)}"
            )
        if not self.lengths:
            raise InstanceError("instance needs at least one cube")
        for value in (*self.lengths, *self.budgets):
            if not isinstance(value, int) or value < 1:
                raise InstanceError(f"lengths and budgets must be positive integers, got {value!r}")
        if any(a < b for a, b in zip(self.lengths, self.lengths[1:])):
            raise InstanceError("lengths must be non-increasing; use KInstance.from_lengths")
        if self.lengths[0] > min(self.budgets):
            raise InstanceError(
                f"infeasible instance: largest cube {self.lengths[0]} exceeds a budget"
            )
        states = len(candidate_shapes(self.n, self.dims)) * prod(self.budgets)
        if states > self.max_states:
            raise InstanceError(
                f"state space of {states} exceeds the cap of {self.max_states}"
            )

    @classmethod
    def from_lengths(
        cls, lengths: Sequence[int], budgets: Sequence[int], max_states: int = 2_000_000
    ) -> "KInstance":
        return cls(
            dims=len(budgets) + 1,
            lengths=tuple(sorted((int(l) for l in lengths), reverse=True)),
            budgets=tuple(int(b) for b in budgets),
            max_states=max_states,
        )

    @property
    def n(self) -> int:
        return len(self.lengths)

    def side(self, label: int) -> int:
        return self.lengths[label - 1] if label <= len(self.lengths) else 0


def candidate_shapes(n: int, dims: int) -> list[tuple[int, ...]]:
    """Grid shapes that suffice to hold an optimal packing of n cubes.

    Slabs appended after all n cubes are placed are zero-thick, so every
    extension sequence matches its shortest prefix covering the cubes.  That
    prefix's final slab grew some axis whose predecessor shape had fewer than
    n cells, hence: enough cells overall, and at least one axis whose last
    slab is load-bearing.
    """
    if n ** dims > 50_000_000:
        raise InstanceError(f"shape enumeration too large for n={n}, dims={dims}")
    out: list[tuple[int, ...]] = []
    shape = [1] * dims

    def rec(axis: int) -> None:
        if axis == dims:
            cells = prod(shape)
            if cells >= n and (
                cells == 1 or any(d > 1 and (d - 1) * (cells // d) < n for d in shape)
            ):
                out.append(tuple(shape))
            return
        for d in range(1, n + 1):
            shape[axis] = d
            rec(axis + 1)
        shape[axis] = 1

    rec(0)
    return out


def _downward_closure(shapes: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    seen: set[tuple[int, ...]] = set()
    stack = list(shapes)
    while stack:
        s = stack.pop()
        if s in seen:
            continue
        seen.add(s)
        for t, d in enumerate(s):
            if d > 1:
                stack.append(s[:t] + (d - 1,) + s[t + 1 :])
    return sorted(seen, key=lambda s: (sum(s), s))


def solve_kdim_plan(kinst: KInstance) -> tuple[int, tuple[int, ...]]:
    """Minimal final-axis extent plus the axis index of each appended slab.

    Forward dynamic program over (shape, consumed budgets): appending a slab
    along a budgeted axis consumes that axis' budget by the slab thickness,
    while appending along the last axis grows the objective by it.
    """
    k, n = kinst.dims, kinst.n
    side = kinst.side
    budgets = kinst.budgets
    cands = candidate_shapes(n, k)
    shapes = _downward_closure(cands)
    shape_set = set(shapes)
    base = (1,) * k
    start = tuple(side(1) for _ in range(k - 1))

    # states[shape][consumed budgets] = (extent, axis appended last, previous budgets)
    states: dict[tuple[int, ...], dict[tuple[int, ...], tuple]] = {
        base: {start: (side(1), None, None)}
    }
    for shape in shapes:
        cur = states.get(shape)
        if cur is None:
            continue
        cells = prod(shape)
        lead = side(cells + 1)
        for t in range(k):
            grown = shape[:t] + (shape[t] + 1,) + shape[t + 1 :]
            if grown not in shape_set:
                continue
            slot = states.setdefault(grown, {})
            for vec, (extent, _, _) in cur.items():
                if t < k - 1:
                    consumed = vec[t] + lead
                    if consumed > budgets[t]:
                        continue
                    nvec = vec[:t] + (consumed,) + vec[t + 1 :]
                    nextent = extent
                else:
                    nvec = vec
                    nextent = extent + lead
                old = slot.get(nvec)
                if old is None or nextent < old[0]:
                    slot[nvec] = (nextent, t, vec)

    best: tuple[int, tuple[int, ...], tuple[int, ...]] | None = None
    for shape in cands:
        for vec in sorted(states.get(shape, {})):
            extent = states[shape][vec][0]
            if best is None or extent < best[0]:
                best = (extent, shape, vec)
    assert best is not None  # a single stack along the last axis always fits
    extent, shape, vec = best

    axes: list[int] = []
    while shape != base:
        _, axis, prev_vec = states[shape][vec]
        axes.append(axis)
        shape = shape[:axis] + (shape[axis] - 1,) + shape[axis + 1 :]
        vec = prev_vec
    return extent, tuple(reversed(axes))


def solve_kdim_dp(kinst: KInstance) -> int:
    """Minimal extent of the last dimension packing all cubes into grid cells."""
    extent, _ = solve_kdim_plan(kinst)
    return extent


def apply_thickness(inst: Instance, eta: int) -> tuple[Instance, int]:
    """Thicken every square and the strip by the partition thickness.

    Solving the transformed instance and subtracting the returned offset gives
    the optimal height when partitions are ``eta`` thick.
    """
    if not isinstance(eta, int) or eta < 0:
        raise ValueError(f"thickness must be a non-negative integer, got {eta!r}")
    if eta == 0:
        return inst, 0
    return (
        Instance(
            tuple(l + eta for l in inst.lengths),
            inst.strip_width + eta,
            inst.order,
        ),
        eta,
    )


def solve_with_thickness(inst: Instance, eta_h: int, eta_v: int | None = None) -> int:
    """Optimal height with thick partitions; the two orientations may differ.

    Horizontal partitions (thickness ``eta_h``) pad square heights, vertical
    ones (``eta_v``) pad widths and the strip, so the general case routes
    through the rectangle solver.
    """
    if eta_v is None:
        eta_v = eta_h
    for eta in (eta_h, eta_v):
        if not isinstance(eta, int) or eta < 0:
            raise ValueError(f"thickness must be a non-negative integer, got {eta!r}")
    if eta_h == 0 and eta_v == 0:
        return solve_dp(inst).objective
    rinst = RippInstance(
        widths=tuple(l + eta_v for l in inst.lengths),
        heights=tuple(l + eta_h for l in inst.lengths),
        strip_width=inst.strip_width + eta_v,
    )
    return solve_ripp_width_dp(rinst).objective - eta_h
