"""Approximation scheme: scale heights, solve the rectangle width table, report true height.

Rounding the sides directly would also perturb the strip width and can flip
feasibility in either direction.  Treating each square as a rectangle whose
width stays exact while only its height is scaled sidesteps that: every
packing stays feasible for both instances, and the height error per square is
at most one scaling unit.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .core import Instance, eval_rc_sequence
from .exact import DpSolution, RippInstance, solve_ripp_width_dp

Epsilon = Union[int, str, Fraction]


def _as_fraction(value: Epsilon) -> Fraction:
    if isinstance(value, float):
        raise TypeError(
            "epsilon must be exact (int, Fraction, or a string like '1/2' or '0.25'), "
            "not a binary float"
        )
    eps = Fraction(value)
    if eps <= 0:
        raise ValueError(f"epsilon must be positive, got {eps}")
    return eps


def scale_factor(inst: Instance, epsilon: Epsilon) -> Fraction:
    """Height scaling unit: eps * l_1 / n, floored at 1, as an exact rational."""
    eps = _as_fraction(epsilon)
    return max(eps * inst.lengths[0] / inst.n, Fraction(1))


def fptas(inst: Instance, epsilon: Epsilon) -> DpSolution:
    """Height within (1+eps) of optimal, in time polynomial in n and 1/eps.

    Builds the rectangle instance with exact widths and heights rounded up to
    scaling units, solves it exactly, then evaluates the resulting sequence
    under the true side lengths.
    """
    t = scale_factor(inst, epsilon)
    num, den = t.numerator, t.denominator
    scaled = tuple((l * den + num - 1) // num for l in inst.lengths)
    rinst = RippInstance(
        widths=inst.lengths, heights=scaled, strip_width=inst.strip_width
    )
    sol = solve_ripp_width_dp(rinst)
    width, height = eval_rc_sequence(sol.rc_sequence, inst)
    return DpSolution(
        objective=height,
        shape=sol.shape,
        rc_sequence=sol.rc_sequence,
        budget_used=width,
    )
