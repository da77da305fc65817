"""Instance generation and line-oriented instance file I/O.

Uniform instances come from a pinned 64-bit generator so any implementation
of the same constants reproduces them bit for bit.  Adversarial instances are
built from equal-sum partition inputs: their optimal height equals the
returned threshold exactly when the input values split into two equal halves.

File format (text, line oriented)::

    # optional comment lines
    <n> <strip width>
    <n space-separated side lengths>

Lengths appear in the caller's original order; readers normalize.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Union

from .core import Instance, InstanceError, ceil_sqrt

MASK64 = (1 << 64) - 1

UNIFORM_LOW = 1
UNIFORM_HIGH = 20


class SplitMix64:
    """splitmix64: the pinned pseudo-random generator behind ``gen_uniform``.

    Each step adds the increment 0x9E3779B97F4B7C15 to a 64-bit state and
    scrambles the sum with xor-shifts and the multipliers 0xBF58476D1CE4E5B9
    and 0x94D049BB133111EB.  Bounded draws use rejection sampling, so there is
    no modulo bias to reproduce.
    """

    __slots__ = ("state",)

    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64

    def next64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4B7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randint(self, low: int, high: int) -> int:
        """Uniform integer in [low, high]."""
        width = high - low + 1
        limit = (1 << 64) - ((1 << 64) % width)
        while True:
            x = self.next64()
            if x < limit:
                return low + x % width


def gen_uniform(n: int, seed: int) -> Instance:
    """Instance with n i.i.d. side lengths in [1, 20].

    The strip width is the square root of the total square area, rounded up,
    so the largest square always fits.
    """
    if n < 1:
        raise InstanceError(f"n must be at least 1, got {n}")
    rng = SplitMix64(seed)
    lengths = [rng.randint(UNIFORM_LOW, UNIFORM_HIGH) for _ in range(n)]
    b = ceil_sqrt(sum(l * l for l in lengths))
    return Instance.from_lengths(lengths, b)


@dataclass(frozen=True)
class PartitionInput:
    """Positive integers to be split into two equal-sum halves."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.values:
            raise InstanceError("partition input needs at least one value")
        for v in self.values:
            if not isinstance(v, int) or v < 1:
                raise InstanceError(f"partition values must be positive integers, got {v!r}")

    @property
    def m(self) -> int:
        return len(self.values)

    @property
    def beta(self) -> int:
        return sum(self.values)


def reduce_partition(pp: PartitionInput) -> tuple[Instance, int]:
    """Build the adversarial instance for a partition input.

    Returns the instance and the decision threshold: the optimal height equals
    the threshold iff the values admit an equal-sum split, and exceeds it
    otherwise.  When the value sum is odd every value is doubled first, which
    keeps the split answer and makes the threshold integral.
    """
    values = pp.values
    if sum(values) % 2:
        values = tuple(2 * v for v in values)
    m = len(values)
    beta = sum(values)
    lam = (m + 1) * (m + 2) * beta // 2 + beta // 2

    lengths = [(m + 1) * beta]
    for i in range(1, m + 1):
        block = (m - i + 1) * beta
        lengths.extend([block + values[i - 1]] * i)
        lengths.extend([block] * (i + 1))
    inst = Instance.from_lengths(lengths, lam)
    return inst, lam


class InstanceFormatError(ValueError):
    """Raised for malformed instance files; messages carry 1-based line numbers."""


def render_instance_text(inst: Instance) -> str:
    """Canonical file serialization, lengths in the caller's original order."""
    lengths = " ".join(str(l) for l in inst.original_lengths())
    return f"{inst.n} {inst.strip_width}\n{lengths}\n"


def parse_instance_text(text: str, source: str = "<string>") -> Instance:
    rows: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line))
    if len(rows) < 2:
        raise InstanceFormatError(
            f"{source}: expected a '<n> <strip width>' header line and a lengths line"
        )
    if len(rows) > 2:
        raise InstanceFormatError(f"{source}, line {rows[2][0]}: unexpected extra content")
    (head_no, head), (body_no, body) = rows

    parts = head.split()
    if len(parts) != 2:
        raise InstanceFormatError(
            f"{source}, line {head_no}: header must be '<n> <strip width>', got {head!r}"
        )
    try:
        n, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise InstanceFormatError(
            f"{source}, line {head_no}: header values must be integers, got {head!r}"
        ) from None

    tokens = body.split()
    if len(tokens) != n:
        raise InstanceFormatError(
            f"{source}, line {body_no}: expected {n} lengths, found {len(tokens)}"
        )
    lengths = []
    for tok in tokens:
        try:
            lengths.append(int(tok))
        except ValueError:
            raise InstanceFormatError(
                f"{source}, line {body_no}: lengths must be integers, got {tok!r}"
            ) from None
    try:
        return Instance.from_lengths(lengths, b)
    except InstanceError as exc:
        raise InstanceFormatError(f"{source}: {exc}") from exc


def write_instance(inst: Instance, path: Union[str, os.PathLike]) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as handle:
        handle.write(render_instance_text(inst))


def read_instance(path: Union[str, os.PathLike]) -> Instance:
    with open(path, "r", encoding="ascii") as handle:
        return parse_instance_text(handle.read(), source=os.fspath(path))
