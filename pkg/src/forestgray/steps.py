"""Step results and materialized paths shared by both generators."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, NamedTuple, Sequence, Tuple, Union


class Changed(NamedTuple):
    """Bit ``vertex`` (preorder index) now holds ``bit``."""

    vertex: int
    bit: int


class _HalfPeriodEnd:
    __slots__ = ()

    def __repr__(self):
        return "HALF_PERIOD_END"

    def __reduce__(self):
        return "HALF_PERIOD_END"


HALF_PERIOD_END = _HalfPeriodEnd()

StepResult = Union[Changed, _HalfPeriodEnd]


@dataclass
class GrayPath:
    """A listing of patterns; column ``i`` of every pattern is bit ``labels[i]``."""

    labels: Tuple[str, ...]
    patterns: List[str] = field(default_factory=list)

    def __len__(self):
        return len(self.patterns)

    def reorder(self, labels: Sequence[str]) -> "GrayPath":
        where = {lab: i for i, lab in enumerate(self.labels)}
        cols = [where[lab] for lab in labels]
        return GrayPath(tuple(labels), ["".join(p[c] for c in cols) for p in self.patterns])


def pattern_string(bits: Sequence[int]) -> str:
    """Render ``bits[1:]`` (index 0 is the virtual root) as a 0/1 string."""
    return "".join("1" if b else "0" for b in bits[1:])


def take_steps(machine, count: int) -> List[StepResult]:
    return [machine.step() for _ in range(count)]


def run_path(machine, labels: Sequence[str]) -> GrayPath:
    """Record the machine's current pattern, then one per change until the listing ends."""
    path = GrayPath(tuple(labels), [pattern_string(machine.bits)])
    while machine.step() is not HALF_PERIOD_END:
        path.patterns.append(pattern_string(machine.bits))
    return path
