"""Named constraint families with known listings, plus the ``copoke`` coroutines."""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Dict, List, Optional, Tuple

from .digraph_io import RawDigraph
from .errors import NoFixture, ParseError
from .steps import HALF_PERIOD_END, Changed, GrayPath, StepResult

KINDS = ("unrestricted", "chain", "cochain", "mixed_chain", "multi_chain", "fence")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int
    m: Optional[int] = None
    ends: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ParseError(f"unknown family {self.kind!r}; choose from {', '.join(KINDS)}")
        if self.n < 0:
            raise ParseError("n must be non-negative")
        if self.kind == "mixed_chain":
            if self.m is None or not 1 <= self.m <= self.n:
                raise ParseError("mixed_chain needs 1 <= m <= n")
        if self.kind == "multi_chain":
            e = self.ends
            if not e or e[0] != 1 or list(e) != sorted(set(e)) or e[-1] > self.n:
                raise ParseError("multi_chain needs endpoints 1 = e1 < ... < em <= n")

    @property
    def slug(self) -> str:
        if self.kind == "multi_chain":
            return f"multi_chain_{'-'.join(map(str, self.ends))}_{self.n}"
        if self.kind == "mixed_chain":
            return f"mixed_chain_{self.m}_{self.n}"
        return f"{self.kind}_{self.n}"


def family_digraph(spec: FamilySpec) -> RawDigraph:
    """Constraint digraph on labels ``1..n`` whose preorder numbering is the identity."""
    n = spec.n
    if spec.kind == "unrestricted":
        arcs = []
    elif spec.kind == "chain":
        arcs = [(k, k + 1) for k in range(1, n)]
    elif spec.kind == "cochain":
        arcs = [(k + 1, k) for k in range(1, n)]
    elif spec.kind == "mixed_chain":
        m = spec.m
        # 0 <= a_n <= ... <= a_{m+1} <= a_1 <= ... <= a_m <= 1
        arcs = [(k, k + 1) for k in range(1, m)]
        if m < n:
            arcs.append((m + 1, 1))
            arcs += [(k + 1, k) for k in range(m + 1, n)]
    elif spec.kind == "multi_chain":
        ends = set(spec.ends)
        arcs = [(k - 1, k) for k in range(2, n + 1) if k not in ends]
    else:  # fence: a1 <= a2 >= a3 <= a4 >= ...
        arcs = []
        for k in range(1, n):
            arcs.append((k, k + 1) if k % 2 else (k + 1, k))
    return RawDigraph(
        tuple(str(k) for k in range(1, n + 1)),
        tuple((str(x), str(y)) for x, y in arcs),
    )


def multi_chain_count(ends, n: int) -> int:
    """Product of the chain lengths plus one, i.e. the number of valid patterns."""
    bounds = list(ends) + [n + 1]
    out = 1
    for lo, hi in zip(bounds, bounds[1:]):
        out *= hi - lo + 1
    return out


class Copoke:
    """Gray binary code from the ``copoke`` coroutines, driven through ``copoke[1]``.

    Unlike ``gen`` these always run the whole chain ``copoke[1..n]`` before
    answering.  They are written directly as Python generators.
    """

    def __init__(self, n: int):
        self.n = n
        self.bits = [0] * (n + 1)
        self._changed = 0
        self._co = [None] + [self._copoke(k) for k in range(1, n + 1)]

    def _copoke(self, k: int):
        a, n, co = self.bits, self.n, self._co
        while True:
            if k < n:
                while next(co[k + 1]):
                    yield True
            a[k] = 1 - a[k]
            self._changed = k
            yield True
            if k < n:
                while next(co[k + 1]):
                    yield True
            yield False

    def step(self) -> StepResult:
        if not self.n:
            return HALF_PERIOD_END
        if next(self._co[1]):
            k = self._changed
            return Changed(k, self.bits[k])
        return HALF_PERIOD_END


def copoke_stream(n: int):
    """Endless stream of step results from :class:`Copoke`."""
    machine = Copoke(n)
    while True:
        yield machine.step()


_FIXTURES = ("unrestricted_2", "chain_3", "multi_chain_1-3-4_6", "fence_4")


def fixture_listings(spec: FamilySpec) -> List[List[str]]:
    """Both transcribed listings (forward then backward) for a fixture family."""
    if spec.slug not in _FIXTURES:
        raise NoFixture(spec.slug)
    text = resources.files("forestgray").joinpath(f"data/{spec.slug}.txt").read_text()
    listings: List[List[str]] = [[]]
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line == "-----":
            listings.append([])
        else:
            listings[-1].append(line)
    return [x for x in listings if x]


def known_sequence(spec: FamilySpec) -> GrayPath:
    labels = tuple(str(k) for k in range(1, spec.n + 1))
    return GrayPath(labels, fixture_listings(spec)[0])


def fixture_text(spec: FamilySpec) -> str:
    """Raw fixture file contents, comments removed (the ``gen --cycles 2`` output)."""
    return "".join(line + "\n" for lst in fixture_listings(spec) for line in lst + ["-----"])


FIXTURE_SPECS: Dict[str, FamilySpec] = {
    "unrestricted_2": FamilySpec("unrestricted", 2),
    "chain_3": FamilySpec("chain", 3),
    "multi_chain_1-3-4_6": FamilySpec("multi_chain", 6, ends=(1, 3, 4)),
    "fence_4": FamilySpec("fence", 4),
}
