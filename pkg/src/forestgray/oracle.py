"""Brute-force ground truth for checking generated listings.

Nothing here uses the near sets, prev links or initialization tables; the
enumeration filters all ``2**n`` candidates and the count is a plain two-state
tree DP.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import List, Optional, Sequence, Tuple

from .digraph_io import RawDigraph, SpiderForest
from .errors import CapExceeded
from .steps import HALF_PERIOD_END, GrayPath, StepResult

DEFAULT_CAP = 24


def enumerate_valid(g: RawDigraph, cap: int = DEFAULT_CAP) -> List[str]:
    """All patterns (columns in ``g.vertex_labels`` order) obeying every arc, sorted."""
    n = g.n
    if n > cap:
        raise CapExceeded(f"{n} bits exceeds the enumeration cap of {cap}")
    col = {lab: i for i, lab in enumerate(g.vertex_labels)}
    arcs = [(col[a], col[b]) for a, b in g.arcs]
    out = []
    for bits in product("01", repeat=n):
        if all(bits[i] <= bits[j] for i, j in arcs):
            out.append("".join(bits))
    return out


def count_dp(f: SpiderForest) -> int:
    zero = [1] * (f.n + 1)
    one = [1] * (f.n + 1)
    for k in range(f.n, 0, -1):
        for c in f.children[k]:
            both = zero[c] + one[c]
            if f.positive[c]:  # a_k <= a_c
                zero[k] *= both
                one[k] *= one[c]
            else:  # a_c <= a_k
                zero[k] *= zero[c]
                one[k] *= both
    total = 1
    for r in f.children[0]:
        total *= zero[r] + one[r]
    return total


@dataclass
class VerificationReport:
    is_gray: bool
    is_complete: bool
    duplicates: List[str] = field(default_factory=list)
    bad_steps: List[Tuple[int, int]] = field(default_factory=list)
    missing: List[str] = field(default_factory=list)
    extra: List[str] = field(default_factory=list)
    malformed: List[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.is_gray and self.is_complete

    def render(self, limit: int = 10) -> str:
        def cut(xs):
            shown = ", ".join(map(str, xs[:limit]))
            return shown + (f", ... ({len(xs)} total)" if len(xs) > limit else "")

        lines = [
            f"gray: {'yes' if self.is_gray else 'no'}",
            f"complete: {'yes' if self.is_complete else 'no'}",
        ]
        for name in ("malformed", "bad_steps", "duplicates", "missing", "extra"):
            xs = getattr(self, name)
            if xs:
                lines.append(f"{name}: {cut(xs)}")
        lines.append("all clear" if self.ok else "FAILED")
        return "\n".join(lines) + "\n"


def verify_gray_path(path: GrayPath, g: RawDigraph, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Check unit steps, repeats, and set equality with the brute-force enumeration.

    ``bad_steps`` holds ``(i, d)`` when pattern ``i`` is at Hamming distance
    ``d != 1`` from pattern ``i - 1``.  Patterns of the wrong length are
    reported by index in ``malformed`` and otherwise ignored.
    """
    if tuple(path.labels) != g.vertex_labels:
        path = path.reorder(g.vertex_labels)
    valid = enumerate_valid(g, cap)
    malformed = [i for i, p in enumerate(path.patterns) if len(p) != g.n or set(p) - {"0", "1"}]
    bad = set(malformed)
    pats = [p for i, p in enumerate(path.patterns) if i not in bad]
    bad_steps = []
    for i in range(1, len(path.patterns)):
        if i in bad or i - 1 in bad:
            continue
        x, y = path.patterns[i - 1], path.patterns[i]
        d = sum(c != e for c, e in zip(x, y))
        if d != 1:
            bad_steps.append((i, d))
    seen, dups = set(), []
    for p in pats:
        if p in seen and p not in dups:
            dups.append(p)
        seen.add(p)
    valid_set = set(valid)
    missing = [p for p in valid if p not in seen]
    extra = sorted(seen - valid_set)
    return VerificationReport(
        is_gray=not bad_steps and not dups and not malformed,
        is_complete=not missing and not extra and not malformed,
        duplicates=dups,
        bad_steps=bad_steps,
        missing=missing,
        extra=extra,
        malformed=malformed,
    )


def verify_reflection(initial: str, steps: Sequence[Tuple[StepResult, str]], total: int) -> bool:
    """Check one full period of a step stream.

    ``steps[t - 1]`` is the result of step ``t`` together with the pattern
    after it.  Steps ``N`` and ``2N`` (``N = total``) must be the only listing
    ends, the pattern after step ``2N`` must be ``initial``, and the driver's
    listings ``x_0..x_{2N-1}`` (``x_0 = initial``, ``x_t`` the pattern after
    step ``t``) must satisfy ``x_j == x_{2N-1-j}``.
    """
    N = total
    if N < 1 or len(steps) < 2 * N:
        return False
    xs = [initial] + [p for _, p in steps[: 2 * N]]
    for t in range(1, 2 * N + 1):
        is_end = steps[t - 1][0] is HALF_PERIOD_END
        if is_end != (t % N == 0):
            return False
        if is_end and xs[t] != xs[t - 1]:
            return False
    if xs[2 * N] != initial:
        return False
    return all(xs[j] == xs[2 * N - 1 - j] for j in range(N))


def random_forest(rng: random.Random, n: int, *, shuffle: bool = True,
                  split: Optional[float] = None) -> RawDigraph:
    """A random totally acyclic digraph on ``n`` vertices.

    Vertex ``v`` picks a uniform parent among ``0..v-1`` or, with probability
    ``split`` (itself random by default), starts a new component; each edge
    gets a random direction.  With ``shuffle`` the labels and arc order are
    permuted so normalization has real work to do.
    """
    if split is None:
        split = rng.choice((0.0, 0.1, 0.3))
    arcs = []
    for v in range(1, n):
        if rng.random() < split:
            continue
        u = rng.randrange(v)
        arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    names = [f"v{i}" for i in range(n)]
    order = list(range(n))
    if shuffle:
        rng.shuffle(order)
        rng.shuffle(arcs)
    return RawDigraph(
        tuple(names[i] for i in order),
        tuple((names[x], names[y]) for x, y in arcs),
    )
