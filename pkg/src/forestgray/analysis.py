"""Static tables the generators read: near sets, prev links, counts, start bits.

For a vertex ``k``, ``usets[k]`` holds the positive vertices near ``k``: the
roots of what is left of spider ``k`` after deleting every ``x`` with a
directed path ``x ->* k``.  ``vsets[k]`` is the negative counterpart, obtained
by deleting every ``y`` with ``k ->* y``.  The virtual root 0 counts as a
negative vertex with an arc to every component root, so ``usets[0]`` is the
list of roots and ``vsets[0]`` collects the negative vertices reachable from
the roots along such deletions.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Dict, List, Optional, Tuple

from .digraph_io import SpiderForest
from .errors import InternalProtocol


@dataclass(frozen=True)
class Analysis:
    usets: Tuple[Tuple[int, ...], ...]
    vsets: Tuple[Tuple[int, ...], ...]
    maxu: Tuple[int, ...]
    maxv: Tuple[int, ...]
    prev: Tuple[int, ...]
    ppro: Tuple[int, ...]
    npro: Tuple[int, ...]
    # counts[k] = number of patterns of spider k; counts[0] is the forest total
    counts: Tuple[int, ...]

    @property
    def total(self) -> int:
        return self.counts[0]


def analyze(f: SpiderForest) -> Analysis:
    n = f.n
    usets: List[List[int]] = [[] for _ in range(n + 1)]
    vsets: List[List[int]] = [[] for _ in range(n + 1)]
    for k in range(n, -1, -1):
        u, v = usets[k], vsets[k]
        for c in f.children[k]:
            if f.positive[c]:
                u.append(c)
                v.extend(vsets[c])
            else:
                v.append(c)
                u.extend(usets[c])
        u.sort()
        v.sort()

    ppro = [0] * (n + 1)
    npro = [0] * (n + 1)
    for k in range(1, n + 1):
        ppro[k] = k if f.positive[k] else ppro[f.parent[k]]
        npro[k] = npro[f.parent[k]] if f.positive[k] else k

    # U-sets of positive vertices (and 0) partition the positive vertices;
    # V-sets of negative vertices (and 0) partition the negative ones.
    prev = [0] * (n + 1)
    for k in range(n + 1):
        if k == 0 or f.positive[k]:
            for a, b in zip([0] + usets[k], usets[k]):
                prev[b] = a
        if k == 0 or not f.positive[k]:
            for a, b in zip([0] + vsets[k], vsets[k]):
                prev[b] = a

    counts = [0] * (n + 1)
    for k in range(n, 0, -1):
        counts[k] = prod(counts[x] for x in usets[k]) + prod(counts[x] for x in vsets[k])
    counts[0] = prod(counts[r] for r in f.children[0])

    return Analysis(
        usets=tuple(map(tuple, usets)),
        vsets=tuple(map(tuple, vsets)),
        maxu=tuple(s[-1] if s else 0 for s in usets),
        maxv=tuple(s[-1] if s else 0 for s in vsets),
        prev=tuple(prev),
        ppro=tuple(ppro),
        npro=tuple(npro),
        counts=tuple(counts),
    )


def count_total(f: SpiderForest) -> int:
    return analyze(f).total


def _delta_parities(members, counts) -> Dict[int, int]:
    """Parity (1 = odd) of the product of counts of the smaller members."""
    out = {}
    odd = 1
    for x in members:
        out[x] = odd
        if counts[x] % 2 == 0:
            odd = 0
    return out


@dataclass(frozen=True)
class InitTable:
    """Initial, transition and final bits of the Gray path of every spider.

    ``alpha[k][i - k]`` is the first value of bit ``i`` in the path for spider
    ``k`` (``k <= i <= scope(k)``), ``omega`` the last value and ``tau`` the
    value where bit ``k`` flips; ``tau[k][0]`` is None.  Tables exist for
    ``k >= 1``; ``delta_parity[0]`` records the odd convention used for the
    roots.
    """

    alpha: Tuple[Tuple[int, ...], ...]
    tau: Tuple[Tuple[Optional[int], ...], ...]
    omega: Tuple[Tuple[int, ...], ...]
    delta_parity: Tuple[Dict[int, int], ...]
    start_bits: Tuple[int, ...]

    @property
    def start_labels(self) -> Tuple[str, ...]:
        return tuple("awake1" if b else "awake0" for b in self.start_bits)

    def start_string(self) -> str:
        return "".join(map(str, self.start_bits))


def init_table(f: SpiderForest, a: Analysis) -> InitTable:
    n = f.n
    parent, positive, scope = f.parent, f.positive, f.scope
    alpha: List[List[int]] = [[] for _ in range(n + 1)]
    tau: List[list] = [[] for _ in range(n + 1)]
    omega: List[List[int]] = [[] for _ in range(n + 1)]
    dpar: List[Dict[int, int]] = [{} for _ in range(n + 1)]
    dpar[0] = {r: 1 for r in f.children[0]}

    for k in range(n, 0, -1):
        size = scope[k] - k + 1
        al, ta, om = [0] * size, [None] * size, [0] * size
        om[0] = 1
        du = _delta_parities(a.usets[k], a.counts)
        dv = _delta_parities(a.vsets[k], a.counts)
        dpar[k] = {**du, **dv}
        # per-vertex facts relative to k, filled in preorder over spider k
        from_k = [False] * size  # k ->* i
        to_k = [False] * size  # i ->* k
        anchor_u = [0] * size  # nearest ancestor-or-self in usets[k]
        anchor_v = [0] * size
        from_k[0] = to_k[0] = True
        for i in range(k + 1, scope[k] + 1):
            p = parent[i] - k
            from_k[i - k] = from_k[p] and positive[i]
            to_k[i - k] = to_k[p] and not positive[i]
            anchor_u[i - k] = i if i in du else anchor_u[p]
            anchor_v[i - k] = i if i in dv else anchor_v[p]

        for j in f.children[k]:
            aj, oj = alpha[j], omega[j]
            if positive[j]:
                even = du[j] == 0
                for i in range(j, scope[j] + 1):
                    x = i - j
                    ta[i - k] = oj[x]
                    al[i - k] = oj[x] if even else aj[x]
                    if from_k[i - k]:
                        om[i - k] = 1
                        continue
                    jp = anchor_v[i - k]
                    if not jp:
                        raise InternalProtocol(f"vertex {i} has no negative anchor under {k}")
                    if (oj[jp - j] + dv[jp]) % 2 == 0:
                        om[i - k] = alpha[jp][i - jp]
                    else:
                        om[i - k] = omega[jp][i - jp]
            else:
                even = dv[j] == 0
                for i in range(j, scope[j] + 1):
                    x = i - j
                    ta[i - k] = aj[x]
                    om[i - k] = aj[x] if even else oj[x]
                    if to_k[i - k]:
                        al[i - k] = 0
                        continue
                    jp = anchor_u[i - k]
                    if not jp:
                        raise InternalProtocol(f"vertex {i} has no positive anchor under {k}")
                    if (aj[jp - j] + du[jp]) % 2 == 0:
                        al[i - k] = alpha[jp][i - jp]
                    else:
                        al[i - k] = omega[jp][i - jp]
        alpha[k], tau[k], omega[k] = al, ta, om

    start = [0] * n
    for r in f.children[0]:
        start[r - 1 : scope[r]] = alpha[r]
    return InitTable(
        alpha=tuple(map(tuple, alpha)),
        tau=tuple(map(tuple, tau)),
        omega=tuple(map(tuple, omega)),
        delta_parity=tuple(dpar),
        start_bits=tuple(start),
    )


def lemma_alpha(f: SpiderForest, a: Analysis, t: InitTable, k: int) -> List[int]:
    """Initial bits of spider ``k`` using the parity shortcut for negative children.

    For a negative child ``j`` of ``k`` the bits of spider ``j`` start at the
    transition bits of ``j`` when every smaller member of ``usets[k]`` has an
    odd count, and at the initial bits of ``j`` otherwise.  Positive children
    follow the ordinary rule.  Used to cross-check :func:`init_table`.
    """
    out = [0] * (f.scope[k] - k + 1)
    du = _delta_parities(a.usets[k], a.counts)
    for j in f.children[k]:
        lo = j - k
        hi = f.scope[j] - k + 1
        if f.positive[j]:
            out[lo:hi] = t.omega[j] if du[j] == 0 else t.alpha[j]
        else:
            all_odd = all(a.counts[u] % 2 for u in a.usets[k] if u < j)
            src = list(t.tau[j]) if all_odd else list(t.alpha[j])
            src[0] = 0
            out[lo:hi] = src
    return out
