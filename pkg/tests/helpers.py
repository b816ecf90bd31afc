"""Test-only reference constructions, independent of the package's recurrences."""
from __future__ import annotations

import random
from functools import lru_cache
from typing import Dict, List

from forestgray import validate_and_normalize
from forestgray.oracle import random_forest

SPIDER = "1 -> 2\n2 -> 3\n4 -> 3\n2 -> 5\n1 -> 6\n7 -> 6\n8 -> 1\n8 -> 9\n"


def reach(f, src):
    """Vertices of spider ``src`` with a directed path from ``src`` (forward) and to it."""
    fwd, back = {src}, {src}
    for i in range(src + 1, f.scope[src] + 1):
        p = f.parent[i]
        if f.positive[i] and p in fwd:
            fwd.add(i)
        if not f.positive[i] and p in back:
            back.add(i)
    return fwd, back


def near_sets(f, k):
    """U_k and V_k straight from the definition: delete, then take component roots."""
    lo, hi = (1, f.n) if k == 0 else (k, f.scope[k])
    if k == 0:
        fwd = set(f.children[0])
        for i in range(1, f.n + 1):
            if f.positive[i] and f.parent[i] in fwd:
                fwd.add(i)
        fwd.add(0)
        back = {0}
    else:
        fwd, back = reach(f, k)
    out = []
    for removed in (back, fwd):
        roots = [i for i in range(lo, hi + 1) if i not in removed and f.parent[i] in removed]
        out.append(sorted(roots))
    return out[0], out[1]


def spider_paths(f) -> Dict[int, List[Dict[int, int]]]:
    """Path G_k for every spider, built by the reflected-product construction.

    Each pattern is a dict vertex -> bit over spider k.  The part with bit k
    equal to 0 is assembled backwards from its transition values, so no
    starting-value table is consulted.
    """
    G: Dict[int, List[Dict[int, int]]] = {}

    def oriented(members, transition):
        lists = []
        for m in members:
            path = G[m]
            want = {i: transition[i] for i in path[0]}
            if path[0] == want:
                seq = path
            elif path[-1] == want:
                seq = path[::-1]
            else:
                raise AssertionError(f"transition of spider {m} is not an end of its path")
            lists.append(seq)
        return lists

    for k in range(f.n, 0, -1):
        U, V = near_sets(f, k)
        fwd, back = reach(f, k)
        trans: Dict[int, int] = {}
        for j in f.children[k]:
            src = G[j][-1] if f.positive[j] else G[j][0]
            trans.update(src)
        P = _product(oriented(U, trans), {i: 0 for i in back})[::-1]
        Q = _product(oriented(V, trans), {i: 1 for i in fwd})
        last, first = P[-1], Q[0]
        diff = [i for i in last if last[i] != first[i]]
        assert diff == [k], (k, diff)
        G[k] = P + Q
    return G


def _product(lists, fixed):
    """Reflected product of dict-valued paths, first slowest, with fixed bits added."""
    if not lists:
        return [dict(fixed)]
    rest = _product(lists[1:], fixed)
    out = []
    for idx, x in enumerate(lists[0]):
        for y in (rest if idx % 2 == 0 else rest[::-1]):
            out.append({**x, **y})
    return out


def predicted_path(f) -> List[str]:
    """Full listing: the component paths combined with the smallest root slowest."""
    G = spider_paths(f)
    rows = _product([G[r] for r in f.children[0]], {})
    return ["".join(str(row[i]) for i in range(1, f.n + 1)) for row in rows]


def corpus(count: int, nmax: int, seed: int, nmin: int = 1):
    """Deterministic list of (seed, RawDigraph, SpiderForest) random cases."""
    out = []
    for i in range(count):
        s = seed * 100003 + i
        rng = random.Random(s)
        g = random_forest(rng, rng.randint(nmin, nmax))
        out.append((s, g, validate_and_normalize(g)))
    return out


@lru_cache(maxsize=None)
def cached_corpus(count: int, nmax: int, seed: int):
    return tuple(corpus(count, nmax, seed))


def stream(machine, steps: int):
    """``steps`` results of ``machine``, each paired with the pattern it leaves behind."""
    out = []
    for _ in range(steps):
        r = machine.step()
        out.append((r, "".join(map(str, machine.bits[1:]))))
    return out


def disjoint_union(g1, g2):
    """Two raw digraphs side by side, labels prefixed so they cannot clash."""
    from forestgray import RawDigraph

    def tag(prefix, g):
        return [prefix + x for x in g.vertex_labels], [(prefix + a, prefix + b) for a, b in g.arcs]

    l1, a1 = tag("a", g1)
    l2, a2 = tag("b", g2)
    return RawDigraph(tuple(l1 + l2), tuple(a1 + a2))
