"""Reading, writing and normalizing constraint digraphs.

A constraint file holds one arc per line, ``a -> b`` meaning bit ``a`` may
only be 1 if bit ``b`` is 1.  ``node x`` declares a vertex that takes part in
no arc, and ``#`` starts a comment.

Normalization turns the labelled digraph into a :class:`SpiderForest`: the
vertices renumbered 1..n in preorder of the underlying undirected forest,
with a virtual vertex 0 adopted as the parent of every component root.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .errors import DuplicateArc, ParseError, UndirectedCycle


@dataclass(frozen=True)
class RawDigraph:
    vertex_labels: Tuple[str, ...]
    arcs: Tuple[Tuple[str, str], ...]

    def __post_init__(self):
        if len(set(self.vertex_labels)) != len(self.vertex_labels):
            raise ParseError("vertex labels must be distinct")
        known = set(self.vertex_labels)
        for a, b in self.arcs:
            if a == b:
                raise ParseError(f"self-loop on {a!r}")
            if a not in known or b not in known:
                raise ParseError(f"arc {a!r} -> {b!r} uses an undeclared label")

    @property
    def n(self) -> int:
        return len(self.vertex_labels)


@dataclass(frozen=True)
class SpiderForest:
    """Preorder-numbered forest; every per-vertex tuple is indexed 0..n.

    Index 0 is the virtual root: ``parent[0] == -1``, it counts as negative,
    ``scope[0] == n`` and ``children[0]`` lists the component roots.
    ``positive[j]`` is true when the arc between ``parent[j]`` and ``j``
    points at ``j``; roots are positive.
    """

    n: int
    parent: Tuple[int, ...]
    positive: Tuple[bool, ...]
    scope: Tuple[int, ...]
    children: Tuple[Tuple[int, ...], ...]
    label_of: Tuple[str, ...]
    vertex_labels: Tuple[str, ...]

    def index_of(self, label: str) -> int:
        return self.label_of.index(label, 1)

    @property
    def original_order(self) -> Tuple[int, ...]:
        """Preorder indices listed in the input's label order."""
        where = {lab: i for i, lab in enumerate(self.label_of) if i}
        return tuple(where[lab] for lab in self.vertex_labels)

    def labels(self, order: str = "preorder") -> Tuple[str, ...]:
        if order == "preorder":
            return self.label_of[1:]
        if order == "original":
            return self.vertex_labels
        raise ValueError(f"unknown order {order!r}")


def _check_label(label: str, lineno: int) -> str:
    if not label:
        raise ParseError(f"line {lineno}: empty label")
    if any(ch.isspace() for ch in label):
        raise ParseError(f"line {lineno}: label {label!r} contains whitespace")
    return label


def parse_digraph(text: str) -> RawDigraph:
    labels: Dict[str, None] = {}
    arcs: List[Tuple[str, str]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "->" in line:
            parts = line.split("->")
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: expected exactly one '->'")
            a = _check_label(parts[0].strip(), lineno)
            b = _check_label(parts[1].strip(), lineno)
            if a == b:
                raise ParseError(f"line {lineno}: self-loop on {a!r}")
            labels.setdefault(a)
            labels.setdefault(b)
            arcs.append((a, b))
            continue
        words = line.split()
        if len(words) == 2 and words[0] == "node":
            labels.setdefault(_check_label(words[1], lineno))
            continue
        raise ParseError(f"line {lineno}: expected '<label> -> <label>' or 'node <label>', got {line!r}")
    return RawDigraph(tuple(labels), tuple(arcs))


def format_digraph(g: RawDigraph) -> str:
    """Serialize ``g`` so that :func:`parse_digraph` gives back the same value.

    ``node`` lines are only written where a label would otherwise first
    appear out of order (or not at all).
    """
    out: List[str] = []
    pending = list(g.vertex_labels)
    pending.reverse()
    seen = set()
    for a, b in g.arcs:
        fresh = [x for x in dict.fromkeys((a, b)) if x not in seen]
        # declare labels explicitly until the arc's new labels are next in order
        while pending[len(pending) - len(fresh):][::-1] != fresh:
            lab = pending.pop()
            if lab not in seen:
                out.append(f"node {lab}")
                seen.add(lab)
                if lab in fresh:
                    fresh.remove(lab)
        del pending[len(pending) - len(fresh):]
        seen.update(fresh)
        out.append(f"{a} -> {b}")
    for lab in reversed(pending):
        if lab not in seen:
            out.append(f"node {lab}")
    return "".join(line + "\n" for line in out)


def validate_and_normalize(g: RawDigraph) -> SpiderForest:
    # adjacency in arc order: (neighbour, arc id, arc points at neighbour)
    adj: Dict[str, List[Tuple[str, int, bool]]] = {lab: [] for lab in g.vertex_labels}
    pairs = set()
    for i, (a, b) in enumerate(g.arcs):
        key = frozenset((a, b))
        if key in pairs:
            raise DuplicateArc(a, b)
        pairs.add(key)
        adj[a].append((b, i, True))
        adj[b].append((a, i, False))

    label_of = [""]
    parent = [-1]
    positive = [False]
    children: List[List[int]] = [[]]
    index: Dict[str, int] = {}
    tree_parent: Dict[str, str] = {}

    def enter(lab: str, par: int, pos: bool) -> int:
        k = len(label_of)
        index[lab] = k
        label_of.append(lab)
        parent.append(par)
        positive.append(pos)
        children.append([])
        children[par].append(k)
        return k

    for root in g.vertex_labels:
        if root in index:
            continue
        enter(root, 0, True)
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            lab, via, it = stack[-1]
            for nb, arc_id, toward in it:
                if arc_id == via:
                    continue
                if nb in index:
                    cycle = [lab]
                    while cycle[-1] != nb:
                        cycle.append(tree_parent[cycle[-1]])
                    raise UndirectedCycle(cycle)
                tree_parent[nb] = lab
                enter(nb, index[lab], toward)
                stack.append((nb, arc_id, iter(adj[nb])))
                break
            else:
                stack.pop()

    n = len(label_of) - 1
    scope = list(range(n + 1))
    scope[0] = n
    for k in range(n, 0, -1):
        if children[k]:
            scope[k] = scope[children[k][-1]]
    return SpiderForest(
        n=n,
        parent=tuple(parent),
        positive=tuple(positive),
        scope=tuple(scope),
        children=tuple(tuple(c) for c in children),
        label_of=tuple(label_of),
        vertex_labels=g.vertex_labels,
    )


def load_forest(text: str) -> SpiderForest:
    return validate_and_normalize(parse_digraph(text))


def mapping_report(f: SpiderForest) -> str:
    rows = ["index\tlabel\tparent\tsign\tscope"]
    for k in range(1, f.n + 1):
        par = f.label_of[f.parent[k]] if f.parent[k] else "-"
        sign = "+" if f.positive[k] else "-"
        rows.append(f"{k}\t{f.label_of[k]}\t{par}\t{sign}\t{f.scope[k]}")
    return "\n".join(rows) + "\n"
