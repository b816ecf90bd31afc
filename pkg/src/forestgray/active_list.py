"""Coroutine-free generation with an ordered list of active vertices.

A positive child ``j`` of ``k`` is active exactly when ``k == 0`` or
``a[k] == 0``; a negative child is active exactly when ``a[k] == 1``.  Active
vertices are kept in increasing order in a circular doubly linked list whose
sentinel is the virtual root 0.  Each step

1. scans from the top of the list, waking sleepers, down to the largest
   vertex ``k`` that is awake; if every active vertex was asleep the listing
   is over and nothing else happens;
2. flips ``a[k]`` and swaps the family of ``k`` that the membership rule
   now excludes for the one it now admits (new members start awake);
3. puts ``k`` to sleep.

``ops`` counts elementary work: one unit per vertex examined or woken in
step 1, per list node walked over while placing new members, and per
insertion or deletion.  Every vertex walked over in step 2 lies above ``k``
and was woken in step 1 of the same step.
"""
from __future__ import annotations

from typing import List, Optional

from .analysis import Analysis, InitTable, analyze, init_table
from .digraph_io import SpiderForest
from .errors import InternalProtocol
from .steps import HALF_PERIOD_END, Changed, StepResult


class ActiveList:
    def __init__(self, forest: SpiderForest, analysis: Optional[Analysis] = None,
                 table: Optional[InitTable] = None):
        analysis = analysis or analyze(forest)
        table = table or init_table(forest, analysis)
        self.forest = forest
        n = self.n = forest.n
        self.bits: List[int] = [0, *table.start_bits]
        self.asleep: List[bool] = [False] * (n + 1)
        self.member: List[bool] = [False] * (n + 1)
        self.nxt: List[int] = [0] * (n + 1)
        self.prv: List[int] = [0] * (n + 1)
        self.ops = 0
        self.scanned = 0
        self._pos_kids = [tuple(c for c in kids if forest.positive[c]) for kids in forest.children]
        self._neg_kids = [tuple(c for c in kids if not forest.positive[c]) for kids in forest.children]
        last = 0
        for j in range(1, n + 1):
            if self._should_be_active(j):
                self.member[j] = True
                self.nxt[last] = j
                self.prv[j] = last
                last = j
        self.nxt[last] = 0
        self.prv[0] = last

    def _should_be_active(self, j: int) -> bool:
        k = self.forest.parent[j]
        if self.forest.positive[j]:
            return k == 0 or self.bits[k] == 0
        return self.bits[k] == 1

    def pattern(self) -> str:
        return "".join("1" if b else "0" for b in self.bits[1:])

    def active(self) -> List[int]:
        out = []
        j = self.nxt[0]
        while j:
            out.append(j)
            j = self.nxt[j]
        return out

    def render(self) -> str:
        """Active list as labels, sleepers marked with a trailing ``*``."""
        lab = self.forest.label_of
        return " ".join(lab[j] + ("*" if self.asleep[j] else "") for j in self.active())

    def check_membership(self) -> None:
        listed = self.active()
        if listed != sorted(listed):
            raise InternalProtocol(f"active list out of order: {listed}")
        want = [j for j in range(1, self.n + 1) if self._should_be_active(j)]
        if listed != want or any(self.member[j] != (j in set(want)) for j in range(1, self.n + 1)):
            raise InternalProtocol(f"active list {listed} but membership rule gives {want}")

    def step(self) -> StepResult:
        prv, asleep, a = self.prv, self.asleep, self.bits
        k = prv[0]
        work = 1
        while k and asleep[k]:
            asleep[k] = False
            k = prv[k]
            work += 1
        self.scanned += work
        if not k:
            self.ops += work
            return HALF_PERIOD_END
        if a[k]:
            a[k] = 0
            work += self._insert(k, self._pos_kids[k])
            work += self._delete(self._neg_kids[k])
        else:
            a[k] = 1
            work += self._delete(self._pos_kids[k])
            work += self._insert(k, self._neg_kids[k])
        asleep[k] = True
        self.ops += work
        return Changed(k, a[k])

    def _delete(self, kids) -> int:
        nxt, prv, member = self.nxt, self.prv, self.member
        for c in kids:
            p, q = prv[c], nxt[c]
            nxt[p] = q
            prv[q] = p
            member[c] = False
        return len(kids)

    def _insert(self, k: int, kids) -> int:
        nxt, prv, member, asleep = self.nxt, self.prv, self.member, self.asleep
        work = 0
        p = k
        for c in kids:
            q = nxt[p]
            while q and q < c:
                p = q
                q = nxt[q]
                work += 1
            nxt[p] = c
            prv[c] = p
            nxt[c] = q
            prv[q] = c
            member[c] = True
            asleep[c] = False
            p = c
            work += 1
        return work

    def count_changes(self, limit: int) -> int:
        """Step until the listing ends or ``limit`` changes happen; return the changes.

        Same transitions as :meth:`step` without building result objects, for
        bulk runs where only the final state or the counters matter.
        """
        prv, asleep, a = self.prv, self.asleep, self.bits
        pos_kids, neg_kids = self._pos_kids, self._neg_kids
        insert, delete = self._insert, self._delete
        ops = scanned = 0
        done = 0
        while done < limit:
            k = prv[0]
            work = 1
            while k and asleep[k]:
                asleep[k] = False
                k = prv[k]
                work += 1
            scanned += work
            if not k:
                ops += work
                break
            if a[k]:
                a[k] = 0
                if pos_kids[k]:
                    work += insert(k, pos_kids[k])
                if neg_kids[k]:
                    work += delete(neg_kids[k])
            else:
                a[k] = 1
                if pos_kids[k]:
                    work += delete(pos_kids[k])
                if neg_kids[k]:
                    work += insert(k, neg_kids[k])
            asleep[k] = True
            ops += work
            done += 1
        self.ops += ops
        self.scanned += scanned
        return done
