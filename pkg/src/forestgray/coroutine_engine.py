"""Constrained Gray generation by a family of cooperating coroutines.

Each vertex ``k`` owns a Boolean coroutine ``gen[k](l)`` that remembers where
it last returned.  One call of the root coroutine ``gen[maxu[0]](0)`` either
flips exactly one bit and answers true, or answers false without touching the
bits, which marks the end of a complete listing; the listings then run
alternately backward and forward forever.

:class:`CoroutineEngine` executes the coroutines with one explicit stack and
ten numbered resumption points:

====  ===============================================================
 p1   awake0: ``while gen[maxu[k]](k): return true``
 p2   after that call; false falls through to ``a[k] := 1; return true``
 p3   asleep1: ``while gen[maxv[k]](k): return true``
 p4   after that call; false falls through to the ``prev`` hand-off
 p5   after ``gen[prev[k]](l)`` returns to its caller's value
 p6   awake1: ``while gen[maxv[k]](k): return true``
 p7   after that call; false falls through to ``a[k] := 0; return true``
 p8   asleep0: ``while gen[maxu[k]](k): return true``
 p9   after that call; false falls through to the ``prev`` hand-off
 p10  after ``gen[prev[k]](l)``
====  ===============================================================

The driver sits in frame 0 at point 11.
"""
from __future__ import annotations

from typing import Generator, List, Optional

from .analysis import Analysis, InitTable, analyze, init_table
from .digraph_io import SpiderForest
from .errors import InternalProtocol
from .steps import HALF_PERIOD_END, Changed, StepResult

AWAKE0, ASLEEP1, AWAKE1, ASLEEP0 = 1, 3, 6, 8
DRIVER = 11
# resume point after a `while` call -> point that re-enters the loop
_LOOP_BACK = {2: 1, 4: 3, 7: 6, 9: 8}


class CoroutineEngine:
    """Explicit-stack machine for the ``gen`` coroutines.

    ``tco`` replaces ``invoke(prev[k], l, ...); ret(...)`` by a jump into
    ``gen[prev[k]]`` that reuses the caller's frame.  ``multipop`` lets a
    true answer unwind every enclosing ``while`` frame at once instead of
    resuming each of them just to return true again.  ``check`` tracks stack
    membership and raises :class:`InternalProtocol` on any breach.
    """

    def __init__(
        self,
        forest: SpiderForest,
        analysis: Optional[Analysis] = None,
        table: Optional[InitTable] = None,
        *,
        tco: bool = True,
        multipop: bool = False,
        check: bool = False,
    ):
        self.forest = forest
        self.analysis = analysis = analysis or analyze(forest)
        self.table = table = table or init_table(forest, analysis)
        self.n = n = forest.n
        self.tco = tco
        self.multipop = multipop
        self.check = check
        self.bits: List[int] = [0, *table.start_bits]
        self.pos: List[int] = [DRIVER] + [AWAKE1 if b else AWAKE0 for b in table.start_bits]
        self.invocations = 0
        self.max_depth = 0
        self._maxu = analysis.maxu
        self._maxv = analysis.maxv
        self._prev = analysis.prev
        self._root = analysis.maxu[0]
        self._onstack = [False] * (n + 1)

    def pattern(self) -> str:
        return "".join("1" if b else "0" for b in self.bits[1:])

    def state(self):
        """Snapshot of everything that persists between steps."""
        return tuple(self.bits), tuple(self.pos)

    def _enter(self, newk: int) -> None:
        if self._onstack[newk]:
            raise InternalProtocol(f"gen[{newk}] invoked while already active")
        self._onstack[newk] = True

    def step(self) -> StepResult:
        root = self._root
        if root == 0:
            return HALF_PERIOD_END
        maxu, maxv, prev = self._maxu, self._maxv, self._prev
        a, pos = self.bits, self.pos
        tco, multipop, check = self.tco, self.multipop, self.check
        limit = self.n + 1
        stack = [(0, 0)]
        k, l = root, 0
        calls = 1
        changed = 0
        val = False
        depth_seen = 1
        if check:
            onstack = self._onstack
            onstack[0] = True
            self._enter(k)

        while True:
            p = pos[k]
            newk = 0
            ret = 0
            if p == 1:
                if maxu[k]:
                    pos[k] = 2
                    newk, newl = maxu[k], k
                else:
                    val = False
                    p = 2
            if p == 2:
                if val:
                    ret = 1
                else:
                    a[k] = 1
                    changed = k
                    val = True
                    ret = 3
            elif p == 3:
                if maxv[k]:
                    pos[k] = 4
                    newk, newl = maxv[k], k
                else:
                    val = False
                    p = 4
            if p == 4:
                if val:
                    ret = 3
                elif prev[k] > l:
                    if tco:
                        pos[k] = 6
                        if check:
                            onstack[k] = False
                            self._enter(prev[k])
                        k = prev[k]
                        calls += 1
                        continue
                    pos[k] = 5
                    newk, newl = prev[k], l
                else:
                    val = False
                    ret = 6
            elif p == 5:
                ret = 6
            elif p == 6:
                if maxv[k]:
                    pos[k] = 7
                    newk, newl = maxv[k], k
                else:
                    val = False
                    p = 7
            if p == 7:
                if val:
                    ret = 6
                else:
                    a[k] = 0
                    changed = k
                    val = True
                    ret = 8
            elif p == 8:
                if maxu[k]:
                    pos[k] = 9
                    newk, newl = maxu[k], k
                else:
                    val = False
                    p = 9
            if p == 9:
                if val:
                    ret = 8
                elif prev[k] > l:
                    if tco:
                        pos[k] = 1
                        if check:
                            onstack[k] = False
                            self._enter(prev[k])
                        k = prev[k]
                        calls += 1
                        continue
                    pos[k] = 10
                    newk, newl = prev[k], l
                else:
                    val = False
                    ret = 1
            elif p == 10:
                ret = 1
            elif p == DRIVER:
                raise InternalProtocol("driver frame resumed as a coroutine")

            if newk:
                # invoke: pos[k] was set above
                stack.append((k, l))
                if check:
                    self._enter(newk)
                k, l = newk, newl
                calls += 1
                if len(stack) > depth_seen:
                    depth_seen = len(stack)
                    if depth_seen > limit:
                        raise InternalProtocol(f"stack depth {depth_seen} exceeds n+1")
                continue
            if not ret:
                raise InternalProtocol(f"gen[{k}] stuck at p{p}")
            pos[k] = ret
            if check:
                onstack[k] = False
            k, l = stack.pop()
            if multipop and val:
                while pos[k] in _LOOP_BACK:
                    pos[k] = _LOOP_BACK[pos[k]]
                    if check:
                        onstack[k] = False
                    k, l = stack.pop()
            if k == 0:
                break

        if check:
            onstack[0] = False
            if any(onstack):
                raise InternalProtocol("stack bookkeeping out of balance")
        self.invocations += calls
        if depth_seen > self.max_depth:
            self.max_depth = depth_seen
        if val:
            if not changed:
                raise InternalProtocol("true returned without a bit change")
            return Changed(changed, a[changed])
        if changed:
            raise InternalProtocol("false returned after a bit change")
        return HALF_PERIOD_END


class GeneratorEngine:
    """The same coroutines written as Python generators.

    Each ``gen[k]`` is a generator receiving its parameter ``l`` through
    ``send`` and yielding its Boolean answer.  Python's own frames play the
    role of the explicit stack, so this serves as an independent check on
    :class:`CoroutineEngine`.
    """

    def __init__(self, forest: SpiderForest, analysis: Optional[Analysis] = None,
                 table: Optional[InitTable] = None):
        analysis = analysis or analyze(forest)
        table = table or init_table(forest, analysis)
        self.bits = [0, *table.start_bits]
        self._changed = 0
        self._root = analysis.maxu[0]
        self._gens = [None] + [
            self._gen(k, analysis, bool(b)) for k, b in enumerate(table.start_bits, 1)
        ]
        for g in self._gens[1:]:
            next(g)

    def _call(self, k: int, l: int) -> bool:
        return self._gens[k].send(l)

    def _gen(self, k: int, an: Analysis, one: bool) -> Generator[bool, int, None]:
        a = self.bits
        mu, mv, pv = an.maxu[k], an.maxv[k], an.prev[k]
        call = self._call
        l = yield False  # primed; first real call delivers l
        while True:
            if not one:
                if mu:
                    while call(mu, k):
                        l = yield True
                a[k] = 1
                self._changed = k
                l = yield True
                if mv:
                    while call(mv, k):
                        l = yield True
                if pv > l:
                    l = yield call(pv, l)
                else:
                    l = yield False
            one = False
            if mv:
                while call(mv, k):
                    l = yield True
            a[k] = 0
            self._changed = k
            l = yield True
            if mu:
                while call(mu, k):
                    l = yield True
            if pv > l:
                l = yield call(pv, l)
            else:
                l = yield False

    def step(self) -> StepResult:
        if not self._root:
            return HALF_PERIOD_END
        self._changed = 0
        if self._call(self._root, 0):
            k = self._changed
            return Changed(k, self.bits[k])
        return HALF_PERIOD_END
