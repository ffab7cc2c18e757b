"""Counting colorings of presentations by finite quandles and biquandles.

A presentation is compiled once into a plan that does not depend on the
target: branch on a generator (chosen greedily for propagation), derive a generator from a relation (forward
from its right side, or backward from its left side through the inverse
tables), or check a fully determined relation.  The plan is then run on all
partial assignments at once as rows of an integer array.  The result always
equals plain exhaustive enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..algebra.biquandles import FiniteBiquandle
from ..algebra.groups import FiniteGroup
from ..algebra.quandles import FiniteQuandle, column_inverse
from ..errors import InvalidPresentation
from .presentation import BIQUANDLE, GROUP, QUANDLE, Presentation

_OP_INDEX = {"up": 0, "down": 1, "up_bar": 2, "down_bar": 3}


@dataclass(frozen=True)
class ColoringCount:
    target: str
    total: int
    surjective: int
    constant: int

    def to_json(self):
        return {"target": self.target, "total": self.total,
                "surjective": self.surjective, "constant": self.constant}


@dataclass(frozen=True)
class _Plan:
    ngens: int
    steps: tuple  # ("branch", g) | ("fwd", out, base, ops) | ("bwd", out, lhs, ops) | ("check", lhs, base, ops)


def compile_plan(p: Presentation) -> _Plan:
    """Propagation order with greedy branching.

    Each branch picks the unknown generator whose value lets the most other
    generators be derived, ties going to declaration order; everything
    derivable is then filled in and every fully known relation checked.
    """
    index = {g: k for k, g in enumerate(p.generators)}
    rels = []
    for r in p.relations:
        ops = tuple((_OP_INDEX[s.op], index[s.arg]) for s in r.steps)
        rels.append((index[r.lhs], index[r.base], ops))
    n = len(index)
    touching = [[] for _ in range(n)]  # relations mentioning a generator anywhere
    for k, (lhs, base, ops) in enumerate(rels):
        for g in {lhs, base, *(a for _, a in ops)}:
            touching[g].append(k)
    args = [frozenset(a for _, a in ops) for _, _, ops in rels]
    known = [False] * n
    done = [False] * len(rels)
    steps = []

    def closure(seed, record):
        """Derive everything reachable from ``known + seed``; return the count."""
        have = [*known]
        finished = [*done]
        queue = []
        for g in seed:
            have[g] = True
            queue += touching[g]
        if not seed:
            queue = list(range(len(rels)))
        gained = 0
        while queue:
            k = queue.pop()
            if finished[k]:
                continue
            lhs, base, ops = rels[k]
            if not all(have[a] for a in args[k]):
                continue
            if have[base] and have[lhs]:
                step, new = ("check", lhs, base, ops), None
            elif have[base]:
                step, new = ("fwd", lhs, base, ops), lhs
            elif have[lhs] and lhs != base:
                step, new = ("bwd", base, lhs, ops), base
            else:
                continue
            finished[k] = True
            if record:
                steps.append(step)
            if new is not None:
                have[new] = True
                gained += 1
                queue += touching[new]
        if record:
            known[:] = have
            done[:] = finished
        return gained

    closure((), True)
    while not all(known):
        unknown = [g for g in range(n) if not known[g]]
        best = max(unknown, key=lambda g: (closure((g,), False), -g))
        steps.append(("branch", best))
        closure((best,), True)
    for k, (lhs, base, ops) in enumerate(rels):
        if not done[k]:
            steps.append(("check", lhs, base, ops))
    return _Plan(len(index), tuple(steps))


@lru_cache(maxsize=256)
def _tables(target):
    """Forward and inverse numpy tables indexed like ``_OP_INDEX``."""
    if isinstance(target, FiniteQuandle):
        fwd = [target.op, target.op, target.inv_op, target.inv_op]
        # only up/up_bar are legal in quandle presentations; slots 1 and 3 unused
        inv = [target.inv_op, target.inv_op, target.op, target.op]
    else:
        fwd = [target.up, target.down, target.up_bar, target.down_bar]
        inv = [column_inverse(t) for t in fwd]
    return ([np.asarray(t, dtype=np.intp) for t in fwd],
            [np.asarray(t, dtype=np.intp) for t in inv])


def _run(plan: _Plan, n: int, fwd, inv):
    m = np.zeros((1, plan.ngens), dtype=np.intp)
    values = np.arange(n, dtype=np.intp)
    for step in plan.steps:
        kind = step[0]
        if kind == "branch":
            rows = m.shape[0]
            m = np.repeat(m, n, axis=0)
            m.reshape(rows, n, -1)[:, :, step[1]] = values
            continue
        _, out, src, ops = step
        if kind == "bwd":
            col = m[:, src]
            for op, arg in reversed(ops):
                col = inv[op][col, m[:, arg]]
            m[:, out] = col
            continue
        col = m[:, src]
        for op, arg in ops:
            col = fwd[op][col, m[:, arg]]
        if kind == "fwd":
            m[:, out] = col
        else:
            m = m[col == m[:, out]]
            if not m.shape[0]:
                break
    return m


def _summarize(m, n, name):
    total = int(m.shape[0])
    if not total:
        return ColoringCount(name, 0, 0, 0)
    constant = int(np.count_nonzero((m == m[:, :1]).all(axis=1)))
    if m.shape[1] < n:
        surjective = 0
    else:
        hit = np.zeros((total, n), dtype=bool)
        hit[np.arange(total)[:, None], m] = True
        surjective = int(np.count_nonzero(hit.all(axis=1)))
    return ColoringCount(name, total, surjective, constant)


def colorings(p: Presentation, target, plan: _Plan | None = None):
    """All satisfying assignments as an array of shape (count, #generators)."""
    m = _assignments(p, target, plan)
    # declaration order, values ascending
    return m[np.lexsort(m.T[::-1])] if m.shape[0] > 1 else m


def _assignments(p, target, plan=None):
    plan = plan or compile_plan(p)
    fwd, inv = _tables(target)
    return _run(plan, target.n, fwd, inv)


def count_quandle_colorings(p: Presentation, q: FiniteQuandle, plan=None) -> ColoringCount:
    if p.kind != QUANDLE:
        raise InvalidPresentation(f"expected a quandle presentation, got {p.kind}")
    return _summarize(_assignments(p, q, plan), q.n, q.name)


def count_biquandle_colorings(p: Presentation, b: FiniteBiquandle, plan=None) -> ColoringCount:
    if p.kind != BIQUANDLE:
        raise InvalidPresentation(f"expected a biquandle presentation, got {p.kind}")
    return _summarize(_assignments(p, b, plan), b.n, b.name)


def count_colorings(p: Presentation, target, plan=None) -> ColoringCount:
    """Dispatch on the presentation kind; quandle targets colour biquandle
    presentations through the induced biquandle."""
    if p.kind == BIQUANDLE and isinstance(target, FiniteQuandle):
        target = target.as_biquandle()
    if p.kind == BIQUANDLE:
        return count_biquandle_colorings(p, target, plan)
    if not isinstance(target, FiniteQuandle):
        raise InvalidPresentation(f"{target.name} is a biquandle; {p.kind} needs a quandle")
    return count_quandle_colorings(p, target, plan)


def count_group_assignments(g: Presentation, group: FiniteGroup) -> int:
    """Assignments of group elements to generators satisfying every word relation."""
    if g.kind != GROUP:
        raise InvalidPresentation(f"expected a group presentation, got {g.kind}")
    index = {x: k for k, x in enumerate(g.generators)}
    mul, inv, e = group.mul, group.inverses(), group.identity
    words = [[(index[x], k) for x, k in r.word] for r in g.relations]
    ready = [[] for _ in g.generators]
    for w in words:
        last = max((x for x, _ in w), default=-1)
        if last >= 0:
            ready[last].append(w)

    def value(w, assign):
        acc = e
        for x, k in w:
            base = assign[x] if k > 0 else inv[assign[x]]
            for _ in range(abs(k)):
                acc = mul[acc][base]
        return acc

    count = 0
    assign = [0] * len(index)

    def extend(depth):
        nonlocal count
        if depth == len(assign):
            count += 1
            return
        for v in range(group.n):
            assign[depth] = v
            if all(value(w, assign) == e for w in ready[depth]):
                extend(depth + 1)

    extend(0)
    return count
