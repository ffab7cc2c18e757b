"""Finite biquandles.

Four tables, all indexed ``[a][b]``:

* ``up[a][b]``       is ``a^b``
* ``down[a][b]``     is ``a_b``
* ``up_bar[a][b]``   is ``a^{b-bar}``
* ``down_bar[a][b]`` is ``a_{b-bar}``

At a positive crossing with under-in ``a`` and over-in ``b`` the outgoing
strands are ``a^b`` (under) and ``b_a`` (over).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from ..errors import AxiomViolation, InvalidPresentation, NonUnit, NotPrime
from .quandles import QuandleViolation, Table, _as_table

OPS = ("up", "down", "up_bar", "down_bar")


@dataclass(frozen=True)
class FiniteBiquandle:
    up: Table
    down: Table
    up_bar: Table
    down_bar: Table
    name: str = "B"

    @property
    def n(self):
        return len(self.up)

    def __len__(self):
        return len(self.up)

    def table(self, op: str) -> Table:
        return getattr(self, op)

    def to_json(self):
        out = {"n": self.n}
        for op in OPS:
            out[op] = [list(r) for r in self.table(op)]
        return out


def _identities(U, D, UB, DB):
    """The ten exchange identities as ``(label, lhs, rhs)`` callables of (a, b, c)."""
    return (
        ("inverse up/up_bar", lambda a, b, c: UB[U[a][b]][D[b][a]], lambda a, b, c: a),
        ("inverse down/down_bar", lambda a, b, c: DB[D[b][a]][U[a][b]], lambda a, b, c: b),
        ("inverse up_bar/up", lambda a, b, c: U[UB[a][b]][DB[b][a]], lambda a, b, c: a),
        ("inverse down_bar/down", lambda a, b, c: D[DB[b][a]][UB[a][b]], lambda a, b, c: b),
        ("exchange up",
         lambda a, b, c: U[U[a][b]][c], lambda a, b, c: U[U[a][D[c][b]]][U[b][c]]),
        ("exchange down",
         lambda a, b, c: D[D[c][b]][a], lambda a, b, c: D[D[c][U[a][b]]][D[b][a]]),
        ("exchange mixed",
         lambda a, b, c: U[D[b][a]][D[c][U[a][b]]],
         lambda a, b, c: D[U[b][c]][U[a][D[c][b]]]),
        ("exchange mixed bar",
         lambda a, b, c: UB[DB[b][a]][DB[c][UB[a][b]]],
         lambda a, b, c: DB[UB[b][c]][UB[a][DB[c][b]]]),
        ("exchange up_bar",
         lambda a, b, c: UB[UB[a][b]][c], lambda a, b, c: UB[UB[a][DB[c][b]]][UB[b][c]]),
        ("exchange down_bar",
         lambda a, b, c: DB[DB[c][b]][a], lambda a, b, c: DB[DB[c][UB[a][b]]][DB[b][a]]),
    )


def check_biquandle(up, down, up_bar, down_bar) -> list[QuandleViolation]:
    """Violations of the bijectivity, fixed-point and exchange axioms."""
    n = len(up)
    out = []
    tables = dict(zip(OPS, (up, down, up_bar, down_bar)))
    for op, t in tables.items():
        for b in range(n):
            if len({t[a][b] for a in range(n)}) != n:
                out.append(QuandleViolation(f"bijectivity of {op}", (b,)))
    U, D, UB, DB = up, down, up_bar, down_bar
    for a, c in itertools.product(range(n), repeat=2):
        if (c == D[a][c]) != (a == U[c][a]):
            out.append(QuandleViolation("fixed point down/up", (a, c)))
        if (c == UB[a][c]) != (a == DB[c][a]):
            out.append(QuandleViolation("fixed point up_bar/down_bar", (a, c)))
    for label, lhs, rhs in _identities(U, D, UB, DB):
        for a, b, c in itertools.product(range(n), repeat=3):
            if lhs(a, b, c) != rhs(a, b, c):
                out.append(QuandleViolation(label, (a, b, c)))
                break
    return out


def alternative_axioms_hold(bq: FiniteBiquandle) -> bool:
    """Whether the second listed axiom set also holds.

    Recorded for comparison only; validation uses the ten identities.
    """
    U, D, UB, DB = bq.up, bq.down, bq.up_bar, bq.down_bar
    n = bq.n
    for a, b, c in itertools.product(range(n), repeat=3):
        if D[D[a][b]][c] != D[D[a][U[c][b]]][D[b][c]]:
            return False
        if U[U[a][b]][c] != U[U[a][D[c][b]]][U[b][c]]:
            return False
        if U[D[a][b]][D[c][U[b][a]]] != D[U[a][c]][U[b][D[c][a]]]:
            return False
    return all(UB[DB[a][a]][DB[a][a]] == a for a in range(n))


def validate_biquandle(up, down, up_bar, down_bar, name="B") -> FiniteBiquandle:
    up = _as_table(up)
    n = len(up)
    down, up_bar, down_bar = (_as_table(t, n) for t in (down, up_bar, down_bar))
    problems = check_biquandle(up, down, up_bar, down_bar)
    if problems:
        raise AxiomViolation(problems)
    return FiniteBiquandle(up, down, up_bar, down_bar, name)


def biquandle_from_json(data: dict, name="table") -> FiniteBiquandle:
    missing = [op for op in OPS if op not in data]
    if missing:
        raise InvalidPresentation(f"biquandle JSON lacks {missing}")
    bq = validate_biquandle(*(data[op] for op in OPS), name=name)
    if "n" in data and data["n"] != bq.n:
        raise InvalidPresentation(f"declared n={data['n']} but table has {bq.n} rows")
    return bq


def _is_prime(p):
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def alexander_biquandle(p: int, s: int, t: int) -> FiniteBiquandle:
    """``a^b = ta + (1 - st)b`` and ``a_b = sa`` over Z_p."""
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    for label, v in (("s", s), ("t", t)):
        if gcd(v, p) != 1:
            raise NonUnit(f"{label}={v} is not a unit mod {p}")
    si, ti = pow(s, -1, p), pow(t, -1, p)
    r = range(p)
    up = tuple(tuple((t * a + (1 - s * t) * b) % p for b in r) for a in r)
    up_bar = tuple(tuple((ti * a + (1 - si * ti) * b) % p for b in r) for a in r)
    down = tuple(tuple((s * a) % p for _ in r) for a in r)
    down_bar = tuple(tuple((si * a) % p for _ in r) for a in r)
    return validate_biquandle(up, down, up_bar, down_bar, f"alexander:{p},{s % p},{t % p}")


def quandle_to_biquandle(q) -> FiniteBiquandle:
    """Biquandle with ``a^b = a*b``, ``a^{b-bar} = a*^-1 b`` and trivial lower ops."""
    bq = q.as_biquandle()
    return validate_biquandle(bq.up, bq.down, bq.up_bar, bq.down_bar, bq.name)


def identity_biquandle(n: int) -> FiniteBiquandle:
    ident = tuple(tuple(a for _ in range(n)) for a in range(n))
    return validate_biquandle(ident, ident, ident, ident, f"identity:{n}")
