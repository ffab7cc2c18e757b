"""Finite quandles: validation and the standard constructions.

Elements are ``0..n-1`` and tables are row-major with the row indexed by the
first argument, so ``op[a][b]`` is ``a * b`` (written ``a^b``) and
``inv_op[a][b]`` is the unique ``x`` with ``x * b = a``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..errors import AxiomViolation, InvalidPresentation, MNotInCenterOfP, NonUnit
from .groups import FiniteGroup, center_of, check_group, check_subgroup

Table = tuple[tuple[int, ...], ...]


class QuandleViolation(tuple):
    """``(axiom, witness)`` pair reported by :func:`check_quandle`."""

    def __new__(cls, axiom, witness):
        return super().__new__(cls, (axiom, tuple(witness)))

    @property
    def axiom(self):
        return self[0]

    @property
    def witness(self):
        return self[1]

    def __str__(self):
        return f"{self.axiom} at {self.witness}"


@dataclass(frozen=True)
class FiniteQuandle:
    op: Table
    inv_op: Table
    name: str = "Q"

    @property
    def n(self):
        return len(self.op)

    def __len__(self):
        return len(self.op)

    def to_json(self):
        return {"n": self.n, "op": [list(r) for r in self.op],
                "inv_op": [list(r) for r in self.inv_op]}

    def as_biquandle(self):
        """The biquandle with ``a^b = a*b`` and trivial lower operations."""
        from .biquandles import FiniteBiquandle
        ident = tuple(tuple(a for _ in range(self.n)) for a in range(self.n))
        return FiniteBiquandle(self.op, ident, self.inv_op, ident, name=f"{self.name}/bq")


def _as_table(rows, n=None):
    try:
        table = tuple(tuple(int(x) for x in row) for row in rows)
    except (TypeError, ValueError):
        raise InvalidPresentation("table entries must be integers") from None
    n = len(table) if n is None else n
    if len(table) != n or any(len(r) != n or any(not 0 <= x < n for x in r) for r in table):
        raise AxiomViolation([QuandleViolation("shape", (n,))])
    return table


def column_inverse(op: Table):
    """Table of ``x`` with ``op[x][b] = a``, or None if some column is not a bijection."""
    n = len(op)
    inv = [[-1] * n for _ in range(n)]
    for b in range(n):
        for x in range(n):
            a = op[x][b]
            if inv[a][b] != -1:
                return None
            inv[a][b] = x
    return tuple(tuple(r) for r in inv)


def check_quandle(op, inv_op=None) -> list[QuandleViolation]:
    """All violations of the three quandle axioms, each with a witness."""
    n = len(op)
    out = []
    for a in range(n):
        if op[a][a] != a:
            out.append(QuandleViolation("idempotence", (a,)))
    if inv_op is None:
        inv_op = column_inverse(op)
        if inv_op is None:
            for b in range(n):
                images = [op[x][b] for x in range(n)]
                if len(set(images)) != n:
                    x = next(x for x in range(n) if images.count(images[x]) > 1)
                    out.append(QuandleViolation("right-invertibility", (x, b)))
            inv_op = None
    if inv_op is not None:
        for a, b in itertools.product(range(n), repeat=2):
            if inv_op[op[a][b]][b] != a or op[inv_op[a][b]][b] != a:
                out.append(QuandleViolation("right-invertibility", (a, b)))
    for a, b, c in itertools.product(range(n), repeat=3):
        if op[op[a][b]][c] != op[op[a][c]][op[b][c]]:
            out.append(QuandleViolation("self-distributivity", (a, b, c)))
    return out


def validate_quandle(op, inv_op=None, name="Q") -> FiniteQuandle:
    op = _as_table(op)
    if inv_op is not None:
        inv_op = _as_table(inv_op, len(op))
    problems = check_quandle(op, inv_op)
    if problems:
        raise AxiomViolation(problems)
    if inv_op is None:
        inv_op = column_inverse(op)
    return FiniteQuandle(op, inv_op, name)


def quandle_from_json(data: dict, name="table") -> FiniteQuandle:
    if "op" not in data:
        raise InvalidPresentation("quandle JSON needs an 'op' table")
    q = validate_quandle(data["op"], data.get("inv_op"), name)
    if "n" in data and data["n"] != q.n:
        raise InvalidPresentation(f"declared n={data['n']} but table has {q.n} rows")
    return q


# ------------------------------------------------------------ constructions

def trivial_quandle(n: int) -> FiniteQuandle:
    table = tuple(tuple(a for _ in range(n)) for a in range(n))
    return validate_quandle(table, table, f"trivial:{n}")


def dihedral_quandle(n: int) -> FiniteQuandle:
    if not isinstance(n, int) or n < 1:
        raise ValueError("dihedral quandle needs n >= 1")
    op = tuple(tuple((2 * b - a) % n for b in range(n)) for a in range(n))
    return validate_quandle(op, op, f"dihedral:{n}")


def alexander_quandle(n: int, t: int) -> FiniteQuandle:
    """``a*b = t a + (1 - t) b`` over Z_n for a unit ``t``."""
    from math import gcd
    if gcd(t, n) != 1:
        raise NonUnit(f"t={t} is not a unit mod {n}")
    op = tuple(tuple((t * a + (1 - t) * b) % n for b in range(n)) for a in range(n))
    return validate_quandle(op, name=f"alexq:{n},{t % n}")


def conjugation_quandle(g: FiniteGroup, name=None) -> FiniteQuandle:
    """``a*b = b a b^-1``."""
    problems = check_group(g.mul)
    if problems:
        raise AxiomViolation(problems)
    inv = g.inverses()
    mul = g.mul
    op = tuple(tuple(mul[mul[b][a]][inv[b]] for b in range(g.n)) for a in range(g.n))
    inv_op = tuple(tuple(mul[mul[inv[b]][a]][b] for b in range(g.n)) for a in range(g.n))
    return validate_quandle(op, inv_op, name or f"conj:{g.name}")


def coset_quandle(g: FiniteGroup, p, m: int, name=None, representatives=None) -> FiniteQuandle:
    """Quandle on right cosets ``P\\G`` with ``Pg * Ph = P(g h^-1 m h)``.

    Cosets are numbered by their least element unless ``representatives``
    fixes another choice (one element per coset, any order).
    """
    sub = check_subgroup(g, p)
    if m not in center_of(g, sub):
        raise MNotInCenterOfP(f"{m} is not in the center of {sorted(sub)}")
    mul, inv = g.mul, g.inverses()
    cosets = {}
    for x in range(g.n):
        coset = frozenset(mul[s][x] for s in sub)
        cosets.setdefault(coset, min(coset))
    order = sorted(cosets, key=lambda c: cosets[c])
    if representatives is not None:
        reps = list(representatives)
        order = [next(c for c in cosets if r in c) for r in reps]
        if len(set(order)) != len(cosets):
            raise ValueError("representatives must hit every coset once")
    else:
        reps = [cosets[c] for c in order]
    index = {}
    for k, c in enumerate(order):
        for x in c:
            index[x] = k
    k = len(order)
    op = tuple(
        tuple(index[mul[mul[reps[a]][inv[reps[b]]]][mul[m][reps[b]]]] for b in range(k))
        for a in range(k)
    )
    return validate_quandle(op, name=name or f"coset:{g.name}:{sorted(sub)}:{m}")


def relabel(q: FiniteQuandle, perm) -> FiniteQuandle:
    """Transport ``q`` along the bijection ``a -> perm[a]``."""
    n = q.n
    inv = [0] * n
    for a, b in enumerate(perm):
        inv[b] = a
    op = tuple(tuple(perm[q.op[inv[a]][inv[b]]] for b in range(n)) for a in range(n))
    inv_op = tuple(tuple(perm[q.inv_op[inv[a]][inv[b]]] for b in range(n)) for a in range(n))
    return FiniteQuandle(op, inv_op, q.name)
