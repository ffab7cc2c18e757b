"""Finite groups as multiplication tables, plus a small-group library."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ..errors import AxiomViolation, NotSubgroup


@dataclass(frozen=True)
class FiniteGroup:
    mul: tuple[tuple[int, ...], ...]
    name: str = "G"
    labels: tuple = field(default=(), compare=False)

    @property
    def n(self):
        return len(self.mul)

    @property
    def identity(self):
        for e in range(self.n):
            if all(self.mul[e][a] == a for a in range(self.n)):
                return e
        raise AxiomViolation(["no identity element"])

    def inverse(self, a):
        e = self.identity
        return next(b for b in range(self.n) if self.mul[a][b] == e)

    def inverses(self):
        e = self.identity
        inv = [0] * self.n
        for a in range(self.n):
            for b in range(self.n):
                if self.mul[a][b] == e:
                    inv[a] = b
        return inv

    def is_abelian(self):
        return all(self.mul[a][b] == self.mul[b][a]
                   for a in range(self.n) for b in range(a))

    def to_json(self):
        return {"n": self.n, "mul": [list(r) for r in self.mul]}


def check_group(mul) -> list[str]:
    """Axiom violations of a multiplication table (empty when it is a group)."""
    n = len(mul)
    problems = []
    if n == 0:
        return ["empty table"]
    if any(len(row) != n or any(not 0 <= x < n for x in row) for row in mul):
        return ["table is not n x n over 0..n-1"]
    for a, b, c in itertools.product(range(n), repeat=3):
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            problems.append(f"associativity fails at {(a, b, c)}")
            break
    ids = [e for e in range(n) if all(mul[e][a] == a == mul[a][e] for a in range(n))]
    if not ids:
        problems.append("no two-sided identity")
        return problems
    e = ids[0]
    for a in range(n):
        if not any(mul[a][b] == e == mul[b][a] for b in range(n)):
            problems.append(f"element {a} has no inverse")
    return problems


def validate_group(mul, name="G") -> FiniteGroup:
    mul = tuple(tuple(int(x) for x in row) for row in mul)
    problems = check_group(mul)
    if problems:
        raise AxiomViolation(problems)
    return FiniteGroup(mul, name)


def group_from_elements(elements, op, name="G") -> FiniteGroup:
    """Build a table from an explicit element list and a product function.

    ``elements[0]`` need not be the identity.
    """
    elements = list(elements)
    index = {x: i for i, x in enumerate(elements)}
    mul = tuple(tuple(index[op(a, b)] for b in elements) for a in elements)
    return FiniteGroup(mul, name, tuple(elements))


def generate(generators, op, identity):
    """Closure of ``generators`` under ``op``; returns a sorted element list."""
    elements = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for x in frontier:
            for g in generators:
                y = op(x, g)
                if y not in elements:
                    elements.add(y)
                    new.append(y)
        frontier = new
    return sorted(elements)


# ------------------------------------------------------------ constructors

def _compose(p, q):
    """Permutation product: apply ``q`` first, then ``p``."""
    return tuple(p[i] for i in q)


def permutation_group(generators, name="G") -> FiniteGroup:
    generators = [tuple(g) for g in generators]
    degree = len(generators[0])
    identity = tuple(range(degree))
    elements = generate(generators, _compose, identity)
    return group_from_elements(elements, _compose, name)


def cyclic_group(n: int) -> FiniteGroup:
    return group_from_elements(range(n), lambda a, b: (a + b) % n, f"Z{n}")


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n; elements are (rotation, reflect)."""
    def op(x, y):
        r1, f1 = x
        r2, f2 = y
        return ((r1 + (-r2 if f1 else r2)) % n, f1 ^ f2)
    elements = [(r, f) for f in (0, 1) for r in range(n)]
    return group_from_elements(elements, op, f"D{n}")


def symmetric_group(n: int) -> FiniteGroup:
    elements = sorted(itertools.permutations(range(n)))
    return group_from_elements(elements, _compose, f"S{n}")


def alternating_group(n: int) -> FiniteGroup:
    def even(p):
        inversions = sum(1 for i in range(n) for j in range(i) if p[j] > p[i])
        return inversions % 2 == 0
    elements = [p for p in sorted(itertools.permutations(range(n))) if even(p)]
    return group_from_elements(elements, _compose, f"A{n}")


def quaternion_group() -> FiniteGroup:
    # elements (sign, unit) with unit in 1, i, j, k
    table = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }

    def op(x, y):
        s, u = table[(x[1], y[1])]
        return (x[0] * y[0] * s, u)
    elements = [(s, u) for s in (1, -1) for u in "1ijk"]
    return group_from_elements(elements, op, "Q8")


def dicyclic_group(n: int) -> FiniteGroup:
    """Dic_n of order 4n: Z_{2n} extended by x with x^2 = a^n, x a x^-1 = a^-1."""
    m = 2 * n

    def op(p, q):
        a1, x1 = p
        a2, x2 = q
        if not x1:
            return ((a1 + a2) % m, x2)
        if not x2:
            return ((a1 - a2) % m, 1)
        return ((a1 - a2 + n) % m, 0)
    elements = [(a, x) for x in (0, 1) for a in range(m)]
    return group_from_elements(elements, op, f"Dic{n}")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    elements = [(a, b) for a in range(g.n) for b in range(h.n)]
    return group_from_elements(
        elements, lambda x, y: (g.mul[x[0]][y[0]], h.mul[x[1]][y[1]]), f"{g.name}x{h.name}")


def small_groups(max_order: int = 12) -> list[FiniteGroup]:
    """One representative of every isomorphism class of order <= 12."""
    if max_order > 12:
        raise ValueError("library only covers orders up to 12")
    z = cyclic_group
    groups = [
        z(1), z(2), z(3), z(4), direct_product(z(2), z(2)), z(5),
        z(6), symmetric_group(3), z(7),
        z(8), direct_product(z(2), z(4)), direct_product(direct_product(z(2), z(2)), z(2)),
        dihedral_group(4), quaternion_group(),
        z(9), direct_product(z(3), z(3)), z(10), dihedral_group(5), z(11),
        z(12), direct_product(z(2), z(6)), alternating_group(4), dihedral_group(6),
        dicyclic_group(3),
    ]
    return [g for g in groups if g.n <= max_order]


BUILTIN_GROUPS = {
    "S3": lambda: symmetric_group(3),
    "S4": lambda: symmetric_group(4),
    "A4": lambda: alternating_group(4),
    "Q8": quaternion_group,
    "Dic3": lambda: dicyclic_group(3),
}


def builtin_group(name: str) -> FiniteGroup:
    """Look up ``S3``, ``A4``, ``Q8``, ``Zn``, ``Dn`` and friends by name."""
    if name in BUILTIN_GROUPS:
        return BUILTIN_GROUPS[name]()
    if name[:1] in "ZD" and name[1:].isdigit() and int(name[1:]) >= 1:
        k = int(name[1:])
        return cyclic_group(k) if name[0] == "Z" else dihedral_group(k)
    raise KeyError(name)


# --------------------------------------------------------------- subgroups

def closure(g: FiniteGroup, elements) -> frozenset:
    found = set(elements) | {g.identity}
    frontier = list(found)
    while frontier:
        new = []
        for x in frontier:
            for y in list(found):
                for z in (g.mul[x][y], g.mul[y][x]):
                    if z not in found:
                        found.add(z)
                        new.append(z)
        frontier = new
    return frozenset(found)


def check_subgroup(g: FiniteGroup, elements) -> frozenset:
    sub = frozenset(elements)
    if not sub or any(not 0 <= x < g.n for x in sub):
        raise NotSubgroup(f"{sorted(sub)} is not a subset of {g.name}")
    inv = g.inverses()
    for a in sub:
        if inv[a] not in sub or any(g.mul[a][b] not in sub for b in sub):
            raise NotSubgroup(f"{sorted(sub)} is not closed in {g.name}")
    return sub


def subgroups(g: FiniteGroup) -> list[frozenset]:
    """All subgroups, by joining cyclic subgroups until nothing new appears."""
    cyclic = {closure(g, [a]) for a in range(g.n)}
    found = set(cyclic)
    frontier = set(cyclic)
    while frontier:
        new = set()
        for h in frontier:
            for c in cyclic:
                if not c <= h:
                    j = closure(g, h | c)
                    if j not in found:
                        new.add(j)
        found |= new
        frontier = new
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def center_of(g: FiniteGroup, sub) -> list[int]:
    """Elements of ``sub`` commuting with every element of ``sub``."""
    return sorted(m for m in sub if all(g.mul[m][p] == g.mul[p][m] for p in sub))
