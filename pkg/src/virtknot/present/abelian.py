"""Abelianization of a finitely presented group via Smith normal form."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InvalidPresentation
from .presentation import GROUP, Presentation


@dataclass(frozen=True)
class Abelianization:
    rank: int
    torsion: tuple[int, ...]

    def to_json(self):
        return {"rank": self.rank, "torsion": list(self.torsion)}

    def __str__(self):
        parts = ["Z"] * self.rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "0"


def relation_matrix(g: Presentation):
    """Exponent-sum matrix: one row per relation, one column per generator."""
    index = {x: j for j, x in enumerate(g.generators)}
    rows = []
    for r in g.relations:
        row = [0] * len(index)
        for x, e in r.word:
            row[index[x]] += e
        rows.append(row)
    return rows


def smith_diagonal(matrix) -> list[int]:
    """Nonzero diagonal entries of the Smith normal form, each dividing the next."""
    a = [list(row) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if a else 0
    diag = []
    t = 0
    while t < rows and t < cols:
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    done = False
            if done:
                # pivot must divide the rest of the block
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                            if a[i][j] % p), None)
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # move the smallest nonzero entry of row/column t into the pivot
            best = (t, t)
            for i in range(t, rows):
                if a[i][t] and abs(a[i][t]) < abs(a[best[0]][best[1]]):
                    best = (i, t)
            for j in range(t, cols):
                if a[t][j] and abs(a[t][j]) < abs(a[best[0]][best[1]]):
                    best = (t, j)
            i, j = best
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def abelianization(g: Presentation) -> Abelianization:
    if g.kind != GROUP:
        raise InvalidPresentation(f"abelianization needs a group presentation, got {g.kind}")
    diag = smith_diagonal(relation_matrix(g))
    return Abelianization(len(g.generators) - len(diag), tuple(d for d in diag if d != 1))
