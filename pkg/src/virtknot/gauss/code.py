"""Gauss codes: data model, text format, validation and canonical form.

A code is a tuple of components; each component is the cyclic sequence of
classical passages met while traversing it.  Virtual crossings are not
recorded.  Text grammar::

    code      := component (';' component)*
    component := '(' ')' | token (' ' token)*
    token     := ('O'|'U') id ('+'|'-')
"""

from __future__ import annotations

import itertools
import random
import re
from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple

from ..errors import GaussSemanticError, GaussSyntaxError, InvalidCode


class Passage(NamedTuple):
    crossing: int
    role: str  # 'O' or 'U'
    sign: int  # +1 or -1

    def __str__(self):
        return f"{self.role}{self.crossing}{'+' if self.sign > 0 else '-'}"


class Violation(NamedTuple):
    kind: str  # SignMismatch | UnpairedCrossing | DuplicateRole | BadToken
    crossing: int
    detail: str = ""

    def __str__(self):
        text = f"{self.kind}({self.crossing})"
        return f"{text}: {self.detail}" if self.detail else text


@dataclass(frozen=True)
class GaussCode:
    components: tuple[tuple[Passage, ...], ...]

    def __post_init__(self):
        comps = tuple(tuple(Passage(*p) for p in comp) for comp in self.components)
        object.__setattr__(self, "components", comps)

    def __str__(self):
        return serialize_gauss(self, canonical=False)

    @property
    def num_components(self):
        return len(self.components)

    def passages(self):
        """Yield ``(component, index, passage)`` for every passage."""
        for c, comp in enumerate(self.components):
            for i, p in enumerate(comp):
                yield c, i, p

    def crossings(self):
        """Sorted crossing ids."""
        return sorted({p.crossing for _, _, p in self.passages()})

    @property
    def num_crossings(self):
        return len(self.crossings())

    def locate(self):
        """Map crossing id -> {'O': (comp, idx), 'U': (comp, idx)}."""
        where = {}
        for c, i, p in self.passages():
            where.setdefault(p.crossing, {})[p.role] = (c, i)
        return where

    def signs(self):
        return {p.crossing: p.sign for _, _, p in self.passages()}

    def canonical(self) -> "GaussCode":
        return canonicalize(self)

    def canonically_equal(self, other: "GaussCode") -> bool:
        return canonical_key(self) == canonical_key(other)

    def is_knot(self):
        return len(self.components) == 1


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"([OU])([1-9][0-9]*)([+-])")


def parse_gauss(text: str) -> GaussCode:
    """Parse and validate a Gauss code.

    ``""`` and ``"()"`` both denote the crossingless unknot.
    """
    stripped = text.strip()
    if not stripped:
        return GaussCode(((),))
    components = []
    offset = 0
    for chunk in text.split(";"):
        components.append(_parse_component(chunk, offset))
        offset += len(chunk) + 1
    code = GaussCode(tuple(components))
    problems = validate(code)
    if problems:
        raise GaussSemanticError(problems)
    return code


def _parse_component(chunk, offset):
    lead = len(chunk) - len(chunk.lstrip())
    body = chunk.strip()
    start = offset + lead
    if not body:
        raise GaussSyntaxError("empty component (use '()')", start)
    if body == "()":
        return ()
    passages = []
    pos = 0
    while True:
        m = _TOKEN.match(body, pos)
        if m is None:
            raise GaussSyntaxError(f"bad token {body[pos:pos + 6]!r}", start + pos)
        role, ident, sign = m.groups()
        passages.append(Passage(int(ident), role, 1 if sign == "+" else -1))
        pos = m.end()
        if pos == len(body):
            break
        if body[pos] != " ":
            raise GaussSyntaxError(f"expected ' ' but found {body[pos]!r}", start + pos)
        pos += 1
    return tuple(passages)


def validate(code: GaussCode) -> list[Violation]:
    """Return the list of invariant violations (empty iff the code is valid)."""
    out = []
    roles: dict[int, Counter] = {}
    signs: dict[int, set] = {}
    for _, _, p in code.passages():
        if p.role not in ("O", "U") or p.sign not in (1, -1) or p.crossing < 1:
            out.append(Violation("BadToken", p.crossing, repr(tuple(p))))
            continue
        roles.setdefault(p.crossing, Counter())[p.role] += 1
        signs.setdefault(p.crossing, set()).add(p.sign)
    if not code.components:
        out.append(Violation("BadToken", 0, "code has no components"))
    for cid in sorted(roles):
        count = roles[cid]
        for role in ("O", "U"):
            if count[role] > 1:
                out.append(Violation("DuplicateRole", cid, f"{role} appears {count[role]} times"))
        if sum(count.values()) == 1:
            out.append(Violation("UnpairedCrossing", cid))
        if len(signs[cid]) > 1:
            out.append(Violation("SignMismatch", cid))
    return out


def require_valid(code: GaussCode):
    problems = validate(code)
    if problems:
        raise InvalidCode("; ".join(str(p) for p in problems))


# ---------------------------------------------------------- serialization

def serialize_gauss(code: GaussCode, canonical: bool = True) -> str:
    if canonical:
        code = canonicalize(code)
    parts = []
    for comp in code.components:
        parts.append(" ".join(str(p) for p in comp) if comp else "()")
    return "; ".join(parts)


def _relabel(components):
    labels = {}
    out = []
    for comp in components:
        row = []
        for p in comp:
            if p.crossing not in labels:
                labels[p.crossing] = len(labels) + 1
            row.append((p.role, labels[p.crossing], p.sign < 0))
        out.append(tuple(row))
    return tuple(out)


def canonical_key(code: GaussCode):
    """Least relabeled form over component orders and rotations.

    Tokens compare as ``(role, id, negative)`` with numeric ids, i.e. in the
    order they are written.
    """
    rotations = [
        [comp[i:] + comp[:i] for i in range(len(comp))] or [()]
        for comp in code.components
    ]
    best = None
    for order in itertools.permutations(range(len(rotations))):
        for choice in itertools.product(*(rotations[k] for k in order)):
            key = _relabel(choice)
            if best is None or key < best:
                best = key
    return best


def canonicalize(code: GaussCode) -> GaussCode:
    key = canonical_key(code)
    return GaussCode(tuple(
        tuple(Passage(ident, role, -1 if neg else 1) for role, ident, neg in comp)
        for comp in key
    ))


# ------------------------------------------------------------- generation

def random_code(rng: random.Random, max_crossings=8, max_components=2,
                num_crossings=None) -> GaussCode:
    """A uniformly shuffled valid code; used for property tests."""
    n = rng.randint(0, max_crossings) if num_crossings is None else num_crossings
    k = rng.randint(1, max_components)
    tokens = []
    for cid in range(1, n + 1):
        sign = rng.choice((1, -1))
        tokens += [Passage(cid, "O", sign), Passage(cid, "U", sign)]
    rng.shuffle(tokens)
    cuts = sorted(rng.randint(0, len(tokens)) for _ in range(k - 1))
    bounds = [0, *cuts, len(tokens)]
    comps = tuple(tuple(tokens[a:b]) for a, b in zip(bounds, bounds[1:]))
    return GaussCode(comps)


def random_knot(rng: random.Random, max_crossings=6, num_crossings=None) -> GaussCode:
    return random_code(rng, max_crossings, 1, num_crossings)
