"""Presentation data types and their JSON form."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InvalidPresentation

QUANDLE, GROUP, BIQUANDLE = "quandle", "group", "biquandle"
KINDS = (QUANDLE, GROUP, BIQUANDLE)
QUANDLE_OPS = ("up", "up_bar")
BIQUANDLE_OPS = ("up", "down", "up_bar", "down_bar")


@dataclass(frozen=True)
class Step:
    op: str
    arg: str


@dataclass(frozen=True)
class Relation:
    """``lhs = base`` followed by each step applied left to right."""

    lhs: str
    base: str
    steps: tuple[Step, ...] = ()

    def symbols(self):
        return {self.lhs, self.base, *(s.arg for s in self.steps)}

    def __str__(self):
        rhs = self.base + "".join(f" {s.op} {s.arg}" for s in self.steps)
        return f"{self.lhs} = {rhs}"


@dataclass(frozen=True)
class GroupRelation:
    """A word ``g1^e1 g2^e2 ...`` equal to the identity."""

    word: tuple[tuple[str, int], ...]

    def symbols(self):
        return {g for g, _ in self.word}

    def __str__(self):
        return " ".join(g if e == 1 else f"{g}^{e}" for g, e in self.word) or "1"


@dataclass(frozen=True)
class Presentation:
    kind: str
    generators: tuple[str, ...]
    relations: tuple = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidPresentation(f"unknown presentation kind {self.kind!r}")
        gens = set(self.generators)
        if len(gens) != len(self.generators):
            raise InvalidPresentation("duplicate generator")
        allowed = QUANDLE_OPS if self.kind == QUANDLE else BIQUANDLE_OPS
        for r in self.relations:
            if self.kind == GROUP:
                if not isinstance(r, GroupRelation):
                    raise InvalidPresentation("group presentations take word relations")
            else:
                if not isinstance(r, Relation):
                    raise InvalidPresentation(f"{self.kind} presentations take lhs/rhs relations")
                bad = [s.op for s in r.steps if s.op not in allowed]
                if bad:
                    raise InvalidPresentation(f"operation {bad[0]!r} not allowed in {self.kind}")
            missing = r.symbols() - gens
            if missing:
                raise InvalidPresentation(f"undeclared symbol {sorted(missing)[0]!r} in {r}")

    def to_json(self):
        rels = []
        for r in self.relations:
            if isinstance(r, GroupRelation):
                rels.append({"word": [[g, e] for g, e in r.word]})
            else:
                rels.append({"lhs": r.lhs, "rhs": {
                    "base": r.base, "ops": [{"op": s.op, "arg": s.arg} for s in r.steps]}})
        return {"kind": self.kind, "generators": list(self.generators), "relations": rels}

    def rename(self, mapping) -> "Presentation":
        """Apply a generator renaming (missing names are kept)."""
        f = lambda g: mapping.get(g, g)  # noqa: E731
        rels = []
        for r in self.relations:
            if isinstance(r, GroupRelation):
                rels.append(GroupRelation(tuple((f(g), e) for g, e in r.word)))
            else:
                rels.append(Relation(f(r.lhs), f(r.base),
                                     tuple(Step(s.op, f(s.arg)) for s in r.steps)))
        return Presentation(self.kind, tuple(f(g) for g in self.generators), tuple(rels))


def presentation_from_json(data: dict) -> Presentation:
    try:
        kind = data["kind"]
        gens = tuple(data["generators"])
        rels = []
        for r in data.get("relations", []):
            if kind == GROUP:
                rels.append(GroupRelation(tuple((str(g), int(e)) for g, e in r["word"])))
            else:
                rhs = r["rhs"]
                rels.append(Relation(r["lhs"], rhs["base"], tuple(
                    Step(s["op"], s["arg"]) for s in rhs.get("ops", []))))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidPresentation(f"malformed presentation JSON: {exc!r}") from None
    return Presentation(kind, gens, tuple(rels))
