"""Double point curve data of spun knots and the sheet presentations.

Spinning a knot diagram turns every semi-arc into a sheet and every classical
crossing into one closed double point curve where the same four sheets meet,
so the data is a relabeling-free copy of the semi-arc structure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidData, MultiComponent
from .gauss.code import GaussCode, require_valid
from .present.diagram import adconj, biquandle_relations, crossing_slots, semiarc_names
from .present.presentation import BIQUANDLE, QUANDLE, Presentation, Relation, Step

SPUN = "spun"
UNCHECKED = "unchecked realizability"


@dataclass(frozen=True)
class Curve:
    over_in: str
    over_out: str
    under_in: str
    under_out: str
    sign: int

    def to_json(self):
        return {"over_in": self.over_in, "over_out": self.over_out,
                "under_in": self.under_in, "under_out": self.under_out, "sign": self.sign}


@dataclass(frozen=True)
class DoublePointData:
    sheets: tuple[str, ...]
    curves: tuple[Curve, ...]
    realizability: str = UNCHECKED

    def to_json(self):
        return {"sheets": list(self.sheets), "curves": [c.to_json() for c in self.curves],
                "realizability": self.realizability}


def check_data(d: DoublePointData):
    declared = set(d.sheets)
    if len(declared) != len(d.sheets):
        raise InvalidData("duplicate sheet symbol")
    if not d.sheets:
        raise InvalidData("no sheets")
    for k, c in enumerate(d.curves):
        if c.sign not in (1, -1):
            raise InvalidData(f"curve {k} has sign {c.sign!r}")
        for slot in ("over_in", "over_out", "under_in", "under_out"):
            v = getattr(c, slot)
            if v is None or v == "":
                raise InvalidData(f"curve {k} has an empty {slot} slot")
            if v not in declared:
                raise InvalidData(f"curve {k} uses undeclared sheet {v!r}")


def data_from_json(data: dict) -> DoublePointData:
    try:
        curves = tuple(Curve(c["over_in"], c["over_out"], c["under_in"], c["under_out"],
                             int(c["sign"])) for c in data.get("curves", []))
        d = DoublePointData(tuple(data["sheets"]), curves)
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidData(f"malformed double point data: {exc!r}") from None
    check_data(d)
    # realizability is never taken on trust from input
    return d


def spin(code: GaussCode) -> DoublePointData:
    require_valid(code)
    if len(code.components) != 1:
        raise MultiComponent(f"spin needs a knot, got {len(code.components)} components")
    _, names = semiarc_names(code)
    curves = tuple(Curve(s.over_in, s.over_out, s.under_in, s.under_out, s.sign)
                   for s in crossing_slots(code, semi=True))
    return DoublePointData(tuple(names), curves, SPUN)


def sheet_biquandle(d: DoublePointData) -> Presentation:
    check_data(d)
    return Presentation(BIQUANDLE, d.sheets, tuple(biquandle_relations(d.curves)))


def faces(d: DoublePointData) -> dict:
    """Map each sheet to its face: sheets joined across an over-sheet are merged."""
    check_data(d)
    parent = {s: s for s in d.sheets}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x
    for c in d.curves:
        a, b = find(c.over_in), find(c.over_out)
        if a != b:
            parent[b] = a
    names = {}
    out = {}
    for s in d.sheets:
        root = find(s)
        if root not in names:
            names[root] = f"f{len(names) + 1}"
        out[s] = names[root]
    return out


def sheet_quandle(d: DoublePointData) -> Presentation:
    """Faces as generators and ``under_out = under_in ^(+/-) over`` per curve."""
    face = faces(d)
    gens = tuple(dict.fromkeys(face[s] for s in d.sheets))
    rels = tuple(
        Relation(face[c.under_out], face[c.under_in],
                 (Step("up" if c.sign > 0 else "up_bar", face[c.over_in]),))
        for c in d.curves
    )
    return Presentation(QUANDLE, gens, rels)


def sheet_group(d: DoublePointData) -> Presentation:
    return adconj(sheet_quandle(d))
