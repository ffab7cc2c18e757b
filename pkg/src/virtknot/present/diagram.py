"""Presentations read off a Gauss code.

Arcs run from just after one Under passage up to and including the next one;
semi-arcs run from one passage to the next regardless of role.  Arc names are
``a1, a2, ...`` and semi-arc names ``s1, s2, ...``, numbered component by
component in traversal order.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import NonWirtingerRelation
from ..gauss.code import GaussCode, require_valid
from .presentation import (BIQUANDLE, GROUP, QUANDLE, GroupRelation, Presentation,
                           Relation, Step)


@dataclass(frozen=True)
class CrossingSlots:
    """Generator names incident to one crossing."""

    crossing: int
    sign: int
    under_in: str
    under_out: str
    over_in: str
    over_out: str


def arc_names(code: GaussCode):
    """Map ``(component, index)`` to the arc containing that passage.

    Also returns the list of arc names in order.  A component with no Under
    passages (including an empty one) is a single arc.
    """
    owner = {}
    names = []
    for c, comp in enumerate(code.components):
        unders = [i for i, p in enumerate(comp) if p.role == "U"]
        if not unders:
            names.append(f"a{len(names) + 1}")
            for i in range(len(comp)):
                owner[(c, i)] = names[-1]
            owner.setdefault((c, None), names[-1])
            continue
        first = len(names)
        for k in range(len(unders)):
            names.append(f"a{first + k + 1}")
        n = len(comp)
        # walk backwards from each Under passage to the previous one
        for k, u in enumerate(unders):
            name = names[first + k]
            i = u
            while True:
                owner[(c, i)] = name
                i = (i - 1) % n
                if comp[i].role == "U":
                    break
    return owner, names


def semiarc_names(code: GaussCode):
    """Map ``(component, index)`` to the semi-arc leaving that passage."""
    owner = {}
    names = []
    for c, comp in enumerate(code.components):
        if not comp:
            names.append(f"s{len(names) + 1}")
            owner[(c, None)] = names[-1]
            continue
        for i in range(len(comp)):
            names.append(f"s{len(names) + 1}")
            owner[(c, i)] = names[-1]
    return owner, names


def crossing_slots(code: GaussCode, semi: bool):
    """Incident generators at every crossing, ordered by crossing id."""
    owner, _ = semiarc_names(code) if semi else arc_names(code)
    where = code.locate()
    out = []
    for cid in sorted(where):
        (uc, ui), (oc, oi) = where[cid]["U"], where[cid]["O"]
        ulen, olen = len(code.components[uc]), len(code.components[oc])
        sign = code.components[uc][ui].sign
        if semi:
            under_in, under_out = owner[(uc, (ui - 1) % ulen)], owner[(uc, ui)]
            over_in, over_out = owner[(oc, (oi - 1) % olen)], owner[(oc, oi)]
        else:
            under_in, under_out = owner[(uc, ui)], owner[(uc, (ui + 1) % ulen)]
            over_in = over_out = owner[(oc, oi)]
        out.append(CrossingSlots(cid, sign, under_in, under_out, over_in, over_out))
    return out


def wirtinger_quandle(code: GaussCode) -> Presentation:
    """Arcs as generators, one relation ``out = in ^(+/-) over`` per crossing."""
    require_valid(code)
    _, names = arc_names(code)
    rels = tuple(
        Relation(s.under_out, s.under_in, (Step("up" if s.sign > 0 else "up_bar", s.over_in),))
        for s in crossing_slots(code, semi=False)
    )
    return Presentation(QUANDLE, tuple(names), rels)


def semiarc_biquandle(code: GaussCode) -> Presentation:
    """Semi-arcs as generators, two relations per crossing."""
    require_valid(code)
    _, names = semiarc_names(code)
    return Presentation(BIQUANDLE, tuple(names), tuple(biquandle_relations(
        crossing_slots(code, semi=True))))


def biquandle_relations(slots):
    for s in slots:
        up, down = ("up", "down") if s.sign > 0 else ("up_bar", "down_bar")
        yield Relation(s.under_out, s.under_in, (Step(up, s.over_in),))
        yield Relation(s.over_out, s.over_in, (Step(down, s.under_in),))


def adconj(q: Presentation) -> Presentation:
    """Read each quandle step as conjugation: ``z up y`` is ``y z y^-1``.

    ``x = z ^e1 y1 ... ^ek yk`` becomes the word ``x W z^-1 W^-1`` with
    ``W = yk^ek ... y1^e1``.
    """
    if q.kind != QUANDLE:
        raise NonWirtingerRelation(f"expected a quandle presentation, got {q.kind}")
    rels = []
    for r in q.relations:
        w = []
        for s in reversed(r.steps):
            if s.op not in ("up", "up_bar"):
                raise NonWirtingerRelation(f"step {s.op!r} is not a conjugation")
            w.append((s.arg, 1 if s.op == "up" else -1))
        inverse = [(g, -e) for g, e in reversed(w)]
        rels.append(GroupRelation(tuple(_reduce([(r.lhs, 1), *w, (r.base, -1), *inverse]))))
    return Presentation(GROUP, q.generators, tuple(rels))


def _reduce(word):
    out = []
    for g, e in word:
        if out and out[-1][0] == g:
            e += out.pop()[1]
        if e:
            out.append((g, e))
    return out


def wirtinger_group(code: GaussCode) -> Presentation:
    return adconj(wirtinger_quandle(code))
