"""Ribbon data: bases joined by handles that pass through bases.

Bases are numbered ``1..k``; handles are indexed from 0 in list order.  A
handle ``(start, passes, end)`` gives the quandle relation

    b_end = b_start ^p1 ^p2 ...

where a passage ``(b, +1)`` contributes ``^ b-bar`` and ``(b, -1)``
contributes ``^ b``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import BadBaseId, InvalidRibbonData, MultiComponent, NotIncident, SelfSlide
from .gauss.code import GaussCode, require_valid
from .present.diagram import arc_names, crossing_slots
from .present.presentation import QUANDLE, Presentation, Relation, Step

START, END = "start", "end"


@dataclass(frozen=True)
class Handle:
    start: int
    passes: tuple[tuple[int, int], ...]
    end: int

    def __post_init__(self):
        object.__setattr__(self, "passes", tuple((int(b), int(s)) for b, s in self.passes))

    def reversed(self) -> "Handle":
        return Handle(self.end, _inverse_word(self.passes), self.start)

    def to_json(self):
        return {"start": self.start, "passes": [list(p) for p in self.passes], "end": self.end}


def _inverse_word(word):
    return tuple((b, -s) for b, s in reversed(word))


@dataclass(frozen=True)
class RibbonData:
    num_bases: int
    handles: tuple[Handle, ...]

    def __post_init__(self):
        object.__setattr__(self, "handles", tuple(self.handles))
        problems = check_ribbon(self)
        if problems:
            raise (problems[0] if len(problems) == 1 else InvalidRibbonData(
                "; ".join(str(p) for p in problems)))

    def to_json(self):
        return {"bases": self.num_bases, "handles": [h.to_json() for h in self.handles]}

    def genus(self) -> int:
        return genus(self)


def check_ribbon(r: RibbonData) -> list[InvalidRibbonData]:
    if not isinstance(r.num_bases, int) or r.num_bases < 1:
        return [InvalidRibbonData("need at least one base")]
    out = []
    ok = range(1, r.num_bases + 1)
    for k, h in enumerate(r.handles):
        for b in (h.start, h.end, *(b for b, _ in h.passes)):
            if b not in ok:
                out.append(BadBaseId(f"handle {k} refers to base {b}"))
        for _, s in h.passes:
            if s not in (1, -1):
                out.append(InvalidRibbonData(f"handle {k} has passage sign {s}"))
    if out:
        return out
    parent = list(range(r.num_bases + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x
    for h in r.handles:
        parent[find(h.start)] = find(h.end)
    if len({find(b) for b in ok}) > 1:
        out.append(InvalidRibbonData("bases and handles do not form a connected graph"))
    return out


def ribbon_from_json(data: dict) -> RibbonData:
    try:
        handles = tuple(
            Handle(int(h["start"]), tuple((int(b), int(s)) for b, s in h.get("passes", [])),
                   int(h["end"]))
            for h in data["handles"])
        bases = data["bases"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidRibbonData(f"malformed ribbon JSON: {exc!r}") from None
    if not isinstance(bases, int):
        raise InvalidRibbonData("'bases' must be an integer")
    return RibbonData(bases, handles)


def base_name(b: int) -> str:
    return f"b{b}"


def ribbon_quandle(r: RibbonData) -> Presentation:
    gens = tuple(base_name(b) for b in range(1, r.num_bases + 1))
    rels = tuple(
        Relation(base_name(h.end), base_name(h.start), tuple(
            Step("up_bar" if s > 0 else "up", base_name(b)) for b, s in h.passes))
        for h in r.handles
    )
    return Presentation(QUANDLE, gens, rels)


def genus(r: RibbonData) -> int:
    """Number of 1-handles beyond a tree: ``|H| - |B| + 1``."""
    return len(r.handles) - r.num_bases + 1


# ------------------------------------------------------------ stable moves

def add_trivial_base(r: RibbonData, attach_to: int) -> RibbonData:
    if attach_to not in range(1, r.num_bases + 1):
        raise BadBaseId(f"no base {attach_to}")
    new = r.num_bases + 1
    return RibbonData(new, (*r.handles, Handle(new, (), attach_to)))


def handle_slide(r: RibbonData, slide: int, along: int, which_end: str,
                 reverse: bool = False) -> RibbonData:
    """Slide one end of handle ``slide`` across handle ``along``.

    The end moves from the base it sits on to the other end of ``along``.
    For an ``END`` slide the word of ``along`` read from the old base to the
    new one is appended; for a ``START`` slide the word read from the new
    base to the old one is prepended, so the handle's relation is unchanged
    modulo the relation of ``along``.  When ``along`` is a loop both
    directions are possible and ``reverse`` chooses the backward one.
    """
    n = len(r.handles)
    for k in (slide, along):
        if not isinstance(k, int) or not 0 <= k < n:
            raise InvalidRibbonData(f"no handle {k}")
    if slide == along:
        raise SelfSlide(f"handle {slide} cannot slide along itself")
    if which_end not in (START, END):
        raise InvalidRibbonData(f"which_end must be {START!r} or {END!r}")
    h, a = r.handles[slide], r.handles[along]
    old = h.start if which_end == START else h.end
    if a.start == a.end == old:
        word = _inverse_word(a.passes) if reverse else a.passes
        new = old
    elif old == a.start:
        word, new = a.passes, a.end
    elif old == a.end:
        word, new = _inverse_word(a.passes), a.start
    else:
        raise NotIncident(f"handle {slide} {which_end} (base {old}) is not on handle {along}")
    if which_end == END:
        moved = Handle(h.start, h.passes + word, new)
    else:
        moved = Handle(new, _inverse_word(word) + h.passes, h.end)
    handles = list(r.handles)
    handles[slide] = moved
    return RibbonData(r.num_bases, tuple(handles))


def legal_slides(r: RibbonData):
    """Every ``(slide, along, which_end, reverse)`` accepted by :func:`handle_slide`."""
    out = []
    for s, h in enumerate(r.handles):
        for a, g in enumerate(r.handles):
            if s == a:
                continue
            for end, base in ((START, h.start), (END, h.end)):
                if base in (g.start, g.end):
                    out.append((s, a, end, False))
                    if g.start == g.end:
                        out.append((s, a, end, True))
    return out


def handle_pass(r: RibbonData) -> RibbonData:
    """Passing one handle through another leaves the ribbon data unchanged."""
    return r


def reverse_handle(r: RibbonData, k: int) -> RibbonData:
    """Traverse handle ``k`` the other way (a normalization, not a move)."""
    handles = list(r.handles)
    handles[k] = handles[k].reversed()
    return RibbonData(r.num_bases, tuple(handles))


# ------------------------------------------------------------------- tube

def tube(code: GaussCode) -> RibbonData:
    """Ribbon torus of a welded knot: arcs become bases, crossings handles.

    The handle of a crossing runs from the incoming under arc to the
    outgoing one and passes once through the over arc's base.  The passage
    sign is opposite to the crossing sign, which makes the ribbon quandle
    coincide with the arc presentation generator for generator.
    """
    require_valid(code)
    if len(code.components) != 1:
        raise MultiComponent(f"tube needs a knot, got {len(code.components)} components")
    _, names = arc_names(code)
    base = {name: k + 1 for k, name in enumerate(names)}
    slots = crossing_slots(code, semi=False)
    if not slots:
        return RibbonData(1, (Handle(1, (), 1),))
    handles = tuple(
        Handle(base[s.under_in], ((base[s.over_in], -s.sign),), base[s.under_out])
        for s in slots
    )
    return RibbonData(len(names), handles)


def random_ribbon(rng: random.Random, max_bases=4, max_handles=5, max_word=4) -> RibbonData:
    """Connected random ribbon data within the given bounds."""
    k = rng.randint(1, max_bases)
    extra = rng.randint(0, max(0, max_handles - (k - 1)))
    ends = []
    order = list(range(1, k + 1))
    rng.shuffle(order)
    for i in range(1, k):
        ends.append((order[i], order[rng.randrange(i)]))
    for _ in range(extra):
        ends.append((rng.randint(1, k), rng.randint(1, k)))
    rng.shuffle(ends)
    handles = []
    for a, b in ends:
        if rng.random() < 0.5:
            a, b = b, a
        word = tuple((rng.randint(1, k), rng.choice((1, -1)))
                     for _ in range(rng.randint(0, max_word)))
        handles.append(Handle(a, word, b))
    return RibbonData(k, tuple(handles))
