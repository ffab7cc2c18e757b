"""Reidemeister moves and the welded forbidden move as Gauss-code rewrites.

Sites are positional and refer to the code they are applied to (no
canonicalization happens inside :func:`apply_move`).  A *gap* ``g`` on a
component means "insert before index ``g``"; a *pair position* ``(c, i)``
means the passages at indices ``i`` and ``i + 1`` (cyclically) of component
``c``.

Site fields per kind:

``R1_insert``   component, gap, sign, over_first
``R1_delete``   crossing
``R2_insert``   over_component, over_gap, under_component, under_gap, sign,
                antiparallel.  ``under_gap`` indexes the under component
                *after* the two over passages have been inserted; ``sign`` is
                the sign of the first new crossing, the second gets ``-sign``.
``R2_delete``   first, second (crossings whose over passages are adjacent, in
                that order)
``R3``          top, middle, bottom: pair positions of the strand passing
                over both others, the middle strand and the bottom strand
``Forbidden``   component, index: two adjacent over passages to exchange
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from ..errors import InvalidSite, PatternMismatch
from .code import GaussCode, Passage, require_valid

KINDS = ("R1_insert", "R1_delete", "R2_insert", "R2_delete", "R3", "Forbidden")
CLASSICAL_KINDS = KINDS[:5]


@dataclass(frozen=True)
class MoveInstance:
    kind: str
    site: tuple[tuple[str, Any], ...]

    @classmethod
    def make(cls, kind, **site):
        if kind not in KINDS:
            raise InvalidSite(f"unknown move kind {kind!r}")
        frozen = {k: tuple(v) if isinstance(v, list) else v for k, v in site.items()}
        return cls(kind, tuple(sorted(frozen.items())))

    @property
    def params(self) -> dict:
        return dict(self.site)

    def to_dict(self):
        return {"kind": self.kind,
                "site": {k: list(v) if isinstance(v, tuple) else v for k, v in self.site}}

    @classmethod
    def from_dict(cls, data):
        return cls.make(data["kind"], **data.get("site", {}))


def _pair_valid_r3(order_top, order_mid, order_bot, s_tm, s_tb, s_mb):
    # Signs are all equal after flipping, for every strand whose pair is in
    # "reversed" order, the signs of that strand's two crossings.
    x = s_tm * (-1) ** (order_top + order_mid)
    y = s_tb * (-1) ** (order_top + order_bot)
    z = s_mb * (-1) ** (order_mid + order_bot)
    return x == y == z


# Entries are (TM before TB on top, TM before MB on middle, TB before MB on
# bottom, sign TM, sign TB, sign MB) for reversed-order flags 0/1.
R3_CONFIGURATIONS = frozenset(
    (bool(a), bool(b), bool(c), s1, s2, s3)
    for a in (0, 1) for b in (0, 1) for c in (0, 1)
    for s1 in (1, -1) for s2 in (1, -1) for s3 in (1, -1)
    if _pair_valid_r3(1 - a, 1 - b, 1 - c, s1, s2, s3)
)


# ---------------------------------------------------------------- helpers

def _comps(code):
    return [list(c) for c in code.components]


def _check_component(code, c):
    if not isinstance(c, int) or not 0 <= c < len(code.components):
        raise InvalidSite(f"no component {c}")


def _check_gap(code, c, g):
    _check_component(code, c)
    size = len(code.components[c])
    if not isinstance(g, int) or not 0 <= g <= max(size - 1, 0):
        raise InvalidSite(f"no gap {g} on component {c}")


def _pair(code, pos):
    try:
        c, i = pos
    except (TypeError, ValueError):
        raise InvalidSite(f"bad pair position {pos!r}") from None
    _check_component(code, c)
    comp = code.components[c]
    if len(comp) < 2 or not 0 <= i < len(comp):
        raise InvalidSite(f"no pair at {pos!r}")
    j = (i + 1) % len(comp)
    return (c, i), (c, j), comp[i], comp[j]


def _rotate(seq, k):
    return seq[k:] + seq[:k]


def _new_ids(code, count):
    top = max(code.crossings(), default=0)
    return list(range(top + 1, top + 1 + count))


# ------------------------------------------------------------- application

def apply_move(code: GaussCode, m: MoveInstance) -> GaussCode:
    """Apply ``m`` to ``code``; raises PatternMismatch or InvalidSite."""
    handler = _APPLY.get(m.kind)
    if handler is None:
        raise InvalidSite(f"unknown move kind {m.kind!r}")
    try:
        return handler(code, **m.params)
    except TypeError as exc:
        raise InvalidSite(f"bad site for {m.kind}: {exc}") from None


def _r1_insert(code, component, gap, sign, over_first=True):
    _check_gap(code, component, gap)
    if sign not in (1, -1):
        raise InvalidSite("sign must be +1 or -1")
    (cid,) = _new_ids(code, 1)
    roles = ("O", "U") if over_first else ("U", "O")
    comps = _comps(code)
    comps[component][gap:gap] = [Passage(cid, roles[0], sign), Passage(cid, roles[1], sign)]
    return GaussCode(tuple(map(tuple, comps)))


def _r1_delete(code, crossing):
    where = code.locate().get(crossing)
    if where is None:
        raise InvalidSite(f"no crossing {crossing}")
    (co, io), (cu, iu) = where["O"], where["U"]
    size = len(code.components[co])
    if co != cu or (io - iu) % size not in (1, size - 1):
        raise PatternMismatch(f"crossing {crossing} is not an isolated kink")
    comps = _comps(code)
    first = io if (iu - io) % size == 1 else iu
    comps[co] = _rotate(comps[co], first)[2:]
    return GaussCode(tuple(map(tuple, comps)))


def _r2_insert(code, over_component, over_gap, under_component, under_gap,
               sign, antiparallel=False):
    _check_gap(code, over_component, over_gap)
    if sign not in (1, -1):
        raise InvalidSite("sign must be +1 or -1")
    a, b = _new_ids(code, 2)
    comps = _comps(code)
    comps[over_component][over_gap:over_gap] = [Passage(a, "O", sign), Passage(b, "O", -sign)]
    _check_component(code, under_component)
    size = len(comps[under_component])
    if not isinstance(under_gap, int) or not 0 <= under_gap <= max(size - 1, 0):
        raise InvalidSite(f"no gap {under_gap} on component {under_component}")
    if under_component == over_component and under_gap == over_gap + 1:
        raise InvalidSite("under gap splits the over pair")
    unders = [Passage(a, "U", sign), Passage(b, "U", -sign)]
    if antiparallel:
        unders.reverse()
    comps[under_component][under_gap:under_gap] = unders
    return GaussCode(tuple(map(tuple, comps)))


def _r2_sites(code, first, second):
    """Positions of the R2 bigon formed by crossings ``first``, ``second``."""
    where = code.locate()
    if first not in where or second not in where or first == second:
        raise InvalidSite(f"no crossing pair ({first}, {second})")
    signs = code.signs()
    if signs[first] != -signs[second]:
        raise PatternMismatch("R2 crossings must have opposite signs")
    (ca, ia), (cb, ib) = where[first]["O"], where[second]["O"]
    size = len(code.components[ca])
    if ca != cb or (ib - ia) % size != 1:
        raise PatternMismatch("over passages are not adjacent in order")
    (ua, ja), (ub, jb) = where[first]["U"], where[second]["U"]
    usize = len(code.components[ua])
    if ua != ub:
        raise PatternMismatch("under passages are on different components")
    if (jb - ja) % usize == 1:
        return (ca, ia), (ua, ja), False
    if (ja - jb) % usize == 1:
        return (ca, ia), (ua, jb), True
    raise PatternMismatch("under passages are not adjacent")


def _r2_delete(code, first, second):
    (oc, oi), (uc, ui), _ = _r2_sites(code, first, second)
    comps = _comps(code)
    if oc == uc:
        size = len(comps[oc])
        seq = _rotate(comps[oc], oi)[2:]
        ui = (ui - oi) % size - 2
        comps[oc] = seq[:ui] + seq[ui + 2:]
    else:
        comps[oc] = _rotate(comps[oc], oi)[2:]
        comps[uc] = _rotate(comps[uc], ui)[2:]
    return GaussCode(tuple(map(tuple, comps)))


def _r3_roles(code, top, middle, bottom):
    pairs = [_pair(code, pos) for pos in (top, middle, bottom)]
    spots = [spot for p in pairs for spot in p[:2]]
    if len(set(spots)) != 6:
        raise PatternMismatch("R3 pairs overlap")
    (_, _, t1, t2), (_, _, m1, m2), (_, _, b1, b2) = pairs
    if not (t1.role == t2.role == "O" and b1.role == b2.role == "U"):
        raise PatternMismatch("top pair must be over-over and bottom under-under")
    if {m1.role, m2.role} != {"O", "U"}:
        raise PatternMismatch("middle pair must be one under and one over passage")
    mu, mo = (m1, m2) if m1.role == "U" else (m2, m1)
    tm, mb = mu.crossing, mo.crossing
    top_ids = {t1.crossing, t2.crossing}
    if tm not in top_ids or len(top_ids) != 2:
        raise PatternMismatch("middle strand does not pass under the top strand")
    tb = (top_ids - {tm}).pop()
    if {b1.crossing, b2.crossing} != {tb, mb} or len({tm, tb, mb}) != 3:
        raise PatternMismatch("bottom strand does not pass under the other two")
    key = (t1.crossing == tm, m1.crossing == tm, b1.crossing == tb,
           t1.sign if t1.crossing == tm else t2.sign,
           t1.sign if t1.crossing == tb else t2.sign,
           mo.sign)
    if key not in R3_CONFIGURATIONS:
        raise PatternMismatch("three chords do not form a Reidemeister III triangle")
    return pairs


def _r3(code, top, middle, bottom):
    pairs = _r3_roles(code, tuple(top), tuple(middle), tuple(bottom))
    comps = _comps(code)
    for (c, i), (_, j), p, q in pairs:
        comps[c][i], comps[c][j] = q, p
    return GaussCode(tuple(map(tuple, comps)))


def _forbidden(code, component, index):
    (c, i), (_, j), p, q = _pair(code, (component, index))
    if not (p.role == q.role == "O") or p.crossing == q.crossing:
        raise PatternMismatch("forbidden move needs two adjacent over passages")
    comps = _comps(code)
    comps[c][i], comps[c][j] = q, p
    return GaussCode(tuple(map(tuple, comps)))


_APPLY = {
    "R1_insert": _r1_insert,
    "R1_delete": _r1_delete,
    "R2_insert": _r2_insert,
    "R2_delete": _r2_delete,
    "R3": _r3,
    "Forbidden": _forbidden,
}


# ---------------------------------------------------------------- inverses

def inverse_move(code: GaussCode, m: MoveInstance) -> MoveInstance:
    """The move undoing ``m``, expressed on ``apply_move(code, m)``."""
    site = m.params
    if m.kind == "R1_insert":
        (cid,) = _new_ids(code, 1)
        return MoveInstance.make("R1_delete", crossing=cid)
    if m.kind == "R2_insert":
        a, b = _new_ids(code, 2)
        return MoveInstance.make("R2_delete", first=a, second=b)
    if m.kind in ("R3", "Forbidden"):
        return m
    if m.kind == "R1_delete":
        where = code.locate()[site["crossing"]]
        (co, io), (_, iu) = where["O"], where["U"]
        size = len(code.components[co])
        return MoveInstance.make("R1_insert", component=co, gap=0,
                                 sign=code.signs()[site["crossing"]],
                                 over_first=(iu - io) % size == 1)
    if m.kind == "R2_delete":
        first, second = site["first"], site["second"]
        (oc, oi), (uc, ui), anti = _r2_sites(code, first, second)
        if oc == uc:
            size = len(code.components[oc])
            # position after the over pair is reinserted; the very end wraps to 0
            under_gap = (ui - oi) % size % (size - 2)
        else:
            under_gap = 0
        return MoveInstance.make("R2_insert", over_component=oc, over_gap=0,
                                 under_component=uc, under_gap=under_gap,
                                 sign=code.signs()[first], antiparallel=anti)
    raise InvalidSite(f"unknown move kind {m.kind!r}")


# ------------------------------------------------------------- enumeration

def _gaps(size):
    return range(max(size, 1))


def enumerate_moves(code: GaussCode, welded: bool = True) -> list[MoveInstance]:
    """Every applicable move site on ``code``.

    Insertions are listed at every gap with both signs.  R2 insertions are
    only listed between strands that already carry passages, so a bare
    circle offers R1 insertions alone.  With ``welded=False`` forbidden
    moves are left out.
    """
    require_valid(code)
    moves = []
    comps = code.components
    for c, comp in enumerate(comps):
        for g in _gaps(len(comp)):
            for sign in (1, -1):
                for over_first in (True, False):
                    moves.append(MoveInstance.make("R1_insert", component=c, gap=g,
                                                   sign=sign, over_first=over_first))
    where = code.locate()
    for cid in sorted(where):
        try:
            _r1_delete(code, cid)
        except PatternMismatch:
            continue
        moves.append(MoveInstance.make("R1_delete", crossing=cid))
    for oc, comp in enumerate(comps):
        if not comp:
            continue
        for og in _gaps(len(comp)):
            for uc, ucomp in enumerate(comps):
                if not ucomp:
                    continue
                size = len(ucomp) + (2 if uc == oc else 0)
                for ug in _gaps(size):
                    if uc == oc and ug == og + 1:
                        continue
                    for sign in (1, -1):
                        for anti in (False, True):
                            moves.append(MoveInstance.make(
                                "R2_insert", over_component=oc, over_gap=og,
                                under_component=uc, under_gap=ug,
                                sign=sign, antiparallel=anti))
    pairs = []
    for c, comp in enumerate(comps):
        if len(comp) >= 2:
            pairs.extend((c, i, comp[i], comp[(i + 1) % len(comp)]) for i in range(len(comp)))
    for c, i, p, q in pairs:
        if p.role == q.role == "O" and p.crossing != q.crossing:
            try:
                _r2_sites(code, p.crossing, q.crossing)
            except PatternMismatch:
                pass
            else:
                moves.append(MoveInstance.make("R2_delete", first=p.crossing, second=q.crossing))
    moves.extend(_r3_sites(code, pairs))
    if welded:
        for c, i, p, q in pairs:
            if p.role == q.role == "O" and p.crossing != q.crossing:
                moves.append(MoveInstance.make("Forbidden", component=c, index=i))
    return moves


def _r3_sites(code, pairs):
    over_pairs, mixed_by_under, under_pairs = [], {}, {}
    for c, i, p, q in pairs:
        if p.crossing == q.crossing:
            continue
        if p.role == q.role == "O":
            over_pairs.append((c, i, p, q))
        elif p.role == q.role == "U":
            under_pairs.setdefault(frozenset((p.crossing, q.crossing)), []).append((c, i))
        else:
            under = p if p.role == "U" else q
            other = q if p.role == "U" else p
            mixed_by_under.setdefault(under.crossing, []).append((c, i, other.crossing))
    out = []
    for tc, ti, t1, t2 in over_pairs:
        for tm, tb in ((t1.crossing, t2.crossing), (t2.crossing, t1.crossing)):
            for mc, mi, mb in mixed_by_under.get(tm, ()):
                if mb in (tm, tb):
                    continue
                for bc, bi in under_pairs.get(frozenset((tb, mb)), ()):
                    top, middle, bottom = (tc, ti), (mc, mi), (bc, bi)
                    try:
                        _r3_roles(code, top, middle, bottom)
                    except PatternMismatch:
                        continue
                    out.append(MoveInstance.make("R3", top=top, middle=middle, bottom=bottom))
    return out
