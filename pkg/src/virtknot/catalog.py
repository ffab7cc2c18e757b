"""Named example codes."""

from __future__ import annotations

from dataclasses import dataclass

from .gauss.code import GaussCode, parse_gauss


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    text: str
    notes: str

    @property
    def code(self) -> GaussCode:
        return parse_gauss(self.text)

    def to_json(self):
        return {"name": self.name, "code": self.text, "notes": self.notes}


_ENTRIES = (
    CatalogEntry("unknot", "()", "crossingless circle"),
    CatalogEntry("trefoil", "O1+ U2+ O3+ U1+ O2+ U3+",
                 "right-handed classical trefoil, three positive crossings"),
    CatalogEntry("figure-eight", "O1+ U2- O3- U1+ O4+ U3- O2- U4+",
                 "classical figure-eight knot; signs chosen so the code is planar"),
    CatalogEntry("virtual-trefoil", "O1+ O2+ U1+ U2+",
                 "two classical crossings and one virtual crossing; supporting genus 1"),
    CatalogEntry("kishino", "U2- O1+ O2- U1+ U4- O3+ O4- U3+",
                 "Kishino knot: connected sum of two virtual-trefoil halves along the "
                 "four classical crossings, sign choice +1 for both halves; "
                 "quandle trivial, supporting genus 2"),
    CatalogEntry("hopf", "O1+ U2+; U1+ O2+", "positive Hopf link"),
    CatalogEntry("unlink2", "(); ()", "two-component crossingless unlink"),
)

CATALOG = {e.name: e for e in _ENTRIES}


def names():
    return [e.name for e in _ENTRIES]


def lookup(name: str) -> CatalogEntry:
    return CATALOG[name]


def knots():
    return [e for e in _ENTRIES if e.code.is_knot()]
