"""Invariant reports for codes and ribbon data."""

from __future__ import annotations

from .algebra.quandles import FiniteQuandle
from .errors import InvalidPresentation
from .gauss.code import GaussCode, serialize_gauss
from .gauss.genus import genus_report
from .present.abelian import abelianization
from .present.coloring import compile_plan, count_colorings
from .present.diagram import semiarc_biquandle, wirtinger_group, wirtinger_quandle
from .ribbon import RibbonData, genus, ribbon_quandle


def code_report(code: GaussCode, targets=(), label=None) -> dict:
    """Genus, abelianization and coloring counts of ``code``.

    Quandle targets colour the arc presentation, biquandle targets the
    semi-arc presentation.
    """
    g = genus_report(code)
    quandle = wirtinger_quandle(code)
    bq = semiarc_biquandle(code)
    plans = {}
    counts = {}
    for t in targets:
        p = quandle if isinstance(t, FiniteQuandle) else bq
        plan = plans.setdefault(p.kind, compile_plan(p))
        counts[t.name] = {"presentation": p.kind, **count_colorings(p, t, plan).to_json()}
    return {
        "input": label if label is not None else serialize_gauss(code, canonical=False),
        "code": serialize_gauss(code),
        "components": code.num_components,
        "crossings": code.num_crossings,
        "genus": g["genus"],
        "genus_pieces": g["pieces"],
        "disconnected": g["disconnected"],
        "realizable": g["genus"] == 0,
        "abelianization": abelianization(wirtinger_group(code)).to_json(),
        "colorings": counts,
    }


def ribbon_report(r: RibbonData, targets=(), label=None) -> dict:
    p = ribbon_quandle(r)
    plan = compile_plan(p)
    counts = {}
    for t in targets:
        if not isinstance(t, FiniteQuandle):
            raise InvalidPresentation(f"{t.name} is not a quandle target")
        counts[t.name] = count_colorings(p, t, plan).to_json()
    out = {"ribbon": r.to_json(), "genus": genus(r), "presentation": p.to_json(),
           "colorings": counts}
    if label is not None:
        out["input"] = label
    return out
