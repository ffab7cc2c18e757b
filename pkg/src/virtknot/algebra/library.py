"""Built-in targets and the textual target grammar used by the CLI.

Grammar::

    dihedral:n
    conj:GROUP              GROUP is a JSON file {"n", "mul"} or a builtin name (S3, A4, Q8, Zn, Dn)
    coset:GROUP:e1,e2,..:m  subgroup elements and a central element m of it
    alexander:p,s,t         Alexander biquandle
    table:FILE              JSON quandle or biquandle table
    quandle-bq:SPEC         quandle-induced biquandle of another quandle target
"""

from __future__ import annotations

import json
from pathlib import Path

from ..errors import InvalidPresentation
from .biquandles import (
    FiniteBiquandle, alexander_biquandle, biquandle_from_json, quandle_to_biquandle,
)
from .groups import builtin_group, symmetric_group, validate_group
from .quandles import (
    FiniteQuandle, alexander_quandle, conjugation_quandle, coset_quandle,
    dihedral_quandle, quandle_from_json, trivial_quandle,
)


def builtin_quandles(max_size: int = 6) -> list[FiniteQuandle]:
    """The quandle targets used by tests and reports, smallest first."""
    s3 = symmetric_group(3)
    transposition = s3.labels.index((1, 0, 2))
    identity = s3.identity
    out = [trivial_quandle(k) for k in (1, 2, 3)]
    out += [dihedral_quandle(k) for k in (3, 4, 5, 6)]
    out += [alexander_quandle(5, 2), alexander_quandle(5, 3)]
    out.append(conjugation_quandle(s3, "conj:S3"))
    out.append(coset_quandle(s3, [identity, transposition], transposition,
                             name="coset:S3:<(12)>:(12)"))
    return sorted((q for q in out if q.n <= max_size), key=lambda q: (q.n, q.name))


def builtin_biquandles(max_size: int = 4) -> list[FiniteBiquandle]:
    out = []
    for p in (2, 3, 5, 7):
        if p > max_size:
            break
        for s in range(1, p):
            for t in range(1, p):
                out.append(alexander_biquandle(p, s, t))
    for q in builtin_quandles(max_size):
        out.append(quandle_to_biquandle(q))
    return sorted((b for b in out if b.n <= max_size), key=lambda b: (b.n, b.name))


def _load_json(path):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InvalidPresentation(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InvalidPresentation(f"{path} is not JSON: {exc.msg}") from None


def _group(ref: str):
    try:
        return builtin_group(ref)
    except KeyError:
        pass
    data = _load_json(ref)
    if "mul" not in data:
        raise InvalidPresentation(f"{ref} has no 'mul' table")
    return validate_group(data["mul"], name=ref)


def _ints(text, count=None):
    try:
        vals = [int(x) for x in text.split(",") if x != ""]
    except ValueError:
        raise InvalidPresentation(f"expected integers, got {text!r}") from None
    if count is not None and len(vals) != count:
        raise InvalidPresentation(f"expected {count} integers, got {text!r}")
    return vals


def parse_target(spec: str):
    """Turn a target string into a FiniteQuandle or FiniteBiquandle."""
    kind, _, rest = spec.partition(":")
    if kind == "dihedral":
        (n,) = _ints(rest, 1)
        if n < 1:
            raise InvalidPresentation("dihedral order must be >= 1")
        return dihedral_quandle(n)
    if kind == "trivial":
        (n,) = _ints(rest, 1)
        return trivial_quandle(n)
    if kind == "conj":
        return conjugation_quandle(_group(rest), f"conj:{rest}")
    if kind == "coset":
        parts = rest.rsplit(":", 2)
        if len(parts) != 3:
            raise InvalidPresentation("coset target is coset:GROUP:e1,e2,..:m")
        ref, elems, m = parts
        (m,) = _ints(m, 1)
        return coset_quandle(_group(ref), _ints(elems), m, name=spec)
    if kind == "alexander":
        p, s, t = _ints(rest, 3)
        return alexander_biquandle(p, s, t)
    if kind == "alexq":
        n, t = _ints(rest, 2)
        return alexander_quandle(n, t)
    if kind == "quandle-bq":
        q = parse_target(rest)
        if not isinstance(q, FiniteQuandle):
            raise InvalidPresentation(f"{rest} is not a quandle target")
        return quandle_to_biquandle(q)
    if kind == "table":
        data = _load_json(rest)
        if "op" in data:
            return quandle_from_json(data, name=spec)
        return biquandle_from_json(data, name=spec)
    raise InvalidPresentation(f"unknown target kind {kind!r}")
