"""Command-line front end.  Every command prints one JSON document.

Exit status: 0 on success, 1 on a domain error (bad code, failed axiom,
illegal move, ...), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import deque
from pathlib import Path

from . import catalog
from .algebra.library import parse_target
from .errors import DomainError, InvalidSite
from .gauss.code import GaussCode, canonical_key, canonicalize, parse_gauss, serialize_gauss
from .gauss.genus import genus_report
from .gauss.moves import KINDS, MoveInstance, apply_move, enumerate_moves
from .present.abelian import abelianization
from .present.diagram import semiarc_biquandle, wirtinger_group, wirtinger_quandle
from .report import code_report, ribbon_report
from .ribbon import ribbon_from_json, tube
from .spun import sheet_biquandle, spin

DEFAULT_MAX_NODES = 100_000


class UsageError(Exception):
    pass


def resolve_code(arg: str) -> GaussCode:
    """A catalog name, a file holding a code, or a code literal."""
    if arg in catalog.CATALOG:
        return catalog.lookup(arg).code
    path = Path(arg)
    if arg and path.is_file():
        return parse_gauss(path.read_text().strip())
    return parse_gauss(arg)


def _load_json_file(arg):
    try:
        return json.loads(Path(arg).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {arg}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise DomainErrorJSON(f"{arg} is not valid JSON: {exc.msg}") from None


class DomainErrorJSON(DomainError):
    pass


# ---------------------------------------------------------------- commands

def cmd_validate(args):
    from .gauss.code import validate
    from .errors import GaussSemanticError
    try:
        code = resolve_code(args.code)
    except GaussSemanticError as exc:
        return 1, {"valid": False, "violations": [str(v) for v in exc.violations]}
    return 0, {"valid": not validate(code), "violations": [], "code": serialize_gauss(code)}


def cmd_genus(args):
    code = resolve_code(args.code)
    report = genus_report(code)
    return 0, {"code": serialize_gauss(code), **report, "realizable": report["genus"] == 0}


def cmd_invariants(args):
    code = resolve_code(args.code)
    targets = [parse_target(t) for t in args.targets]
    return 0, code_report(code, targets, label=args.code)


def cmd_present(args):
    code = resolve_code(args.code)
    build = {"quandle": wirtinger_quandle, "group": wirtinger_group,
             "biquandle": semiarc_biquandle}[args.kind]
    return 0, build(code).to_json()


def cmd_abelianize(args):
    code = resolve_code(args.code)
    return 0, {"code": serialize_gauss(code), **abelianization(wirtinger_group(code)).to_json()}


def _site(text):
    try:
        site = json.loads(text)
    except json.JSONDecodeError:
        raise UsageError(f"--site is not JSON: {text!r}") from None
    if not isinstance(site, dict):
        raise UsageError("--site must be a JSON object")
    return site


def cmd_move_apply(args):
    code = resolve_code(args.code)
    try:
        move = MoveInstance.make(args.kind, **_site(args.site))
    except TypeError as exc:
        raise InvalidSite(str(exc)) from None
    out = apply_move(code, move)
    return 0, {"input": serialize_gauss(code, canonical=False), "move": move.to_dict(),
               "result": serialize_gauss(out, canonical=False),
               "canonical": serialize_gauss(out)}


def cmd_move_list(args):
    code = resolve_code(args.code)
    moves = enumerate_moves(code, welded=args.welded)
    return 0, {"code": serialize_gauss(code, canonical=False), "count": len(moves),
               "moves": [m.to_dict() for m in moves]}


def move_orbit(code: GaussCode, depth: int, welded=False, max_nodes=DEFAULT_MAX_NODES):
    """Breadth-first closure under enumerated moves, deduplicated canonically."""
    start = canonicalize(code)
    seen = {canonical_key(start): (start, 0)}
    queue = deque([(start, 0)])
    truncated = False
    while queue and not truncated:
        c, d = queue.popleft()
        if d == depth:
            continue
        for m in enumerate_moves(c, welded=welded):
            nxt = canonicalize(apply_move(c, m))
            key = canonical_key(nxt)
            if key in seen:
                continue
            if len(seen) >= max_nodes:
                truncated = True
                break
            seen[key] = (nxt, d + 1)
            queue.append((nxt, d + 1))
    nodes = sorted((serialize_gauss(c, canonical=False), d) for c, d in seen.values())
    return {"depth": depth, "welded": welded, "size": len(nodes), "truncated": truncated,
            "max_nodes": max_nodes,
            "orbit": [{"code": s, "distance": d} for s, d in nodes]}


def cmd_move_orbit(args):
    if args.depth < 0:
        raise UsageError("--depth must be >= 0")
    if args.max_nodes < 1:
        raise UsageError("--max-nodes must be >= 1")
    code = resolve_code(args.code)
    return 0, move_orbit(code, args.depth, args.welded, args.max_nodes)


def cmd_tube(args):
    r = tube(resolve_code(args.code))
    return 0, {**r.to_json(), "genus": r.genus()}


def cmd_ribbon_quandle(args):
    r = ribbon_from_json(_load_json_file(args.ribbon))
    targets = [parse_target(t) for t in args.targets]
    return 0, ribbon_report(r, targets, label=args.ribbon)


def cmd_spin(args):
    d = spin(resolve_code(args.code))
    return 0, {**d.to_json(), "presentation": sheet_biquandle(d).to_json()}


def cmd_catalog(args):
    if args.action == "list":
        return 0, {"entries": [catalog.lookup(n).to_json() for n in catalog.names()]}
    if args.name is None:
        raise UsageError("catalog show needs NAME")
    if args.name not in catalog.CATALOG:
        raise UsageError(f"no catalog entry {args.name!r}; try 'catalog list'")
    return 0, catalog.lookup(args.name).to_json()


# ------------------------------------------------------------------ parser

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="virtknot", description="Virtual and welded knot invariants.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def code_cmd(name, func, help_text):
        s = sub.add_parser(name, help=help_text)
        s.add_argument("code", help="catalog name, file, or Gauss code literal")
        s.set_defaults(func=func)
        return s

    code_cmd("validate", cmd_validate, "check a code")
    code_cmd("genus", cmd_genus, "supporting genus")
    s = code_cmd("invariants", cmd_invariants, "genus, abelianization and coloring counts")
    s.add_argument("--targets", nargs="+", default=[], metavar="SPEC")
    s = code_cmd("present", cmd_present, "print a presentation")
    s.add_argument("--kind", choices=("quandle", "group", "biquandle"), required=True)
    code_cmd("abelianize", cmd_abelianize, "abelianized group")
    code_cmd("tube", cmd_tube, "ribbon data of the tube of a welded knot")
    code_cmd("spin", cmd_spin, "double point data of the spun knot")

    move = sub.add_parser("move", help="apply, list or explore moves")
    msub = move.add_subparsers(dest="action", required=True, parser_class=_Parser)
    s = msub.add_parser("apply")
    s.add_argument("code")
    s.add_argument("--kind", choices=KINDS, required=True)
    s.add_argument("--site", required=True, help="JSON object of site fields")
    s.set_defaults(func=cmd_move_apply)
    s = msub.add_parser("list")
    s.add_argument("code")
    s.add_argument("--welded", action="store_true")
    s.set_defaults(func=cmd_move_list)
    s = msub.add_parser("orbit")
    s.add_argument("code")
    s.add_argument("--depth", type=int, required=True)
    s.add_argument("--welded", action="store_true")
    s.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)
    s.set_defaults(func=cmd_move_orbit)

    s = sub.add_parser("ribbon-quandle", help="quandle presentation of ribbon data")
    s.add_argument("ribbon", help="RibbonData JSON file")
    s.add_argument("--targets", nargs="+", default=[], metavar="SPEC")
    s.set_defaults(func=cmd_ribbon_quandle)

    s = sub.add_parser("catalog", help="built-in codes")
    s.add_argument("action", choices=("list", "show"))
    s.add_argument("name", nargs="?")
    s.set_defaults(func=cmd_catalog)
    return p


def _emit(stream, payload):
    stream.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        status, payload = args.func(args)
    except UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        return 2
    except DomainError as exc:
        _emit(stdout, {"error": type(exc).__name__, "message": str(exc)})
        return 1
    _emit(stdout, payload)
    return status


def main():
    sys.exit(run())
