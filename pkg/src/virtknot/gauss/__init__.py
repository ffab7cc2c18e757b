from .code import (GaussCode, Passage, Violation, canonical_key, canonicalize, parse_gauss,
                   random_code, random_knot, require_valid, serialize_gauss, validate)
from .genus import genus_report, is_realizable, supporting_genus
from .moves import (CLASSICAL_KINDS, KINDS, R3_CONFIGURATIONS, MoveInstance, apply_move,
                    enumerate_moves, inverse_move)

__all__ = [
    "GaussCode", "Passage", "Violation", "MoveInstance", "KINDS", "CLASSICAL_KINDS",
    "R3_CONFIGURATIONS", "parse_gauss", "serialize_gauss", "validate", "require_valid",
    "canonicalize", "canonical_key", "random_code", "random_knot", "apply_move",
    "inverse_move", "enumerate_moves", "supporting_genus", "is_realizable", "genus_report",
]
