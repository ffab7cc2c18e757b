"""Virtual and welded knots: Gauss codes, moves, presentations and colorings."""

from .algebra import (FiniteBiquandle, FiniteGroup, FiniteQuandle, alexander_biquandle,
                      conjugation_quandle, coset_quandle, dihedral_quandle, validate_biquandle,
                      validate_quandle)
from .gauss import (GaussCode, MoveInstance, apply_move, enumerate_moves, is_realizable,
                    parse_gauss, serialize_gauss, supporting_genus, validate)
from .present import (abelianization, adconj, count_biquandle_colorings,
                      count_quandle_colorings, semiarc_biquandle, wirtinger_group,
                      wirtinger_quandle)
from .ribbon import Handle, RibbonData, add_trivial_base, handle_slide, ribbon_quandle, tube
from .spun import DoublePointData, sheet_biquandle, spin

__all__ = [
    "FiniteBiquandle", "FiniteGroup", "FiniteQuandle", "GaussCode", "MoveInstance",
    "RibbonData", "Handle", "DoublePointData", "abelianization", "adconj",
    "add_trivial_base", "alexander_biquandle", "apply_move", "conjugation_quandle",
    "coset_quandle", "count_biquandle_colorings", "count_quandle_colorings",
    "dihedral_quandle", "enumerate_moves", "handle_slide", "is_realizable", "parse_gauss",
    "ribbon_quandle", "semiarc_biquandle", "serialize_gauss", "sheet_biquandle", "spin",
    "supporting_genus", "tube", "validate", "validate_biquandle", "validate_quandle",
    "wirtinger_group", "wirtinger_quandle",
]
