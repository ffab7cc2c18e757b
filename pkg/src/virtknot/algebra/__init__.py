from .biquandles import (OPS, FiniteBiquandle, alexander_biquandle, alternative_axioms_hold,
                         biquandle_from_json, check_biquandle, identity_biquandle,
                         quandle_to_biquandle, validate_biquandle)
from .groups import (FiniteGroup, builtin_group, center_of, check_group, check_subgroup,
                     cyclic_group, dihedral_group, small_groups, subgroups, symmetric_group,
                     validate_group)
from .library import builtin_biquandles, builtin_quandles, parse_target
from .quandles import (FiniteQuandle, alexander_quandle, check_quandle, conjugation_quandle,
                       coset_quandle, dihedral_quandle, quandle_from_json, trivial_quandle,
                       validate_quandle)

__all__ = [
    "OPS", "FiniteBiquandle", "FiniteGroup", "FiniteQuandle",
    "alexander_biquandle", "alexander_quandle", "alternative_axioms_hold",
    "biquandle_from_json", "builtin_biquandles", "builtin_group", "builtin_quandles",
    "center_of", "check_biquandle", "check_group", "check_quandle", "check_subgroup",
    "conjugation_quandle", "coset_quandle", "cyclic_group", "dihedral_group",
    "dihedral_quandle", "identity_biquandle", "parse_target", "quandle_from_json",
    "quandle_to_biquandle", "small_groups", "subgroups", "symmetric_group",
    "trivial_quandle", "validate_biquandle", "validate_group", "validate_quandle",
]
