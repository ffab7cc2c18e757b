from .abelian import Abelianization, abelianization, relation_matrix, smith_diagonal
from .coloring import (ColoringCount, colorings, compile_plan, count_biquandle_colorings,
                       count_colorings, count_group_assignments, count_quandle_colorings)
from .diagram import (CrossingSlots, adconj, arc_names, crossing_slots, semiarc_biquandle,
                      semiarc_names, wirtinger_group, wirtinger_quandle)
from .presentation import (BIQUANDLE, GROUP, QUANDLE, GroupRelation, Presentation, Relation,
                           Step, presentation_from_json)

__all__ = [
    "Abelianization", "ColoringCount", "CrossingSlots", "GroupRelation", "Presentation",
    "Relation", "Step", "QUANDLE", "GROUP", "BIQUANDLE", "abelianization", "adconj",
    "arc_names", "colorings", "compile_plan", "count_biquandle_colorings", "count_colorings",
    "count_group_assignments", "count_quandle_colorings", "crossing_slots",
    "presentation_from_json", "relation_matrix", "semiarc_biquandle", "semiarc_names",
    "smith_diagonal", "wirtinger_group", "wirtinger_quandle",
]
