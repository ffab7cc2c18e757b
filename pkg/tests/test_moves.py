import random

import pytest

from oracles import r3_geometry_configurations, walk_code
from virtknot.algebra import alexander_biquandle, dihedral_quandle, symmetric_group
from virtknot.algebra import conjugation_quandle
from virtknot.errors import InvalidSite, PatternMismatch
from virtknot.gauss import (R3_CONFIGURATIONS, GaussCode, MoveInstance, Passage, apply_move,
                            enumerate_moves, inverse_move, parse_gauss, random_code,
                            serialize_gauss, validate)
from virtknot.present import (count_biquandle_colorings, count_quandle_colorings,
                              semiarc_biquandle, wirtinger_quandle)

UNKNOT = parse_gauss("()")
KISHINO = parse_gauss("U2- O1+ O2- U1+ U4- O3+ O4- U3+")
CHIRAL = [alexander_biquandle(5, 2, 3), alexander_biquandle(7, 3, 5), alexander_biquandle(3, 2, 2)]
QUANDLES = [dihedral_quandle(3), dihedral_quandle(5), conjugation_quandle(symmetric_group(3))]


def signature(code):
    w, b = wirtinger_quandle(code), semiarc_biquandle(code)
    return ([count_quandle_colorings(w, q).total for q in QUANDLES],
            [count_biquandle_colorings(b, x).total for x in CHIRAL])


def test_r1_insert_and_delete_on_unknot():
    m = MoveInstance.make("R1_insert", component=0, gap=0, sign=1)
    kink = apply_move(UNKNOT, m)
    assert serialize_gauss(kink) == "O1+ U1+"
    back = apply_move(kink, MoveInstance.make("R1_delete", crossing=1))
    assert back == UNKNOT
    assert apply_move(kink, inverse_move(UNKNOT, m)) == UNKNOT


def test_forbidden_on_kishino_swaps_the_over_passages():
    m = MoveInstance.make("Forbidden", component=0, index=1)
    out = apply_move(KISHINO, m)
    assert serialize_gauss(out, canonical=False) == "U2- O2- O1+ U1+ U4- O3+ O4- U3+"
    assert validate(out) == []
    w0, w1 = wirtinger_quandle(KISHINO), wirtinger_quandle(out)
    for q in QUANDLES:
        assert count_quandle_colorings(w0, q) == count_quandle_colorings(w1, q)


def test_enumerate_unknot_only_r1_inserts():
    kinds = {m.kind for m in enumerate_moves(UNKNOT)}
    assert kinds == {"R1_insert"}


def test_enumerate_kink_has_one_r1_delete():
    moves = enumerate_moves(parse_gauss("O1+ U1+"))
    deletes = [m for m in moves if m.kind == "R1_delete"]
    assert deletes == [MoveInstance.make("R1_delete", crossing=1)]
    assert {m.kind for m in moves} <= {"R1_insert", "R1_delete", "R2_insert"}


def test_enumerate_trefoil_no_r2_delete():
    moves = enumerate_moves(parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+"))
    assert not [m for m in moves if m.kind == "R2_delete"]
    assert not [m for m in moves if m.kind == "R1_delete"]


def test_insert_counts_cover_every_gap_and_sign():
    code = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+")
    moves = enumerate_moves(code)
    assert sum(m.kind == "R1_insert" for m in moves) == 6 * 2 * 2
    # over gap 6 choices, under gap 8 choices minus the splitting one, 2 signs, 2 directions
    assert sum(m.kind == "R2_insert" for m in moves) == 6 * 7 * 2 * 2


def test_r2_insert_signs_are_opposite():
    m = MoveInstance.make("R2_insert", over_component=0, over_gap=0, under_component=0,
                          under_gap=3, sign=-1, antiparallel=False)
    out = apply_move(parse_gauss("O1+ U1+"), m)
    signs = out.signs()
    assert signs[2] == -1 and signs[3] == 1


@pytest.mark.parametrize("kind,site,error", [
    ("R1_delete", {"crossing": 1}, PatternMismatch),
    ("R1_delete", {"crossing": 9}, InvalidSite),
    ("R2_delete", {"first": 1, "second": 2}, PatternMismatch),
    ("Forbidden", {"component": 0, "index": 1}, PatternMismatch),
    ("Forbidden", {"component": 3, "index": 0}, InvalidSite),
    ("R3", {"top": [0, 0], "middle": [0, 2], "bottom": [0, 4]}, PatternMismatch),
    ("R1_insert", {"component": 0, "gap": 99, "sign": 1}, InvalidSite),
    ("R1_insert", {"component": 0, "gap": 0, "sign": 2}, InvalidSite),
    ("R1_insert", {"component": 0, "gap": 0, "sign": 1, "bogus": 1}, InvalidSite),
])
def test_bad_sites(kind, site, error):
    with pytest.raises(error):
        apply_move(parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+"), MoveInstance.make(kind, **site))


def test_move_instance_json_round_trip():
    m = MoveInstance.make("R3", top=[0, 1], middle=(0, 3), bottom=(1, 0))
    assert MoveInstance.from_dict(m.to_dict()) == m


def _corpus(seed, count, max_crossings):
    rng = random.Random(seed)
    out = [random_code(rng, max_crossings, 3) for _ in range(count)]
    out += [walk_code(rng, max_crossings) for _ in range(count // 2)]
    return out


def test_enumerated_moves_apply_and_invert():
    for code in _corpus(11, 40, 5):
        for m in enumerate_moves(code):
            out = apply_move(code, m)  # no PatternMismatch
            assert validate(out) == []
            back = apply_move(out, inverse_move(code, m))
            assert back.canonically_equal(code), (str(code), m)


def test_forbidden_moves_keep_codes_valid():
    for code in _corpus(12, 60, 8):
        for m in enumerate_moves(code, welded=True):
            if m.kind == "Forbidden":
                assert validate(apply_move(code, m)) == []


def test_welded_flag_controls_forbidden():
    assert not [m for m in enumerate_moves(KISHINO, welded=False) if m.kind == "Forbidden"]
    assert [m for m in enumerate_moves(KISHINO, welded=True) if m.kind == "Forbidden"]


# ------------------------------------------------------------------- R3

def test_r3_table_matches_line_geometry():
    assert R3_CONFIGURATIONS == r3_geometry_configurations()
    assert len(R3_CONFIGURATIONS) == 16


def _triangle(flags, signs, rng, filler):
    """Code containing the three pairs of a triangle plus random filler chords."""
    ot, om, ob = flags
    s_tm, s_tb, s_mb = signs
    o_tm, u_tm = Passage(1, "O", s_tm), Passage(1, "U", s_tm)
    o_tb, u_tb = Passage(2, "O", s_tb), Passage(2, "U", s_tb)
    o_mb, u_mb = Passage(3, "O", s_mb), Passage(3, "U", s_mb)
    segments = {
        "top": [o_tm, o_tb] if ot else [o_tb, o_tm],
        "middle": [u_tm, o_mb] if om else [o_mb, u_tm],
        "bottom": [u_tb, u_mb] if ob else [u_mb, u_tb],
    }
    pieces = [(name, seg) for name, seg in segments.items()]
    for cid in range(4, 4 + filler):
        s = rng.choice((1, -1))
        pieces += [(None, [Passage(cid, "O", s)]), (None, [Passage(cid, "U", s)])]
    rng.shuffle(pieces)
    cut = rng.randint(1, len(pieces)) if rng.random() < 0.5 else len(pieces)
    comps, where = [[], []], {}
    for k, (name, seg) in enumerate(pieces):
        comp = comps[0 if k < cut else 1]
        if name:
            where[name] = (0 if k < cut else 1, len(comp))
        comp.extend(seg)
    comps = [tuple(c) for c in comps if c]
    return GaussCode(tuple(comps)), where


def test_r3_enumerated_exactly_for_geometric_triangles():
    rng = random.Random(3)
    checked = 0
    for flags in [(a, b, c) for a in (True, False) for b in (True, False) for c in (True, False)]:
        for signs in [(x, y, z) for x in (1, -1) for y in (1, -1) for z in (1, -1)]:
            for _ in range(3):
                code, where = _triangle(flags, signs, rng, rng.randint(0, 3))
                m = MoveInstance.make("R3", **where)
                listed = m in enumerate_moves(code)
                assert listed == ((*flags, *signs) in R3_CONFIGURATIONS)
                if not listed:
                    with pytest.raises(PatternMismatch):
                        apply_move(code, m)
                    continue
                out = apply_move(code, m)
                assert apply_move(out, inverse_move(code, m)) == code
                assert signature(out) == signature(code)
                checked += 1
    assert checked == 16 * 3
