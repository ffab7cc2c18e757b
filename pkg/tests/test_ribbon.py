import random

import pytest

from oracles import brute_count
from virtknot.algebra import builtin_quandles, dihedral_quandle
from virtknot.errors import BadBaseId, InvalidRibbonData, MultiComponent, NotIncident, SelfSlide
from virtknot.gauss import parse_gauss, random_knot
from virtknot.present import count_quandle_colorings, wirtinger_quandle
from virtknot.ribbon import (END, START, Handle, RibbonData, add_trivial_base, genus,
                             handle_pass, handle_slide, legal_slides, random_ribbon,
                             reverse_handle, ribbon_from_json, ribbon_quandle, tube)

TARGETS = builtin_quandles(5)
TREFOIL = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+")
KISHINO = parse_gauss("U2- O1+ O2- U1+ U4- O3+ O4- U3+")


def counts(r, targets=TARGETS):
    p = ribbon_quandle(r)
    return [count_quandle_colorings(p, q).total for q in targets]


def test_pass_free_handle_identifies_bases():
    r = RibbonData(2, (Handle(1, (), 2),))
    p = ribbon_quandle(r)
    assert [str(x) for x in p.relations] == ["b2 = b1"]
    assert counts(r) == [q.n for q in TARGETS]


def test_self_passage_is_forced_trivial():
    r = RibbonData(2, (Handle(1, ((1, 1),), 2),))
    assert [str(x) for x in ribbon_quandle(r).relations] == ["b2 = b1 up_bar b1"]
    assert counts(r) == [q.n for q in TARGETS]


def test_negative_passage_uses_plain_operation():
    r = RibbonData(2, (Handle(1, ((2, -1), (1, 1)), 2),))
    assert str(ribbon_quandle(r).relations[0]) == "b2 = b1 up b2 up_bar b1"


def test_genus_formula():
    assert genus(RibbonData(2, (Handle(1, (), 2),))) == 0
    r = RibbonData(3, (Handle(1, (), 2), Handle(2, (), 3), Handle(3, (), 1)))
    assert genus(r) == 1
    assert genus(tube(TREFOIL)) == 1


def test_add_trivial_base():
    r = add_trivial_base(RibbonData(1, ()), 1)
    assert r == RibbonData(2, (Handle(2, (), 1),))
    assert genus(r) == genus(RibbonData(1, ()))
    with pytest.raises(BadBaseId):
        add_trivial_base(r, 3)


def test_add_trivial_base_keeps_counts():
    rng = random.Random(1)
    for _ in range(20):
        r = random_ribbon(rng)
        for b in range(1, r.num_bases + 1):
            assert counts(add_trivial_base(r, b)) == counts(r)


def test_slide_along_pass_free_handle():
    r = RibbonData(3, (Handle(1, (), 2), Handle(2, ((3, 1),), 3), Handle(3, (), 1)))
    out = handle_slide(r, 1, 0, START)
    assert out.handles[1] == Handle(1, ((3, 1),), 3)
    out = handle_slide(r, 1, 2, END)
    assert out.handles[1] == Handle(2, ((3, 1),), 1)
    assert genus(out) == genus(r)


def test_slide_words():
    a = Handle(1, ((3, 1), (2, -1)), 2)
    s = Handle(4, ((1, -1),), 1)
    r = RibbonData(4, (a, s, Handle(2, (), 3), Handle(3, (), 4)))
    # END slide appends the word of `along` from base 1 to base 2
    assert handle_slide(r, 1, 0, END).handles[1] == Handle(4, ((1, -1), (3, 1), (2, -1)), 2)
    r2 = RibbonData(4, (a, Handle(1, ((4, 1),), 4), Handle(2, (), 3), Handle(3, (), 4)))
    # START slide prepends the word of `along` read from base 2 back to base 1
    assert handle_slide(r2, 1, 0, START).handles[1] == Handle(2, ((2, 1), (3, -1), (4, 1)), 4)


def test_slide_errors():
    r = RibbonData(3, (Handle(1, (), 2), Handle(2, (), 3)))
    with pytest.raises(SelfSlide):
        handle_slide(r, 0, 0, END)
    with pytest.raises(NotIncident):
        handle_slide(r, 1, 0, END)
    with pytest.raises(InvalidRibbonData):
        handle_slide(r, 1, 5, END)


def test_every_legal_slide_keeps_counts():
    rng = random.Random(2)
    small = [dihedral_quandle(3)] + [q for q in TARGETS if q.name == "alexq:5,2"]
    seen = 0
    for _ in range(30):
        r = random_ribbon(rng)
        base = counts(r, small)
        for slide in legal_slides(r):
            out = handle_slide(r, *slide)
            assert counts(out, small) == base
            assert genus(out) == genus(r)
            seen += 1
    assert seen > 50


def test_prefixing_the_forward_word_is_not_invariant():
    # the START slide must use the word from the new base back to the old one;
    # prepending the old-to-new word instead changes coloring counts here
    r = RibbonData(3, (Handle(2, ((3, 1),), 1), Handle(2, ((2, -1),), 3)))
    good = handle_slide(r, 1, 0, START)
    assert good.handles[1] == Handle(1, ((3, -1), (2, -1)), 3)
    wrong = RibbonData(3, (r.handles[0], Handle(1, ((3, 1), (2, -1)), 3)))
    assert counts(good) == counts(r)
    assert counts(wrong) != counts(r)


def test_handle_pass_is_identity():
    r = random_ribbon(random.Random(5))
    assert handle_pass(r) is r
    assert handle_pass(handle_pass(r)) == r


def test_reversal_keeps_counts():
    rng = random.Random(6)
    for _ in range(20):
        r = random_ribbon(rng)
        for k in range(len(r.handles)):
            assert counts(reverse_handle(r, k)) == counts(r)


def test_tube_shapes():
    r = tube(parse_gauss("()"))
    assert r == RibbonData(1, (Handle(1, (), 1),)) and genus(r) == 1
    r = tube(TREFOIL)
    assert r.num_bases == 3 and len(r.handles) == 3
    assert all(len(h.passes) == 1 for h in r.handles)
    r = tube(KISHINO)
    assert r.num_bases == 4 and len(r.handles) == 4
    with pytest.raises(MultiComponent):
        tube(parse_gauss("O1+ U2+; U1+ O2+"))


def test_tube_of_crossingless_knot_has_trivial_relation():
    p = ribbon_quandle(tube(parse_gauss("()")))
    assert [str(x) for x in p.relations] == ["b1 = b1"]


def test_tube_trefoil_dihedral_count():
    p = ribbon_quandle(tube(TREFOIL))
    assert brute_count(p, dihedral_quandle(3)) == 9


def test_tube_presentation_is_wirtinger_renamed():
    rng = random.Random(9)
    for _ in range(30):
        c = random_knot(rng, 6, num_crossings=rng.randint(1, 6))
        w = wirtinger_quandle(c)
        renamed = ribbon_quandle(tube(c)).rename(
            {f"b{k}": f"a{k}" for k in range(1, len(w.generators) + 1)})
        assert renamed == w


def test_json_round_trip_and_validation():
    r = tube(KISHINO)
    assert ribbon_from_json(r.to_json()) == r
    with pytest.raises(InvalidRibbonData):
        RibbonData(0, ())
    with pytest.raises(BadBaseId):
        RibbonData(2, (Handle(1, (), 3),))
    with pytest.raises(InvalidRibbonData):
        RibbonData(3, (Handle(1, (), 2),))  # base 3 is isolated
    with pytest.raises(InvalidRibbonData):
        RibbonData(2, (Handle(1, ((1, 2),), 2),))
    with pytest.raises(InvalidRibbonData):
        ribbon_from_json({"bases": 2})


def test_random_ribbon_respects_bounds():
    rng = random.Random(3)
    for _ in range(100):
        r = random_ribbon(rng)
        assert 1 <= r.num_bases <= 4 and len(r.handles) <= 5
        assert all(len(h.passes) <= 4 for h in r.handles)
        assert genus(r) >= 0
