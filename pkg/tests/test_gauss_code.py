import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from virtknot.errors import GaussSemanticError, GaussSyntaxError, InvalidCode
from virtknot.gauss import (GaussCode, Passage, Violation, canonical_key, canonicalize,
                            parse_gauss, random_code, require_valid, serialize_gauss, validate)

TREFOIL = "O1+ U2+ O3+ U1+ O2+ U3+"


def test_parse_trefoil():
    c = parse_gauss(TREFOIL)
    assert c.num_components == 1
    assert c.num_crossings == 3
    assert c.components[0][0] == Passage(1, "O", 1)


@pytest.mark.parametrize("text", ["", "()", "  ()  "])
def test_parse_unknot(text):
    assert parse_gauss(text) == GaussCode(((),))


def test_parse_multi_component_with_spaces_around_semicolon():
    c = parse_gauss("O1+ U2+ ;  U1+ O2+")
    assert c.num_components == 2
    assert serialize_gauss(c, canonical=False) == "O1+ U2+; U1+ O2+"


def test_duplicate_over_is_semantic_error():
    with pytest.raises(GaussSemanticError) as err:
        parse_gauss("O1+ U1+ O1+")
    assert Violation("DuplicateRole", 1, "O appears 2 times") in err.value.violations


@pytest.mark.parametrize("text,pos", [
    ("O1+ X2+", 4),
    ("O1+  U1+", 4),
    ("O1+ U1", 4),
    ("O0+ U0+", 0),
    ("O1+ U1+;", 8),
    ("O1+,U1+", 3),
])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(GaussSyntaxError) as err:
        parse_gauss(text)
    assert err.value.position == pos


def test_validate_examples():
    assert validate(parse_gauss(TREFOIL)) == []
    mismatch = GaussCode(((Passage(1, "O", 1), Passage(2, "U", 1),
                           Passage(1, "U", 1), Passage(2, "O", -1)),))
    assert [v.kind for v in validate(mismatch)] == ["SignMismatch"]
    assert validate(mismatch)[0].crossing == 2
    lonely = GaussCode(((Passage(1, "O", 1), Passage(1, "U", 1), Passage(5, "O", 1)),))
    assert [(v.kind, v.crossing) for v in validate(lonely)] == [("UnpairedCrossing", 5)]
    with pytest.raises(InvalidCode):
        require_valid(lonely)


def test_canonical_form_ignores_rotation_relabeling_and_order():
    a = parse_gauss("O1+ U2+; U1+ O2+")
    b = parse_gauss("O7+ U3+; O3+ U7+")
    assert a.canonically_equal(b)
    assert serialize_gauss(a) == serialize_gauss(b)
    rotated = parse_gauss("U1+ O2+ U3+ O1+ U2+ O3+")
    assert serialize_gauss(rotated) == TREFOIL


def test_canonical_ids_compare_numerically():
    # with 10+ crossings the string order of ids would differ from numeric order
    rng = random.Random(4)
    c = random_code(rng, num_crossings=11, max_components=1)
    s = serialize_gauss(c)
    ids = [int(tok[1:-1]) for tok in s.split()]
    first = []
    for i in ids:
        if i not in first:
            first.append(i)
    assert first == list(range(1, 12))


codes = st.builds(lambda seed, n, k: random_code(random.Random(seed), num_crossings=n,
                                                 max_components=k),
                  st.integers(0, 10 ** 6), st.integers(0, 7), st.integers(1, 3))


@settings(max_examples=150, deadline=None)
@given(codes)
def test_round_trip(c):
    assert validate(c) == []
    text = serialize_gauss(c)
    assert canonicalize(parse_gauss(text)) == canonicalize(c)
    assert parse_gauss(serialize_gauss(c, canonical=False)) == c


@settings(max_examples=100, deadline=None)
@given(codes, st.integers(0, 50))
def test_canonical_key_invariant_under_symmetries(c, shift):
    rng = random.Random(shift)
    ids = c.crossings()
    new_ids = rng.sample(range(1, 100), len(ids))
    relabel = dict(zip(ids, new_ids))
    comps = []
    for comp in c.components:
        comp = [Passage(relabel[p.crossing], p.role, p.sign) for p in comp]
        k = shift % len(comp) if comp else 0
        comps.append(tuple(comp[k:] + comp[:k]))
    rng.shuffle(comps)
    assert canonical_key(GaussCode(tuple(comps))) == canonical_key(c)
