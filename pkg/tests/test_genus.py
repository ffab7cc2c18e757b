import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import genus_oracle
from virtknot.errors import InvalidCode
from virtknot.gauss import (GaussCode, Passage, genus_report, is_realizable, parse_gauss,
                            random_code, supporting_genus)
from virtknot.gauss.genus import boundary_circles


@pytest.mark.parametrize("text,genus", [
    ("()", 0),
    ("O1+ U2+ O3+ U1+ O2+ U3+", 0),
    ("O1- U2- O3- U1- O2- U3-", 0),
    ("O1+ U2- O3- U1+ O4+ U3- O2- U4+", 0),
    ("O1+ O2+ U1+ U2+", 1),
    ("O1+ O2- U1+ U2-", 1),
    ("U2- O1+ O2- U1+ U4- O3+ O4- U3+", 2),
    ("U2+ O1- O2+ U1- U4+ O3- O4+ U3-", 2),
    ("U2- O1+ O2- U1+ U4+ O3- O4+ U3-", 2),
    ("U2+ O1+ O2+ U1+ U4+ O3+ O4+ U3+", 1),
    ("O1+ U2+; U1+ O2+", 0),
    ("O1+ U1+", 0),
])
def test_examples_agree_with_oracle(text, genus):
    code = parse_gauss(text)
    assert genus_oracle(code) == genus
    assert supporting_genus(code) == genus
    assert is_realizable(code) == (genus == 0)


def test_four_token_literal_is_two_kinks():
    # "U1+ O2+ U2+ O1+" reads as two adjacent R1 kinks, hence planar
    code = parse_gauss("U1+ O2+ U2+ O1+")
    assert supporting_genus(code) == 0


def test_trefoil_faces():
    assert len(boundary_circles(parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+"))) == 5


def test_disconnected_report():
    rep = genus_report(parse_gauss("O1+ O2+ U1+ U2+; (); O3+ U3+"))
    assert rep["disconnected"] is True
    assert rep["genus"] == 1
    assert [p["genus"] for p in rep["pieces"]] == [1, 0, 0]
    assert genus_report(parse_gauss("O1+ U2+; U1+ O2+"))["disconnected"] is False


def test_invalid_code_rejected():
    bad = GaussCode(((Passage(1, "O", 1),),))
    with pytest.raises(InvalidCode):
        supporting_genus(bad)


seeds = st.integers(0, 10 ** 6)


@settings(max_examples=200, deadline=None)
@given(seeds, st.integers(0, 9), st.integers(1, 3))
def test_random_codes_match_oracle(seed, n, k):
    code = random_code(random.Random(seed), num_crossings=n, max_components=k)
    assert supporting_genus(code) == genus_oracle(code)


@settings(max_examples=100, deadline=None)
@given(seeds, st.integers(0, 8))
def test_genus_invariant_under_relabel_and_rotation(seed, n):
    rng = random.Random(seed)
    code = random_code(rng, num_crossings=n, max_components=2)
    ids = code.crossings()
    relabel = dict(zip(ids, rng.sample(range(1, 50), len(ids))))
    comps = []
    for comp in code.components:
        comp = [Passage(relabel[p.crossing], p.role, p.sign) for p in comp]
        k = rng.randrange(len(comp)) if comp else 0
        comps.append(tuple(comp[k:] + comp[:k]))
    assert supporting_genus(GaussCode(tuple(comps))) == supporting_genus(code)
