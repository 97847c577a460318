import pytest

from vknots.errors import NotWeightOne
from vknots.gauss import parse_gauss_code
from vknots.invariants.groups import cyclic, dihedral, group_by_name, quaternion, symmetric
from vknots.invariants.realizable import (
    empirical_realizable_search,
    longitude_images,
    realizable_set,
    weight_one_note,
)


def names(g, s):
    return {g.names[x] for x in s}


def test_s3_transposition():
    s3 = symmetric(3)
    assert names(s3, realizable_set(s3, s3.element("(12)"))) == {"e"}


def test_q8_closed_form():
    q = quaternion()
    assert names(q, realizable_set(q, q.element("i"))) == {"1", "-1"}


def test_q8_weight_one_is_flagged():
    q = quaternion()
    assert "not of weight one" in weight_one_note(q, q.element("i"))
    with pytest.raises(NotWeightOne):
        realizable_set(q, q.element("i"), require_weight_one=True)


def test_s4_and_abelian_groups():
    s4 = symmetric(4)
    assert names(s4, realizable_set(s4, s4.element("(12)"))) == {"e", "(12)(34)"}
    z5 = cyclic(5)
    assert names(z5, realizable_set(z5, 1)) == {"0"}


@pytest.mark.parametrize("name", ["S3", "S4", "D4", "D5", "Q8", "A4", "Dic3"])
def test_closed_form_is_subgroup(name):
    g = group_by_name(name)
    for mu in range(g.order):
        assert g.is_subgroup(realizable_set(g, mu))


def test_trefoil_longitude_images():
    s3 = symmetric(3)
    d = parse_gauss_code("O1- U2- O3- U1- O2- U3-")
    assert names(s3, longitude_images(d, s3, s3.element("(12)"))) == {"e"}


@pytest.mark.parametrize(
    "g, mu", [(symmetric(3), "(12)"), (quaternion(), "i"), (symmetric(4), "(12)"), (dihedral(5), "(25)(34)")]
)
def test_search_stays_inside_closed_form(g, mu):
    m = g.element(mu)
    res = empirical_realizable_search(g, m, budget=300, max_chords=2, extra_random=100)
    assert res.found <= realizable_set(g, m)
    for x, code in res.witnesses.items():
        assert x in longitude_images(parse_gauss_code(code), g, m)


def test_search_finds_identity_for_s3():
    s3 = symmetric(3)
    res = empirical_realizable_search(s3, s3.element("(12)"), max_chords=3, extra_random=0)
    assert res.found == {s3.identity}


def test_search_budget_is_reported():
    s3 = symmetric(3)
    res = empirical_realizable_search(s3, s3.element("(12)"), budget=20, max_chords=2, extra_random=0)
    assert res.exhausted and res.diagrams_checked == 20
