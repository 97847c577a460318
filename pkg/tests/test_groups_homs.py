import random

import pytest

from oracles import brute_homs
from vknots import catalog
from vknots.correspondence import group_of_diagram, longitude_of_diagram
from vknots.errors import BudgetExceeded, UnknownGroup
from vknots.gauss import random_diagram
from vknots.invariants.groups import (
    CATALOGUE,
    cyclic,
    dihedral,
    group_by_name,
    groups_up_to,
    load_table_file,
    quaternion,
    symmetric,
)
from vknots.invariants.homs import count_homs, enumerate_homs, evaluate, hom_fingerprint
from vknots.moves import apply_move, enumerate_moves
from vknots.words import parse_presentation, parse_word


@pytest.mark.parametrize("name", sorted(CATALOGUE))
def test_catalogue_groups_are_groups(name):
    g = group_by_name(name)
    assert g.name == name
    # Lagrange: every element order divides |G|
    for x in range(g.order):
        assert g.order % len(g.generated([x])) == 0


@pytest.mark.parametrize(
    "name, order, abelian",
    [("S3", 6, False), ("S4", 24, False), ("A4", 12, False), ("Q8", 8, False), ("D5", 10, False),
     ("Dic3", 12, False), ("Z2xZ6", 12, True), ("Z7", 7, True)],
)
def test_orders(name, order, abelian):
    g = group_by_name(name)
    assert g.order == order and g.is_abelian() == abelian


def test_class_equation():
    for g in (symmetric(4), quaternion(), dihedral(5)):
        classes = g.conjugacy_classes()
        assert sum(len(c) for c in classes) == g.order
        assert sum(len(c) == 1 for c in classes) == len(g.center())


def test_quaternion_structure():
    q = quaternion()
    i, j, k, m = (q.element(x) for x in ("i", "j", "k", "-1"))
    assert q.mul(i, j) == k and q.mul(i, i) == m
    assert q.center() == {q.identity, m}
    assert q.commutator_subgroup() == {q.identity, m}
    assert q.normal_closure([i]) == {q.identity, m, i, q.inv(i)}


def test_s3_structure():
    s = symmetric(3)
    t = s.element("(12)")
    assert len(s.commutator_subgroup()) == 3
    assert s.is_weight_one(t)
    assert s.centralizer(t) == {s.identity, t}


def test_groups_up_to():
    assert len(groups_up_to(6)) == 8
    assert len(groups_up_to(8)) == 14
    assert [g.order for g in groups_up_to(4)] == [1, 2, 3, 4, 4]


def test_unknown_group():
    with pytest.raises(UnknownGroup):
        group_by_name("M11")
    with pytest.raises(UnknownGroup):
        quaternion().element("q")


def test_load_table_file(tmp_path):
    path = tmp_path / "z3.tbl"
    path.write_text("3\n0 1 2\n1 2 0\n2 0 1\n")
    g = load_table_file(str(path))
    assert g.order == 3 and g.is_abelian()
    bad = tmp_path / "bad.tbl"
    bad.write_text("2\n0 1\n0 1\n")
    with pytest.raises(ValueError):
        load_table_file(str(bad))


def test_free_group_on_one_generator():
    p = parse_presentation("gens: t ; rels:")
    for g in groups_up_to(8):
        assert count_homs(p, g) == g.order


def test_trefoil_homs_to_s3():
    w = catalog.wirtinger("trefoil_2gen")
    s3 = symmetric(3)
    assert count_homs(w, s3) == 12
    # 1 trivial + 3 onto a transposition + 2 onto a 3-cycle, plus 6 surjections
    assert count_homs(w, s3, surjective_only=True) == 6


def test_fixed_meridian():
    w = catalog.wirtinger("trefoil_chain")
    s3 = symmetric(3)
    total = 0
    for x in range(s3.order):
        total += count_homs(w, s3, fix={"a": x})
    assert total == count_homs(w, s3)


@pytest.mark.parametrize("name", ["trefoil_group_4", "trefoil_2gen", "trefoil_chain", "fox", "kink"])
def test_against_brute_force(name):
    p = catalog.presentation(name)
    for g in groups_up_to(6):
        assert count_homs(p, g) == brute_homs(p, g), g.name


def test_non_wirtinger_presentations_use_generic_search():
    p = parse_presentation("gens: a b ; rels: a^2, b^3, (a b)^2")
    for g in groups_up_to(8):
        assert count_homs(p, g) == brute_homs(p, g), g.name


def test_random_diagram_groups_against_brute_force():
    rng = random.Random(2)
    groups = [cyclic(3), symmetric(3), quaternion()]
    for _ in range(25):
        w = group_of_diagram(random_diagram(rng.randint(1, 4), rng))
        for g in groups:
            assert count_homs(w, g) == brute_homs(w.presentation, g)


def test_budget_exceeded_carries_partial_results():
    w = catalog.wirtinger("trefoil_group_4")
    with pytest.raises(BudgetExceeded) as info:
        enumerate_homs(w, symmetric(4), budget=5)
    assert isinstance(info.value.partial, list)


def test_longitudes_commute_with_meridians():
    rng = random.Random(4)
    s4 = symmetric(4)
    for _ in range(20):
        d = random_diagram(rng.randint(1, 5), rng)
        w = group_of_diagram(d)
        pd = longitude_of_diagram(d)
        hs = enumerate_homs(w, s4)
        for h in hs.homs:
            img = hs.images(h)
            m, lon = img[pd.meridian], evaluate(pd.longitude, img, s4)
            assert s4.mul(m, lon) == s4.mul(lon, m)


def test_fingerprint_invariant_under_moves():
    rng = random.Random(9)
    groups = groups_up_to(6)
    for _ in range(10):
        d = random_diagram(rng.randint(1, 3), rng)
        base = hom_fingerprint(group_of_diagram(d), groups)
        for m in rng.sample(enumerate_moves(d), 5):
            assert hom_fingerprint(group_of_diagram(apply_move(d, m)), groups) == base


def test_evaluate():
    q = quaternion()
    images = {"a": q.element("i"), "b": q.element("j")}
    assert q.names[evaluate(parse_word("[a,b]"), images, q)] == "-1"
