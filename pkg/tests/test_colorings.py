import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_colorings
from vknots import catalog
from vknots.correspondence import group_of_diagram
from vknots.errors import NotWirtinger
from vknots.gauss import GaussDiagram, parse_gauss_code, random_diagram
from vknots.homology import IntMatrix
from vknots.invariants.colorings import coloring_matrix, count_colorings, count_solutions_mod
from vknots.words import parse_presentation


def test_trefoil_and_figure_eight():
    trefoil = parse_gauss_code("O1- U2- O3- U1- O2- U3-")
    eight = parse_gauss_code("O1- U2- O3+ U4+ O2- U1- O4+ U3+")
    assert count_colorings(trefoil, 3) == 9
    assert count_colorings(trefoil, 5) == 5
    assert count_colorings(eight, 3) == 3
    assert count_colorings(eight, 5) == 25


def test_unknot_and_kink_are_trivially_colored():
    assert count_colorings(GaussDiagram.empty(), 7) == 7
    assert count_colorings(parse_gauss_code("O1+ U1+"), 7) == 7


def test_accepts_presentations():
    assert count_colorings(catalog.presentation("trefoil_chain"), 3) == 9
    assert count_colorings(catalog.wirtinger("trefoil_group_4"), 3) == 9


def test_rejects_non_wirtinger():
    with pytest.raises(NotWirtinger):
        count_colorings(parse_presentation("gens: a b ; rels: a^2 b^-2"), 3)
    with pytest.raises(ValueError):
        count_colorings(GaussDiagram.empty(), 1)


def test_matrix_rows_sum_to_zero():
    # constant colorings always satisfy every equation
    w = catalog.wirtinger("bms")
    assert all(sum(row) == 0 for row in coloring_matrix(w).entries)


def test_solutions_mod_n():
    m = IntMatrix.from_rows([[2, 0], [0, 3]], 2)
    assert count_solutions_mod(m, 6) == 2 * 3
    assert count_solutions_mod(m, 5) == 1


@settings(max_examples=60)
@given(st.integers(0, 5), st.integers(0, 10**6), st.sampled_from([2, 3, 4, 5]))
def test_against_brute_force(n, seed, mod):
    w = group_of_diagram(random_diagram(n, random.Random(seed)))
    c = count_colorings(w, mod)
    assert c == brute_colorings(w, mod)
    assert c >= mod and c % mod == 0


@pytest.mark.parametrize("name", ["trefoil_group_4", "fox", "bms", "gordon_k2", "trefoil_chain"])
def test_catalog_against_brute_force(name):
    w = catalog.wirtinger(name)
    for mod in (3, 5):
        assert count_colorings(w, mod) == brute_colorings(w, mod)
