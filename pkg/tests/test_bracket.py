import random

import pytest
from hypothesis import given, strategies as st

from oracles import PD, pd_bracket, pd_to_gauss
from vknots.errors import StateSpaceTooLarge
from vknots.gauss import GaussDiagram, connected_sum, gaps, mirror_reverse, parse_gauss_code, random_diagram
from vknots.invariants.bracket import bracket, normalized_polynomial, state_loop_counts
from vknots.invariants.laurent import LaurentPoly, parse_poly


def test_empty_bracket_is_one():
    assert bracket(GaussDiagram.empty()) == LaurentPoly.const(1)
    assert normalized_polynomial(GaussDiagram.empty()) == LaurentPoly.const(1)


def test_kink_values():
    assert bracket(parse_gauss_code("O1+ U1+")) == LaurentPoly.monomial(3, -1)
    assert bracket(parse_gauss_code("O1- U1-")) == LaurentPoly.monomial(-3, -1)
    assert normalized_polynomial(parse_gauss_code("O1+ U1+")) == LaurentPoly.const(1)


def test_trefoils():
    left = parse_gauss_code("O1- U2- O3- U1- O2- U3-")
    right = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+")
    assert bracket(right) == parse_poly("-A^5 - A^-3 + A^-7")
    assert bracket(left) == parse_poly("A^7 - A^3 - A^-5")
    assert normalized_polynomial(right) == parse_poly("A^-4 + A^-12 - A^-16")
    assert normalized_polynomial(left) == parse_poly("A^4 + A^12 - A^16")


def test_figure_eight_is_symmetric():
    d = parse_gauss_code("O1- U2- O3+ U4+ O2- U1- O4+ U3+")
    assert normalized_polynomial(d) == parse_poly("A^8 - A^4 + 1 - A^-4 + A^-8")


@pytest.mark.parametrize("name", sorted(PD))
def test_against_planar_diagram_oracle(name):
    d = pd_to_gauss(PD[name])
    assert bracket(d) == pd_bracket(PD[name])


def test_state_counts_sum_to_two_to_the_n():
    d = parse_gauss_code("O1- U2- O3+ U4+ O2- U1- O4+ U3+")
    assert sum(state_loop_counts(d).values()) == 2 ** 4


@given(st.integers(0, 6), st.integers(0, 10**6))
def test_mirror_reverse_swaps_a(n, seed):
    d = random_diagram(n, random.Random(seed))
    b = normalized_polynomial(d)
    flipped = LaurentPoly({-e: c for e, c in b.coeffs.items()})
    assert normalized_polynomial(mirror_reverse(d)) == flipped


@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 10**6))
def test_connected_sum_is_multiplicative(n1, n2, seed):
    rng = random.Random(seed)
    d1, d2 = random_diagram(n1, rng), random_diagram(n2, rng)
    g1, g2 = rng.choice(gaps(d1)), rng.choice(gaps(d2))
    assert bracket(connected_sum(d1, g1, d2, g2)) == bracket(d1) * bracket(d2)


def test_state_space_limit():
    big = parse_gauss_code(" ".join(f"O{k}+ U{k}+" for k in range(1, 22)))
    with pytest.raises(StateSpaceTooLarge):
        bracket(big)
