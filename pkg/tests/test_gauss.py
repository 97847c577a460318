import random

import pytest
from hypothesis import given, strategies as st

from vknots.errors import BadSyntax, DuplicateRole, GapOutOfRange, OddOccurrence, SignMismatch
from vknots.gauss import (
    GaussDiagram,
    all_diagrams,
    connected_sum,
    gaps,
    mirror_reverse,
    parse_gauss_code,
    random_diagram,
    serialize_gauss_code,
)

TREFOIL = "O1- U2- O3- U1- O2- U3-"

diagrams = st.builds(
    lambda n, seed: random_diagram(n, random.Random(seed)),
    st.integers(0, 6),
    st.integers(0, 10**6),
)


def test_empty_code():
    d = parse_gauss_code("")
    assert d.n == 0 and d == GaussDiagram.empty()
    assert serialize_gauss_code(d) == ""


def test_kink():
    d = parse_gauss_code("O1+ U1+")
    (c,) = d.chords
    assert (c.id, c.sign, c.head_pos, c.tail_pos) == (1, 1, 1, 0)
    assert serialize_gauss_code(d) == "O1+ U1+"


def test_trefoil_code_is_valid():
    d = parse_gauss_code(TREFOIL)
    assert d.n == 3 and d.writhe == -3
    assert serialize_gauss_code(d) == TREFOIL


def test_ids_renumbered_by_first_appearance():
    d = parse_gauss_code("U7+  O3-   O7+ U3-")
    assert d.code() == "U1+ O2- O1+ U2-"


@pytest.mark.parametrize(
    "text, error",
    [
        ("O1+ U1-", SignMismatch),
        ("O1+ O1+", DuplicateRole),
        ("U2- U2-", DuplicateRole),
        ("O1+", OddOccurrence),
        ("O1+ U1+ O1+", OddOccurrence),
        ("X1+ U1+", BadSyntax),
        ("O0+ U0+", BadSyntax),
        ("O1 U1", BadSyntax),
    ],
)
def test_rejects_bad_codes(text, error):
    with pytest.raises(error):
        parse_gauss_code(text)


@given(diagrams)
def test_round_trip(d):
    assert parse_gauss_code(serialize_gauss_code(d)) == d


@given(st.lists(st.tuples(st.sampled_from("OU"), st.integers(1, 4), st.sampled_from("+-")), max_size=10))
def test_fuzzed_token_streams_never_give_invalid_diagrams(tokens):
    text = " ".join(f"{r}{c}{s}" for r, c, s in tokens)
    try:
        d = parse_gauss_code(text)
    except (SignMismatch, DuplicateRole, OddOccurrence):
        return
    pos = d.positions()
    assert all(set(roles) == {"O", "U"} for roles in pos.values())
    assert len(d.endpoints) == 2 * d.n


def test_mirror_reverse_of_kink():
    assert mirror_reverse(parse_gauss_code("O1+ U1+")).code() == "U1- O1-"
    assert mirror_reverse(GaussDiagram.empty()) == GaussDiagram.empty()


@given(diagrams)
def test_mirror_reverse_is_involution(d):
    assert mirror_reverse(mirror_reverse(d)) == d


def test_connected_sum_of_kinks():
    k = parse_gauss_code("O1+ U1+")
    assert connected_sum(k, 0, k, 0).code() == "O1+ U1+ O2+ U2+"


def test_connected_sum_reads_from_the_gap():
    k = parse_gauss_code("O1+ U1+")
    # gap 1 sits between O1 and U1, so reading starts at U1
    assert connected_sum(k, 1, k, 0).code() == "U1+ O1+ O2+ U2+"


@given(diagrams, st.integers(0, 20))
def test_sum_with_empty_is_identity_up_to_rotation(d, g):
    g %= len(gaps(d))
    e = GaussDiagram.empty()
    assert connected_sum(d, g, e, 0) == d.rotate(g)
    assert connected_sum(e, 0, d, g) == d.rotate(g)


def test_gap_range_checked():
    k = parse_gauss_code("O1+ U1+")
    with pytest.raises(GapOutOfRange):
        connected_sum(k, 2, k, 0)
    with pytest.raises(GapOutOfRange):
        connected_sum(k, 0, GaussDiagram.empty(), 1)


def test_all_diagrams_counts():
    # arrangements of n labelled arrows on a based circle, up to relabelling,
    # times 2^n sign choices: (2n)! / n! * 2^n
    assert [sum(1 for _ in all_diagrams(n)) for n in range(4)] == [1, 4, 48, 960]
