from itertools import product

import pytest
from hypothesis import given, strategies as st

from slopecount.graphs import LabeledGraph, all_graphs, num_slots
from slopecount.pointcount import multinomial_type_counts
from slopecount.weights import (
    SUPPORTED_PRIMES,
    EdgeWeighting,
    FieldElement,
    all_weightings,
    classify_type,
    complement_weighting,
    parse_point,
    weight_induced_subgraph,
    weighting_to_graph,
)


@pytest.mark.parametrize("q", SUPPORTED_PRIMES)
def test_field_axioms(q):
    els = [FieldElement(v, q) for v in range(q)]
    zero, one = FieldElement(0, q), FieldElement(1, q)
    for a in els:
        assert a + zero == a and a * one == a
        assert a + (-a) == zero
        if a:
            assert a * a.inverse() == one
        for b in els:
            assert a + b == b + a and a * b == b * a
            assert (a - b) + b == a
    if q <= 7:
        for a, b, c in product(els, repeat=3):
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
    with pytest.raises(ZeroDivisionError):
        zero.inverse()


def test_field_rejects_mixed_moduli_and_nonprimes():
    with pytest.raises(ValueError):
        FieldElement(1, 3) + FieldElement(1, 5)
    with pytest.raises(ValueError):
        FieldElement(1, 4)


def test_weighting_validation():
    with pytest.raises(ValueError):
        EdgeWeighting(4, 3, (0,) * 5)
    with pytest.raises(ValueError):
        EdgeWeighting(4, 3, (0, 0, 0, 0, 0, 3))


@pytest.mark.parametrize("text, values", [("3:4:000112", (0, 0, 0, 1, 1, 2)), ("2:4:100101", (1, 0, 0, 1, 0, 1))])
def test_parse_point(text, values):
    a = parse_point(text)
    assert a.values == values
    assert str(a) == text


def test_parse_point_hex():
    assert parse_point("2:4:0x25") == parse_point("2:4:100101")


@pytest.mark.parametrize("text, needle", [
    ("3:4:000113", "position 5"),
    ("3:4:00011", "expected 6 digits"),
    ("4:4:000000", "q must be"),
    ("3:4", "q:n:digits"),
    ("2:3:0x10", "exceeds"),
])
def test_parse_point_errors(text, needle):
    with pytest.raises(ValueError, match=needle):
        parse_point(text)


@given(st.integers(1, 6), st.sampled_from([2, 3, 5]), st.data())
def test_code_roundtrip(n, q, data):
    code = data.draw(st.integers(0, q ** num_slots(n) - 1))
    a = EdgeWeighting.from_code(n, q, code)
    assert a.code == code
    assert parse_point(str(a)) == a


def test_weighting_to_graph_examples():
    assert weighting_to_graph(EdgeWeighting.constant(5, 2, 0)) == LabeledGraph(5)
    assert weighting_to_graph(EdgeWeighting.constant(5, 2, 1)) == LabeledGraph.complete(5)
    assert weighting_to_graph(parse_point("2:4:100101")) == LabeledGraph.path(4)
    with pytest.raises(ValueError):
        weighting_to_graph(EdgeWeighting.constant(4, 3))


@pytest.mark.parametrize("n", range(1, 6))
def test_graph_weighting_bijection(n):
    images = set()
    for g in all_graphs(n):
        a = EdgeWeighting.from_graph(g)
        assert weighting_to_graph(a) == g
        images.add(a)
    assert len(images) == 2 ** num_slots(n)


def test_complement_weighting():
    assert complement_weighting(EdgeWeighting.constant(4, 2, 0)) == EdgeWeighting.constant(4, 2, 1)
    p4 = parse_point("2:4:100101")
    comp = complement_weighting(p4)
    assert weighting_to_graph(comp) == LabeledGraph.from_edges(4, [(1, 3), (1, 4), (2, 4)])
    assert complement_weighting(comp) == p4
    for a in all_weightings(4, 2):
        assert weighting_to_graph(complement_weighting(a)) == weighting_to_graph(a).complement()
        assert weight_induced_subgraph(a, 0) == weight_induced_subgraph(a, 1).complement()


def test_weight_induced_subgraph():
    a = parse_point("3:4:000112")
    assert weight_induced_subgraph(a, 0) == LabeledGraph.from_edges(4, [(1, 2), (1, 3), (1, 4)])
    for b in all_weightings(3, 3):
        assert sum(weight_induced_subgraph(b, alpha).num_edges() for alpha in range(3)) == 3
    for b in all_weightings(4, 2):
        assert weight_induced_subgraph(b, 1) == weighting_to_graph(b)


def test_classify_type():
    assert classify_type(EdgeWeighting.constant(4, 3, 2)) == (6,)
    assert classify_type(parse_point("3:4:000112")) == (3, 2, 1)
    assert classify_type(parse_point("3:4:012012")) == (2, 2, 2)


def test_type_counts_match_multinomial():
    scanned = {}
    for a in all_weightings(4, 3):
        t = classify_type(a)
        scanned[t] = scanned.get(t, 0) + 1
    expected = {(6,): 3, (5, 1): 36, (4, 2): 90, (4, 1, 1): 90, (3, 3): 60, (3, 2, 1): 360, (2, 2, 2): 90}
    assert scanned == expected == multinomial_type_counts(4, 3)
    assert sum(expected.values()) == 729
    for n, q in [(4, 5), (5, 2), (3, 3)]:
        brute = {}
        for a in all_weightings(n, q):
            t = classify_type(a)
            brute[t] = brute.get(t, 0) + 1
        assert brute == multinomial_type_counts(n, q)
