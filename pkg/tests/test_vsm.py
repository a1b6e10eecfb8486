import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from oracles import cosine_formula, minkowski_formula
from textsim.textproc import TermVector
from textsim.vsm import cosine, dice, euclidean, jaccard, manhattan

vectors = st.dictionaries(st.sampled_from("abcdef"), st.integers(1, 6), max_size=6).map(TermVector)
sets = st.frozensets(st.sampled_from("abcdefgh"), max_size=8)


def tv(**weights):
    return TermVector(weights)


@pytest.mark.parametrize(
    "v1, v2, expected",
    [
        (tv(a=1, b=1), tv(a=1, b=1), 1.0),
        (tv(a=1), tv(b=1), 0.0),
        (tv(a=2, b=1), tv(a=1, b=2), 0.8),
        (tv(), tv(a=1), 0.0),
        (tv(), tv(), 0.0),
    ],
)
def test_cosine(v1, v2, expected):
    assert cosine(v1, v2) == pytest.approx(expected)


@pytest.mark.parametrize(
    "s1, s2, d, j",
    [
        ({"a", "b", "c"}, {"b", "c", "d"}, 2 * 2 / 6, 2 / 4),
        ({"x", "y"}, {"x", "y"}, 1.0, 1.0),
        ({"a"}, {"b"}, 0.0, 0.0),
        (set(), set(), 1.0, 1.0),
        (set(), {"a"}, 0.0, 0.0),
    ],
)
def test_dice_and_jaccard(s1, s2, d, j):
    assert dice(frozenset(s1), frozenset(s2)) == pytest.approx(d)
    assert jaccard(frozenset(s1), frozenset(s2)) == pytest.approx(j)


@pytest.mark.parametrize(
    "v1, v2, pre_normalize, e, m",
    [
        (tv(a=2, b=1), tv(a=2, b=1), False, 0.0, 0.0),
        (tv(a=1), tv(b=1), True, math.sqrt(2), 2.0),
        (tv(a=3), tv(a=1), False, 2.0, 2.0),
        (tv(a=1), tv(b=1), False, math.sqrt(2), 2.0),
        (tv(a=2, b=1), tv(a=1, b=3), False, math.sqrt(5), 3.0),
        (tv(a=3), tv(a=1), True, 0.0, 0.0),
        (tv(), tv(), True, 0.0, 0.0),
    ],
)
def test_distances(v1, v2, pre_normalize, e, m):
    assert euclidean(v1, v2, pre_normalize) == pytest.approx(e)
    assert manhattan(v1, v2, pre_normalize) == pytest.approx(m)


@given(vectors, vectors)
def test_match_direct_formulas(v1, v2):
    a, b = dict(v1.weights), dict(v2.weights)
    assert cosine(v1, v2) == pytest.approx(cosine_formula(a, b), abs=1e-12)
    assert euclidean(v1, v2) == pytest.approx(minkowski_formula(a, b, 2), abs=1e-12)
    assert manhattan(v1, v2) == pytest.approx(minkowski_formula(a, b, 1), abs=1e-12)
    assert euclidean(v1, v2, True) == pytest.approx(minkowski_formula(a, b, 2, True), abs=1e-12)


@given(vectors, vectors)
def test_vector_measures_symmetric(v1, v2):
    assert cosine(v1, v2) == cosine(v2, v1)
    for pre in (False, True):
        assert euclidean(v1, v2, pre) == euclidean(v2, v1, pre)
        assert manhattan(v1, v2, pre) == manhattan(v2, v1, pre)


@given(sets, sets)
def test_set_measures(s1, s2):
    d, j = dice(s1, s2), jaccard(s1, s2)
    assert d == dice(s2, s1) and j == jaccard(s2, s1)
    assert 0 <= j <= d <= 1
    if 0 < j < 1:
        assert d > j
    else:
        assert d == j


@given(vectors, vectors)
def test_cosine_bounded(v1, v2):
    assert 0 <= cosine(v1, v2) <= 1


@given(vectors, st.floats(0.01, 100))
def test_cosine_scale_invariant(v, c):
    assume(v.k)
    assert cosine(v, v.scaled(c)) == pytest.approx(1.0)


@given(vectors, vectors, vectors)
def test_distances_are_metrics(x, y, z):
    for dist in (euclidean, manhattan):
        assert dist(x, y) >= 0
        assert dist(x, x) == 0
        assert dist(x, z) <= dist(x, y) + dist(y, z) + 1e-9


@given(vectors, vectors)
def test_euclidean_manhattan_sandwich(v1, v2):
    k = len(v1.weights.keys() | v2.weights.keys())
    e, m = euclidean(v1, v2), manhattan(v1, v2)
    assert e <= m + 1e-9
    assert m <= math.sqrt(k) * e + 1e-9
