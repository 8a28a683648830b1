import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotpoly.braidrep import (
    BraidParseError,
    BraidWord,
    closure_mrt,
    component_count,
    left_closure,
    markov_conjugate,
    markov_stabilize,
    random_braid,
    rho,
    right_closure,
)
from knotpoly.rmatrices import build_catalog_pair
from knotpoly.tensorops import as_scalar_multiple_of_identity

SMALL = ["alexander", "v1", "lambda1"]


@st.composite
def braids(draw, max_strands=3, max_length=6, strands=None):
    n = strands or draw(st.integers(1, max_strands))
    if n == 1:
        return BraidWord(1)
    letters = draw(st.lists(st.integers(1, n - 1).flatmap(lambda k: st.sampled_from((k, -k))),
                            max_size=max_length))
    return BraidWord(n, tuple(letters))


def test_parse_forms():
    b = BraidWord(3, (1, -2, 1))
    assert BraidWord.parse("strands=3; 1 -2 1") == b
    assert BraidWord.parse('{"strands": 3, "letters": [1, -2, 1]}') == b
    assert BraidWord.parse(str(b)) == b
    assert BraidWord.parse("strands=1;") == BraidWord(1)


@pytest.mark.parametrize("text", ["1 2 3", "strands=2; 2", "strands=2; 0", "strands=x; 1", "{bad json"])
def test_parse_errors(text):
    with pytest.raises(BraidParseError):
        BraidWord.parse(text)


@pytest.mark.parametrize("strands,letters,count", [
    (1, (), 1), (2, (), 2), (2, (1, 1), 2), (2, (1, 1, 1), 1),
    (3, (1, -2, 1, -2), 1), (3, (1, 1, 2, 2), 3), (3, (1, 1, 2, 2, 2), 2),
])
def test_component_count(strands, letters, count):
    assert component_count(BraidWord(strands, letters)) == count


def test_inverse_cancels():
    E = build_catalog_pair("v1")
    b = BraidWord(3, (1, -2, 2, 1))
    assert rho(E, b + b.inverse()) == E.identity(3)


@pytest.mark.parametrize("name", ["alexander", "v1", "lambda1", "lambda-1", "sl3"])
def test_braid_relations(name):
    E = build_catalog_pair(name)
    assert rho(E, BraidWord(3, (1, 2, 1))) == rho(E, BraidWord(3, (2, 1, 2)))


@pytest.mark.parametrize("name", SMALL)
def test_far_commutation(name):
    E = build_catalog_pair(name)
    assert rho(E, BraidWord(4, (1, 3))) == rho(E, BraidWord(4, (3, 1)))
    assert rho(E, BraidWord(4, (1, 2, 3, 1))) != rho(E, BraidWord(4, (1, 3, 2, 1)))


def test_composition_order():
    # letters act bottom to top: rho(w1 w2) = rho(w2) rho(w1)
    from knotpoly.tensorops import compose

    E = build_catalog_pair("v1")
    a, b = BraidWord(3, (1,)), BraidWord(3, (2,))
    assert rho(E, a + b) == compose(rho(E, b), rho(E, a))


@pytest.mark.parametrize("name", SMALL)
@settings(max_examples=15, deadline=None)
@given(beta=braids(), gamma=braids(max_length=3))
def test_markov_invariance(name, beta, gamma):
    E = build_catalog_pair(name)
    base = closure_mrt(E, beta).scalar
    g = BraidWord(beta.strands, gamma.letters) if gamma.strands == beta.strands else BraidWord(beta.strands)
    assert closure_mrt(E, markov_conjugate(beta, g)).scalar == base
    assert closure_mrt(E, markov_stabilize(beta, 1)).scalar == base
    assert closure_mrt(E, markov_stabilize(beta, -1)).scalar == base


@pytest.mark.parametrize("name", SMALL + ["lambda-1", "sl3"])
def test_two_strand_closures_agree(name):
    E = build_catalog_pair(name)
    rng = random.Random(3)
    for _ in range(3):
        F = rho(E, random_braid(rng, strands=2, max_length=4))
        left, right = left_closure(E, F), right_closure(E, F)
        assert left == right
        assert as_scalar_multiple_of_identity(left) is not None


def test_unknot_is_one():
    for name in ("alexander", "v1", "lambda1"):
        assert closure_mrt(build_catalog_pair(name), BraidWord(1)).scalar.is_constant()
