from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotpoly.laurent import VarContext
from knotpoly.rmatrices import build_catalog_pair
from knotpoly.tensorops import (
    ShapeError,
    SparseOp,
    compose,
    embed_two_site,
    flatten,
    invert,
    partial_trace,
    rot_left,
    rot_left_inverse,
    rot_right,
    rot_right_inverse,
    tensor,
    unflatten,
)

from oracles import dense, identity, kron, matmul

CTX = VarContext(["x"])
PT = {"x": Fraction(5, 3)}


@st.composite
def ops(draw, dim=2, arity=1):
    size = dim ** arity
    entries = {}
    for _ in range(draw(st.integers(0, size + 2))):
        r = draw(st.integers(0, size - 1))
        c = draw(st.integers(0, size - 1))
        e = draw(st.integers(-2, 2))
        k = draw(st.integers(-3, 3))
        entries[(r, c)] = CTX.var("x") ** e * k
    return SparseOp.from_flat(dim, arity, CTX, entries)


def test_flatten_round_trip():
    for idx in product(range(1, 4), repeat=3):
        assert unflatten(flatten(idx, 3), 3, 3) == idx


def test_identity_is_neutral():
    I = SparseOp.identity(2, 2, CTX)
    R = build_catalog_pair("alexander").R
    assert compose(I.substitute({}, R.ctx), R) == R


def test_shape_mismatch():
    with pytest.raises(ShapeError):
        compose(SparseOp.identity(2, 1, CTX), SparseOp.identity(2, 2, CTX))


@settings(max_examples=40, deadline=None)
@given(ops(arity=2), ops(arity=2))
def test_compose_matches_dense(a, b):
    assert dense(compose(a, b), PT) == matmul(dense(a, PT), dense(b, PT))


@settings(max_examples=40, deadline=None)
@given(ops(), ops(arity=2))
def test_tensor_matches_kronecker(a, b):
    assert dense(tensor(a, b), PT) == kron(dense(a, PT), dense(b, PT))


@settings(max_examples=40, deadline=None)
@given(ops(arity=2))
def test_partial_traces_match_dense(a):
    m = dense(a, PT)
    t2 = [[sum(m[2 * i + k][2 * j + k] for k in range(2)) for j in range(2)] for i in range(2)]
    t1 = [[sum(m[2 * k + i][2 * k + j] for k in range(2)) for j in range(2)] for i in range(2)]
    assert dense(partial_trace(a, 2), PT) == t2
    assert dense(partial_trace(a, 1), PT) == t1


@settings(max_examples=40, deadline=None)
@given(ops(arity=2))
def test_rotations_follow_index_definition(a):
    left, right = rot_left(a), rot_right(a)
    for k, l, i, j in product((1, 2), repeat=4):
        v = a.get((k, l), (i, j))
        assert left.get((l, j), (k, i)) == v
        assert right.get((i, k), (j, l)) == v
    assert rot_left_inverse(left) == a
    assert rot_right_inverse(right) == a


@settings(max_examples=20, deadline=None)
@given(ops(arity=2))
def test_embedding_on_adjacent_sites(a):
    I = SparseOp.identity(2, 1, CTX)
    assert embed_two_site(a, 1, 2, 3) == tensor(a, I)
    assert embed_two_site(a, 2, 3, 3) == tensor(I, a)


@pytest.mark.parametrize("name", ["alexander", "v1", "lambda1", "lambda-1", "sl3"])
def test_catalog_inverses(name):
    E = build_catalog_pair(name)
    I2 = SparseOp.identity(E.dim, 2, E.ctx)
    assert compose(E.R, E.R_inv) == I2
    assert compose(E.R_inv, E.R) == I2
    assert compose(E.h, invert(E.h)) == SparseOp.identity(E.dim, 1, E.ctx)


def test_invert_against_dense():
    E = build_catalog_pair("v1")
    R = E.R
    pt = {"t0": Fraction(3), "t1": Fraction(-2, 5)}
    assert matmul(dense(R, pt), dense(invert(R), pt)) == identity(16)
