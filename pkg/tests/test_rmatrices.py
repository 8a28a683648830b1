from fractions import Fraction

import pytest

from knotpoly.invariants import tensor_product_pair
from knotpoly.rmatrices import (
    axiom_residuals,
    build_alexander,
    build_catalog_pair,
    build_lambda_minus1,
    build_v1,
    check_axioms,
    check_grading_preserved,
    solve_diagonal_enhancement,
)
from knotpoly.tensorops import SparseOp

from oracles import dense, dense_ybe_residual

PAIRS = ["alexander", "v1", "v1(r=-1)", "lambda1", "lambda-1", "sl3"]


@pytest.mark.parametrize("name", PAIRS)
def test_axioms_hold(name):
    rep = check_axioms(build_catalog_pair(name))
    assert rep.ok, rep.summary()


def test_lambda_minus1_other_sign():
    assert check_axioms(build_lambda_minus1(-1)).ok


def test_tensor_product_of_alexander_pairs():
    E = tensor_product_pair(build_alexander("t1"), build_alexander("t0"))
    assert E.dim == 4
    assert check_axioms(E).ok


def test_alexander_difference_is_scalar():
    E = build_catalog_pair("alexander")
    u = E.ctx.var("u")
    I2 = SparseOp.identity(2, 2, E.ctx)
    assert E.R - E.R_inv == I2.scale(u ** -1 - u)


@pytest.mark.parametrize("name,point", [
    ("v1", {"t0": Fraction(3), "t1": Fraction(-2, 7)}),
    ("lambda-1", {"t": Fraction(5, 2), "s": Fraction(-3)}),
])
def test_yang_baxter_dense_oracle(name, point):
    E = build_catalog_pair(name)
    assert dense_ybe_residual(dense(E.R, point), E.dim)


@pytest.mark.parametrize("name", PAIRS)
def test_gradings_preserved(name):
    E = build_catalog_pair(name)
    for g in E.gradings:
        assert check_grading_preserved(E, g)


@pytest.mark.parametrize("r", [1, -1])
def test_v1_enhancement_is_unique(r):
    E = build_v1(r)
    accepted, _ = solve_diagonal_enhancement(E.R, E.R_inv)
    assert len(accepted) == 1
    diag = [x.constant_value() for x in accepted[0].h.diagonal_entries()]
    assert diag == [-1, 1, 1, -1]


def test_v1_at_r2_keeps_yang_baxter():
    E = build_v1(2)
    res = axiom_residuals(E.R, E.R_inv, E.h, which=("inverse", "yang-baxter"))
    assert all(v.is_zero() for v in res.values())


def test_unknown_pair():
    with pytest.raises(KeyError):
        build_catalog_pair("jones")
