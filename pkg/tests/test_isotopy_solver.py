import pytest

from knotpoly import _reference as ref
from knotpoly.braidrep import BraidWord, rho
from knotpoly.isotopy_solver import (
    build_P1_system,
    build_P2_system,
    compare_alexander_reference,
    compare_v1_closures,
    compare_v1_reference,
    graded_ansatz,
    named_ansatz,
    rank,
    solve_and_verify,
    system_residual,
    v1_reference_violations,
)
from knotpoly.rmatrices import build_catalog_pair


def _setup(name, layout):
    E = build_catalog_pair(name)
    A = named_ansatz(graded_ansatz(E), layout)
    return E, A, build_P2_system(E, A)


@pytest.fixture(scope="module")
def alexander():
    E, A, S = _setup("alexander", ref.ALEXANDER_LAYOUT)
    return E, A, S, solve_and_verify(E, S, A, ref.ALEXANDER_FREE)


@pytest.fixture(scope="module")
def v1():
    E, A, S = _setup("v1", ref.V1_LAYOUT)
    return E, A, S, solve_and_verify(E, S, A, ref.V1_FREE)


def test_alexander_ansatz_size(alexander):
    _, A, _, _ = alexander
    assert len(A.parameters) == 6
    assert sorted(A.parameters) == sorted(ref.ALEXANDER_LAYOUT)


def test_alexander_solution_space(alexander):
    _, _, S, sol = alexander
    rk = rank(S)
    assert (rk.rank, rk.nullity) == (4, 2)
    assert rk.agree
    assert sorted(sol.free) == ["b", "c"]


def test_alexander_closed_form(alexander):
    _, _, _, sol = alexander
    assert compare_alexander_reference(sol) == []
    assert sol.closures_equal and sol.closures_scalar


def test_v1_ansatz_size(v1):
    _, A, _, _ = v1
    assert len(A.parameters) == 36


def test_v1_solution_space(v1):
    _, _, S, sol = v1
    rk = rank(S)
    assert (rk.rank, rk.nullity) == (33, 3)
    assert rk.agree
    assert sorted(sol.free) == sorted(ref.V1_FREE)


def test_v1_closures(v1):
    _, _, _, sol = v1
    assert sol.closures_equal
    assert compare_v1_closures(sol) == []


def test_v1_printed_triples_differ_only_in_h_and_w(v1):
    _, _, _, sol = v1
    matched, bad = compare_v1_reference(sol)
    assert matched == 31
    assert sorted(b.name for b in bad) == ["h", "w"]


def test_v1_printed_h_and_w_violate_the_system(v1):
    _, A, S, _ = v1
    assert v1_reference_violations(S, A)
    assert v1_reference_violations(S, A, {**ref.V1_SOLUTION, **ref.V1_CORRECTED}) == []


def test_v1_corrected_triples_match_solution(v1):
    _, _, _, sol = v1
    from knotpoly.laurent import parse_rational

    ctx = sol.solution.expressions[0][0].ctx
    for name, triple in ref.V1_CORRECTED.items():
        for f, text in zip(ref.V1_FREE, triple):
            assert sol.coefficient(name, f) == parse_rational(text, ctx)


def test_v1_other_sign():
    E, A, S = _setup("v1(r=-1)", ref.V1_LAYOUT)
    rk = rank(S)
    assert (rk.rank, rk.nullity) == (33, 3)
    sol = solve_and_verify(E, S, A, ref.V1_FREE)
    assert sol.closures_equal and sol.closures_scalar


@pytest.mark.parametrize("name", ["alexander", "v1", "lambda1"])
def test_P1_solutions_are_scalars(name):
    E = build_catalog_pair(name)
    rk = rank(build_P1_system(E, graded_ansatz(E, arity=1)))
    assert rk.nullity == 1


@pytest.mark.parametrize("name,layout", [("alexander", ref.ALEXANDER_LAYOUT), ("v1", ref.V1_LAYOUT)])
def test_braid_operators_lie_in_solution_space(name, layout):
    E, A, S = _setup(name, layout)
    for beta in (BraidWord(2, (1,)), BraidWord(2, (1, -1, 1, 1))):
        F = rho(E, beta)
        values = {}
        for (r, c), v in F.items_flat():
            assert (r, c) in A.positions
            values[A.positions.index((r, c))] = v
        assert system_residual(S, values) == []
