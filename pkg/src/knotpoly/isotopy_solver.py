"""Linear systems behind properties (P1) and (P2).

A tangle operator that preserves a grading can only be nonzero in slots
connecting basis vectors of equal weight.  Writing the operator with one
unknown per such slot, the isotopy relations become homogeneous linear
equations.  This module builds those systems, computes their rank exactly (with
a numerical cross-check), solves them, and closes the general solution on both
sides.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from . import _reference
from .laurent import MultiLaurent, RationalFn, VarContext, _addmul, _prune, parse_rational
from .linsolve import LinearSystem, Solution, echelon, numeric_rank, random_point, solve
from .rmatrices import EnhancedRMatrix, Grading
from .tensorops import SparseOp, compose, flatten, tensor, unflatten

__all__ = [
    "RationalFn",
    "LinearSystem",
    "GradedAnsatz",
    "RankReport",
    "IsotopySolution",
    "graded_ansatz",
    "named_ansatz",
    "build_P1_system",
    "build_P2_system",
    "rank",
    "solve_and_verify",
    "system_residual",
    "compare_alexander_reference",
    "compare_v1_reference",
    "compare_v1_closures",
    "v1_reference_violations",
]


@dataclass
class GradedAnsatz:
    dim: int
    arity: int
    positions: list[tuple[int, int]]      # flat (row, col), 0-based
    parameters: list[str]

    def __len__(self):
        return len(self.positions)

    def multi_positions(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        return [(unflatten(r, self.dim, self.arity), unflatten(c, self.dim, self.arity))
                for r, c in self.positions]

    def index(self, name: str) -> int:
        return self.parameters.index(name)


def graded_ansatz(E: EnhancedRMatrix, grading: Grading | None = None, arity: int = 2) -> GradedAnsatz:
    """All slots ``(row, col)`` of ``V^{⊗arity}`` whose basis vectors have equal total weight."""
    g = grading or E.combined_grading()
    if g is None:
        raise ValueError(f"{E.name} has no grading registered")
    idx = list(product(range(1, E.dim + 1), repeat=arity))
    weights = [g.weight(m) for m in idx]
    positions = [(r, c) for r in range(len(idx)) for c in range(len(idx)) if weights[r] == weights[c]]
    names = [f"x{k + 1}" for k in range(len(positions))]
    return GradedAnsatz(E.dim, arity, positions, names)


def named_ansatz(ansatz: GradedAnsatz, layout: Mapping[str, tuple[int, int]]) -> GradedAnsatz:
    """Rename parameters from a ``{name: (row, col)}`` layout (1-based flat indices)."""
    by_pos = {(r - 1, c - 1): name for name, (r, c) in layout.items()}
    if set(by_pos) != set(ansatz.positions):
        raise ValueError("layout does not match the graded ansatz positions")
    return GradedAnsatz(ansatz.dim, ansatz.arity, list(ansatz.positions),
                        [by_pos[p] for p in ansatz.positions])


# --- systems -------------------------------------------------------------------------------

class _Rows:
    def __init__(self, ctx: VarContext):
        self.ctx = ctx
        self.rows: dict = {}

    def add(self, key, param: int, raw: dict, sign: int = 1):
        row = self.rows.get(key)
        if row is None:
            row = self.rows[key] = {}
        slot = row.get(param)
        if slot is None:
            slot = row[param] = {}
        _addmul(slot, raw, {0: sign})

    def finish(self) -> list[dict[int, MultiLaurent]]:
        out = []
        for key in sorted(self.rows):
            row = {}
            for p, v in self.rows[key].items():
                v = _prune(v)
                if v:
                    row[p] = MultiLaurent(self.ctx, v)
            if row:
                out.append(row)
        return out


def _by_row(op: SparseOp) -> dict[int, list]:
    out: dict = {}
    for (r, c), v in op._e.items():
        out.setdefault(r, []).append((c, v))
    return out


def _by_col(op: SparseOp) -> dict[int, list]:
    out: dict = {}
    for (r, c), v in op._e.items():
        out.setdefault(c, []).append((r, v))
    return out


def _commutator_rows(rows: _Rows, tag, A: SparseOp, ansatz: GradedAnsatz):
    """Rows of ``A∘F - F∘A`` for ``F = sum x_p e_{a_p b_p}``."""
    cols, rws = _by_col(A), _by_row(A)
    for p, (a, b) in enumerate(ansatz.positions):
        for r, v in cols.get(a, ()):
            rows.add((tag, r, b), p, v)
        for c, v in rws.get(b, ()):
            rows.add((tag, a, c), p, v, -1)


def _slide_rows(rows: _Rows, tag, B: SparseOp, ansatz: GradedAnsatz, d: int):
    """Rows of ``B∘(F⊗id) - (id⊗F)∘B`` with ``F`` of arity ``B.arity - 1``."""
    cols, rws = _by_col(B), _by_row(B)
    w = d ** ansatz.arity
    for p, (a, b) in enumerate(ansatz.positions):
        for k in range(d):
            for r, v in cols.get(a * d + k, ()):
                rows.add((tag, r, b * d + k), p, v)
        for j in range(d):
            for c, v in rws.get(j * w + b, ()):
                rows.add((tag, j * w + a, c), p, v, -1)


def build_P1_system(E: EnhancedRMatrix, ansatz: GradedAnsatz) -> LinearSystem:
    """``(id⊗F)∘R = R∘(F⊗id)`` for an arity-1 ansatz ``F``."""
    if ansatz.arity != 1:
        raise ValueError("(P1) needs an arity-1 ansatz")
    rows = _Rows(E.ctx)
    _slide_rows(rows, "slide", E.R, ansatz, E.dim)
    return LinearSystem(E.ctx, list(ansatz.parameters), rows.finish(), label=f"P1 {E.name}")


def build_P2_system(E: EnhancedRMatrix, ansatz: GradedAnsatz) -> LinearSystem:
    """``R²∘F = F∘R²`` and ``(R⊗id)(id⊗R)(F⊗id) = (id⊗F)(R⊗id)(id⊗R)``."""
    if ansatz.arity != 2:
        raise ValueError("(P2) needs an arity-2 ansatz")
    rows = _Rows(E.ctx)
    _commutator_rows(rows, "R2", compose(E.R, E.R), ansatz)
    I = E.identity()
    B = compose(tensor(E.R, I), tensor(I, E.R))
    _slide_rows(rows, "slide", B, ansatz, E.dim)
    return LinearSystem(E.ctx, list(ansatz.parameters), rows.finish(), label=f"P2 {E.name}")


def system_residual(sys: LinearSystem, values: Mapping[int, MultiLaurent]) -> list[int]:
    """Indices of rows not satisfied by ``values`` (unknown index -> value)."""
    bad = []
    zero = MultiLaurent(sys.ctx, {})
    for n, row in enumerate(sys.rows):
        acc = zero
        for c, v in row.items():
            x = values.get(c)
            if x is not None:
                acc = acc + v * x
        if acc:
            bad.append(n)
    return bad


# --- rank ------------------------------------------------------------------------------------

@dataclass
class RankReport:
    rank: int
    nullity: int
    numeric: list[int]
    method: str = "fraction-free elimination over the Laurent ring"

    @property
    def agree(self) -> bool:
        return all(r == self.rank for r in self.numeric)

    def __str__(self):
        return (f"rank {self.rank}, nullity {self.nullity} ({self.method}); "
                f"numeric ranks {self.numeric}")


def rank(sys: LinearSystem, samples: int = 3, seed: int = 0) -> RankReport:
    n = sys.ncols
    if not sys.rows:
        return RankReport(0, n, [0] * samples)
    ech = echelon(sys.rows, n)
    rng = random.Random(seed)
    pivots = [row[c] for c, row in ech.pivots]
    numeric = []
    for _ in range(samples):
        point = random_point(sys.ctx, rng, pivots)
        numeric.append(numeric_rank(sys.rows, n, point))
    return RankReport(ech.rank, n - ech.rank, numeric)


# --- solving and closing -----------------------------------------------------------------------

@dataclass
class IsotopySolution:
    ansatz: GradedAnsatz
    solution: Solution
    left: dict[str, list[list[RationalFn]]] = field(default_factory=dict)
    right: dict[str, list[list[RationalFn]]] = field(default_factory=dict)

    @property
    def free(self) -> list[str]:
        return [self.ansatz.parameters[f] for f in self.solution.free]

    def coefficient(self, name: str, free_name: str) -> RationalFn:
        return self.solution.coefficient(self.ansatz.index(name), self.ansatz.index(free_name))

    @property
    def closures_equal(self) -> bool:
        return all(_mat_eq(self.left[f], self.right[f]) for f in self.left)

    @property
    def closures_scalar(self) -> bool:
        def scalar(m):
            n = len(m)
            return all(m[i][j].is_zero() for i in range(n) for j in range(n) if i != j) and \
                all(m[i][i] == m[0][0] for i in range(n))
        return all(scalar(self.left[f]) and scalar(self.right[f]) for f in self.left)


def _mat_eq(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def solve_and_verify(E: EnhancedRMatrix, sys: LinearSystem, ansatz: GradedAnsatz,
                     free: Sequence[str] = ()) -> IsotopySolution:
    """Parametric solution (preferring ``free`` as free parameters) plus both closures.

    For every free parameter ``f`` the closures of the corresponding basis
    solution are stored as ``left[f]`` = ``tr_2((id⊗h)∘F)`` and ``right[f]`` =
    ``tr_1(F∘(h^{-1}⊗id))``.
    """
    if ansatz.arity != 2:
        raise ValueError("closures need an arity-2 ansatz")
    if not E.h.is_diagonal():
        raise ValueError("closure formulas here assume a diagonal enhancement")
    sol = solve(sys, free_last=[ansatz.index(f) for f in free])
    out = IsotopySolution(ansatz, sol)
    d = E.dim
    h = [RationalFn(x) for x in E.h.diagonal_entries()]
    h_inv = [RationalFn(x.unit_inverse()) for x in E.h.diagonal_entries()]
    zero = RationalFn(MultiLaurent(E.ctx, {}))
    for f in sol.free:
        left = [[zero] * d for _ in range(d)]
        right = [[zero] * d for _ in range(d)]
        for p, (r, c) in enumerate(ansatz.positions):
            coeff = sol.coefficient(p, f)
            if coeff.is_zero():
                continue
            i, j = divmod(r, d)
            k, l = divmod(c, d)
            if j == l:
                left[i][k] = left[i][k] + h[j] * coeff
            if i == k:
                right[j][l] = right[j][l] + coeff * h_inv[i]
        name = ansatz.parameters[f]
        out.left[name] = left
        out.right[name] = right
    return out


# --- comparison with the printed closed forms --------------------------------------------------

_PLACEHOLDER = re.compile(r"\b([A-Za-z])\b")


def _with_params(ctx: VarContext, free: Sequence[str]) -> tuple[VarContext, dict[str, str]]:
    alias = {f: f"X{k + 1}" for k, f in enumerate(free)}
    return VarContext(ctx.names + tuple(alias.values()), ctx.roots), alias


def _parse_ref(text: str, ctx: VarContext, alias: Mapping[str, str] = {}) -> RationalFn:
    text = _PLACEHOLDER.sub(lambda m: alias.get(m.group(1), m.group(1)), text)
    return parse_rational(text, ctx)


def _combination(sol: IsotopySolution, name: str, big: VarContext, alias) -> RationalFn:
    out = RationalFn(MultiLaurent(big, {}))
    for f in sol.free:
        c = sol.coefficient(name, f)
        out = out + c.substitute({}, big) * RationalFn(big.var(alias[f]))
    return out


@dataclass
class ReferenceMismatch:
    name: str
    expected: str
    computed: str


def compare_alexander_reference(sol: IsotopySolution) -> list[ReferenceMismatch]:
    ctx = sol.solution.expressions[0][0].ctx
    big, alias = _with_params(ctx, _reference.ALEXANDER_FREE)
    bad = []
    if sorted(sol.free) != sorted(_reference.ALEXANDER_FREE):
        bad.append(ReferenceMismatch("free parameters", str(_reference.ALEXANDER_FREE), str(sol.free)))
        return bad
    for name, text in _reference.ALEXANDER_SOLUTION.items():
        want = _parse_ref(text, big, alias)
        got = _combination(sol, name, big, alias)
        if want != got:
            bad.append(ReferenceMismatch(name, str(want), str(got)))
    want = _parse_ref(_reference.ALEXANDER_CLOSURE, big, alias)
    for side in ("left", "right"):
        mats = getattr(sol, side)
        for i in range(2):
            got = RationalFn(MultiLaurent(big, {}))
            for f in sol.free:
                got = got + mats[f][i][i].substitute({}, big) * RationalFn(big.var(alias[f]))
            if got != want:
                bad.append(ReferenceMismatch(f"{side} closure [{i + 1},{i + 1}]", str(want), str(got)))
    return bad


def compare_v1_reference(sol: IsotopySolution) -> tuple[int, list[ReferenceMismatch]]:
    """Check every printed ``(E, i, p)`` triple; returns (number matched, mismatches)."""
    ctx = sol.solution.expressions[0][0].ctx
    free = _reference.V1_FREE
    if sorted(sol.free) != sorted(free):
        return 0, [ReferenceMismatch("free parameters", str(free), str(sol.free))]
    bad = []
    matched = 0
    for name, triple in _reference.V1_SOLUTION.items():
        ok = True
        got_parts = []
        for f, text in zip(free, triple):
            want = parse_rational(text, ctx)
            got = sol.coefficient(name, f)
            got_parts.append(str(got))
            ok = ok and want == got
        if ok:
            matched += 1
        else:
            bad.append(ReferenceMismatch(name, str(triple), str(tuple(got_parts))))
    return matched, bad


def compare_v1_closures(sol: IsotopySolution) -> list[ReferenceMismatch]:
    """Left closure against diag(x1..x4), right closure against diag(x4, x2, x3, x1)."""
    ctx = sol.solution.expressions[0][0].ctx
    big, alias = _with_params(ctx, _reference.V1_FREE)
    xs = [_parse_ref(_reference.V1_CLOSURES[f"x{k}"], big, alias) for k in range(1, 5)]
    targets = {"left": xs, "right": [xs[3], xs[1], xs[2], xs[0]]}
    zero = RationalFn(MultiLaurent(big, {}))
    bad = []
    for side, diag in targets.items():
        mats = getattr(sol, side)
        for i in range(4):
            for j in range(4):
                got = zero
                for f in sol.free:
                    got = got + mats[f][i][j].substitute({}, big) * RationalFn(big.var(alias[f]))
                want = diag[i] if i == j else zero
                if got != want:
                    bad.append(ReferenceMismatch(f"{side}[{i + 1},{j + 1}]", str(want), str(got)))
    return bad


def v1_reference_violations(sys: LinearSystem, ansatz: GradedAnsatz,
                            triples: Mapping[str, tuple[str, str, str]] | None = None,
                            seed: int = 0) -> list[int]:
    """Rows of the V1 system violated by printed-style triples, at a random rational point.

    Every named entry is set to ``E·a + i·b + p·c`` for the triple ``(a, b, c)``
    and random values of ``E, i, p``. An empty list means the triples are
    consistent with the system (generically).
    """
    triples = _reference.V1_SOLUTION if triples is None else triples
    rng = random.Random(seed)
    ctx = sys.ctx
    point = {}
    for n in ctx.names:
        x = Fraction(1)
        while x in (0, 1, -1):
            x = Fraction(rng.randint(-40, 40), rng.randint(1, 7))
        point[n] = x
    params = {f: Fraction(rng.randint(-20, 20)) for f in _reference.V1_FREE}
    values = {ansatz.index(f): v for f, v in params.items()}
    for name, triple in triples.items():
        values[ansatz.index(name)] = sum(
            parse_rational(text, ctx).eval(point) * params[f]
            for f, text in zip(_reference.V1_FREE, triple))
    bad = []
    for n, row in enumerate(sys.rows):
        acc = sum(v.eval(point) * values[c] for c, v in row.items() if c in values)
        if acc != 0:
            bad.append(n)
    return bad
