"""Enhanced R-matrices: construction, axiom checks and enhancement solving.

An enhanced R-matrix is a pair ``(R, h)`` with ``R`` invertible on ``V⊗V`` and
``h`` invertible on ``V`` satisfying

* ``hh-commute``: ``R∘(h⊗h) = (h⊗h)∘R``
* ``trace``: ``tr_2((id⊗h)∘R^{±1}) = id``
* ``rotation``: ``(R^{-1})^↺ ∘ ((id⊗h)∘R∘(h^{-1}⊗id))^↻ = id``
* ``yang-baxter``: the braid relation on ``V^{⊗3}``.

Residual keys in :func:`axiom_residuals` use these names, plus ``inverse``
and ``trace-inverse`` for the ``R^{-1}`` half of ``trace``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from . import _tables
from .laurent import GaussRational, MultiLaurent, RationalFn, VarContext
from .linsolve import LinearSystem, solve
from .tensorops import (
    SparseOp,
    compose,
    flatten,
    invert,
    partial_trace,
    rot_left,
    rot_right,
    tensor,
)

__all__ = [
    "Grading",
    "EnhancedRMatrix",
    "AxiomReport",
    "EnhancementCandidate",
    "build_alexander",
    "build_v1",
    "build_lambda1",
    "build_lambda_minus1",
    "build_sl3",
    "build_catalog_pair",
    "CATALOG_NAMES",
    "check_axioms",
    "solve_diagonal_enhancement",
    "check_grading_preserved",
    "axiom_residuals",
]


@dataclass(frozen=True)
class Grading:
    """Integer weight vector per basis index (1-based)."""

    label: str
    weights: Mapping[int, tuple[int, ...]]

    def __post_init__(self):
        lens = {len(w) for w in self.weights.values()}
        if len(lens) > 1:
            raise ValueError("weight vectors must all have the same length")

    def weight(self, idx: Sequence[int]) -> tuple[int, ...]:
        vecs = [self.weights[i] for i in idx]
        return tuple(sum(x) for x in zip(*vecs))


@dataclass
class EnhancedRMatrix:
    name: str
    dim: int
    ctx: VarContext
    R: SparseOp
    R_inv: SparseOp
    h: SparseOp
    gradings: list[Grading] = field(default_factory=list)
    valid_enhancement: bool = True
    note: str = ""

    _h_inv: SparseOp | None = field(default=None, repr=False)

    @property
    def h_inv(self) -> SparseOp:
        if self._h_inv is None:
            self._h_inv = invert(self.h)
        return self._h_inv

    def identity(self, arity: int = 1) -> SparseOp:
        return SparseOp.identity(self.dim, arity, self.ctx)

    def with_h(self, h: SparseOp, name: str | None = None) -> "EnhancedRMatrix":
        return EnhancedRMatrix(name or self.name, self.dim, self.ctx, self.R, self.R_inv, h,
                               list(self.gradings), True, self.note)

    def combined_grading(self) -> Grading | None:
        if not self.gradings:
            return None
        w = {i: tuple(x for g in self.gradings for x in g.weights[i]) for i in range(1, self.dim + 1)}
        return Grading("+".join(g.label for g in self.gradings), w)


# --- constructors -------------------------------------------------------------------

def _param_ctx(base: VarContext) -> VarContext:
    return VarContext(base.names + ("r",), base.roots)


def _specialize_r(p: MultiLaurent, ctx: VarContext, r) -> MultiLaurent:
    return p.substitute({"r": MultiLaurent.constant(ctx, r)}, ctx)


def _from_dense(table: Mapping[tuple[int, int], str], ctx: VarContext, r, dim: int = 4) -> SparseOp:
    pctx = _param_ctx(ctx)
    entries = {}
    for (i, j), text in table.items():
        entries[(i - 1, j - 1)] = _specialize_r(pctx.parse(text), ctx, r)
    return SparseOp.from_flat(dim, 2, ctx, entries)


def _from_blocks(blocks, ctx: VarContext, r=1, dim: int = 8) -> SparseOp:
    pctx = _param_ctx(ctx)
    entries = {}
    for labels, prefactor, rows in blocks:
        pre = pctx.parse(prefactor)
        for lab_r, row in zip(labels, rows):
            for lab_c, text in zip(labels, row):
                v = pctx.parse(text)
                if not v:
                    continue
                key = (flatten(lab_r, dim), flatten(lab_c, dim))
                if key in entries:
                    raise ValueError(f"entry {lab_r},{lab_c} listed twice")
                entries[key] = _specialize_r(pre * v, ctx, r)
    return SparseOp.from_flat(dim, 2, ctx, entries)


def _finish(name, dim, ctx, R, h, gradings, valid=True, note="") -> EnhancedRMatrix:
    return EnhancedRMatrix(name, dim, ctx, R, invert(R), h, gradings, valid, note)


def build_alexander(var: str = "t") -> EnhancedRMatrix:
    """The Alexander pair on a 2-dimensional space.

    ``R_t = t^{-1/2} [[1,0,0,0],[0,0,1,0],[0,t,1-t,0],[0,0,0,-t]]`` and
    ``h_t = t^{1/2} diag(1, -1)``.  Internally ``u = t^{1/2}``; pass ``var`` to
    rename ``t`` (e.g. ``"t0"``), in which case the root variable is ``u0``.
    """
    root = "u" + var[1:] if var.startswith("t") else var + "_r"
    ctx = VarContext([root], {root: (var, 2)})
    u = ctx.var(root)
    ui = u ** -1
    t = u * u
    R = SparseOp.from_flat(2, 2, ctx, {
        (0, 0): ui, (1, 2): ui, (2, 1): ui * t, (2, 2): ui * (1 - t), (3, 3): -ui * t,
    })
    h = SparseOp.diagonal(ctx, [u, -u])
    deg = Grading("deg", {1: (0,), 2: (1,)})
    return _finish("alexander" if var == "t" else f"alexander({var})", 2, ctx, R, h, [deg])


V1_GRADINGS = [
    Grading("deg_e2", {1: (0,), 2: (1,), 3: (0,), 4: (1,)}),
    Grading("deg_e3", {1: (0,), 2: (0,), 3: (1,), 4: (1,)}),
]


def v1_context() -> VarContext:
    return VarContext(["t0", "t1"])


def build_v1(r=1) -> EnhancedRMatrix:
    """The V_1 R-matrix with parameter ``r`` and ``h = diag(-1, 1, 1, -1)``.

    Only ``r = ±1`` gives an enhancement; other values produce a pair flagged
    ``valid_enhancement=False`` (the R-matrix still satisfies Yang-Baxter).
    """
    r = GaussRational.coerce(r)
    ctx = v1_context()
    R = _from_dense(_tables.V1_R, ctx, r)
    h = SparseOp.diagonal(ctx, [-1, 1, 1, -1])
    valid = r in (GaussRational(1), GaussRational(-1))
    note = "" if valid else "R-matrix only, no valid enhancement"
    return _finish(f"v1(r={r})", 4, ctx, R, h, list(V1_GRADINGS), valid, note)


LAMBDA1_GRADING = Grading("deg", {1: (0, 0), 2: (0, 1), 3: (1, 0), 4: (1, 1)})


def build_lambda1() -> EnhancedRMatrix:
    """``R~ = (t0 t1)^{-1/2} R_{Λ1}`` (parameter ``r = 1``) with ``h = (t0 t1)^{1/2} diag(1,-1,-1,1)``."""
    ctx = VarContext(["u0", "u1"], {"u0": ("t0", 2), "u1": ("t1", 2)})
    R = _from_dense(_tables.LAMBDA1_R, ctx, 1)
    s = ctx.var("u0") * ctx.var("u1")
    R = R.scale(s ** -1)
    h = SparseOp.diagonal(ctx, [s, -s, -s, s])
    return _finish("lambda1", 4, ctx, R, h, [LAMBDA1_GRADING])


WEIGHTS_A2 = {1: (0, 0), 2: (1, 0), 3: (0, 1), 4: (1, 1), 5: (1, 1), 6: (2, 1), 7: (1, 2), 8: (2, 2)}
A2_GRADING = Grading("wt", WEIGHTS_A2)
_SIGNS8 = [1, -1, -1, 1, 1, -1, -1, 1]


def lambda_minus1_context() -> VarContext:
    return VarContext(["t", "s"])


def build_lambda_minus1(r=1) -> EnhancedRMatrix:
    """``R~ = (st)^{-1} R_{Λ-1}`` with ``h = st·diag(1,-1,-1,1,1,-1,-1,1)``."""
    r = GaussRational.coerce(r)
    if r not in (GaussRational(1), GaussRational(-1)):
        raise ValueError("r must be 1 or -1")
    ctx = lambda_minus1_context()
    st = ctx.var("s") * ctx.var("t")
    R = _from_blocks(_tables.LAMBDA_M1_BLOCKS, ctx, r).scale(st ** -1)
    h = SparseOp.diagonal(ctx, [st * c for c in _SIGNS8])
    name = "lambda-1" if r == 1 else "lambda-1(r=-1)"
    return _finish(name, 8, ctx, R, h, [A2_GRADING])


def sl3_context() -> VarContext:
    return VarContext(["t1", "t2"])


def build_sl3() -> EnhancedRMatrix:
    """The sl_3 pair at a fourth root of unity, ``h = t1^-2 t2^-2 diag(1,-1,-1,1,1,-1,-1,1)``."""
    ctx = sl3_context()
    R = _from_blocks(_tables.SL3_BLOCKS, ctx)
    c = ctx.parse("t1^-2*t2^-2")
    h = SparseOp.diagonal(ctx, [c * s for s in _SIGNS8])
    return _finish("sl3", 8, ctx, R, h, [A2_GRADING])


CATALOG_NAMES = ("alexander", "v1", "lambda1", "lambda-1", "sl3")


def build_catalog_pair(name: str) -> EnhancedRMatrix:
    builders = {
        "alexander": build_alexander,
        "v1": build_v1,
        "v1(r=-1)": lambda: build_v1(-1),
        "lambda1": build_lambda1,
        "lambda-1": build_lambda_minus1,
        "sl3": build_sl3,
    }
    if name not in builders:
        raise KeyError(f"unknown R-matrix {name!r}; choose from {sorted(builders)}")
    return _cached(name, builders[name])


_CACHE: dict[str, EnhancedRMatrix] = {}


def _cached(name, builder):
    E = _CACHE.get(name)
    if E is None:
        E = _CACHE[name] = builder()
    return E


# --- axioms -----------------------------------------------------------------------

@dataclass
class AxiomReport:
    name: str
    residuals: dict[str, SparseOp]

    @property
    def passed(self) -> dict[str, bool]:
        return {k: v.is_zero() for k, v in self.residuals.items()}

    @property
    def ok(self) -> bool:
        return all(self.passed.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.passed.items() if not v]

    def summary(self) -> str:
        parts = []
        for k, v in self.residuals.items():
            parts.append(f"{k}: {'pass' if v.is_zero() else 'FAIL ' + v.residual_summary()}")
        return f"{self.name}: " + ", ".join(parts)


def _ybe_residual(R: SparseOp) -> SparseOp:
    I = SparseOp.identity(R.dim, 1, R.ctx)
    A = tensor(R, I)
    B = tensor(I, R)
    return compose(compose(A, B), A) - compose(compose(B, A), B)


def axiom_residuals(R: SparseOp, R_inv: SparseOp, h: SparseOp, h_inv: SparseOp | None = None,
                    which: Sequence[str] = ("inverse", "hh-commute", "trace", "trace-inverse", "rotation", "yang-baxter")) -> dict[str, SparseOp]:
    """Residual operators (zero means the axiom holds) for the listed checks."""
    d = R.dim
    I1 = SparseOp.identity(d, 1, R.ctx)
    I2 = SparseOp.identity(d, 2, R.ctx)
    out = {}
    if h_inv is None:
        h_inv = invert(h)
    id_h = tensor(I1, h)
    if "inverse" in which:
        out["inverse"] = compose(R, R_inv) - I2
    if "hh-commute" in which:
        hh = tensor(h, h)
        out["hh-commute"] = compose(R, hh) - compose(hh, R)
    if "trace" in which:
        out["trace"] = partial_trace(compose(id_h, R), 2) - I1
    if "trace-inverse" in which:
        out["trace-inverse"] = partial_trace(compose(id_h, R_inv), 2) - I1
    if "rotation" in which:
        inner = compose(compose(id_h, R), tensor(h_inv, I1))
        out["rotation"] = compose(rot_left(R_inv), rot_right(inner)) - I2
    if "yang-baxter" in which:
        out["yang-baxter"] = _ybe_residual(R)
    return out


def check_axioms(E: EnhancedRMatrix) -> AxiomReport:
    return AxiomReport(E.name, axiom_residuals(E.R, E.R_inv, E.h, E.h_inv))


# --- diagonal enhancements ----------------------------------------------------------

@dataclass
class EnhancementCandidate:
    h: SparseOp | None
    free_parameters: int
    report: dict[str, SparseOp]
    solution: object = None

    @property
    def ok(self) -> bool:
        return self.h is not None and all(v.is_zero() for v in self.report.values())


def solve_diagonal_enhancement(R: SparseOp, R_inv: SparseOp) -> tuple[list[EnhancementCandidate], list[EnhancementCandidate]]:
    """Diagonal ``h`` solving the trace axiom for ``R`` and ``R^{-1}``, filtered by the others.

    Returns ``(accepted, rejected)``.  The trace equations are linear in the
    diagonal entries: ``sum_j h_j R[(i,j),(k,j)] = δ_ik``.
    """
    d = R.dim
    ctx = R.ctx
    names = [f"h{j}" for j in range(1, d + 1)]
    rows, rhs = [], []
    for M in (R, R_inv):
        for i in range(d):
            for k in range(d):
                row = {}
                for j in range(d):
                    v = M.get(i * d + j, k * d + j)
                    if v:
                        row[j] = v
                if row or i == k:
                    rows.append(row)
                    rhs.append(MultiLaurent.constant(ctx, 1 if i == k else 0))
    system = LinearSystem(ctx, names, rows, rhs, label="trace axiom on diag(h)")
    try:
        sol = solve(system)
    except ValueError:
        return [], []
    if sol.nullity:
        # a family; nothing to filter without choosing parameters
        return [], [EnhancementCandidate(None, sol.nullity, {}, sol)]
    diag = []
    for j in range(d):
        const, _ = sol.expressions[j]
        if not const.is_laurent():
            return [], [EnhancementCandidate(None, 0, {}, sol)]
        diag.append(const.to_laurent())
    if any(not x for x in diag):
        return [], [EnhancementCandidate(None, 0, {}, sol)]
    h = SparseOp.diagonal(ctx, diag)
    rep = axiom_residuals(R, R_inv, h, which=("hh-commute", "rotation"))
    cand = EnhancementCandidate(h, 0, rep, sol)
    return ([cand], []) if cand.ok else ([], [cand])


# --- gradings -----------------------------------------------------------------------

def grading_violations(op: SparseOp, g: Grading) -> list[tuple]:
    bad = []
    for row, col, _ in op.items():
        if g.weight(row) != g.weight(col):
            bad.append((row, col))
    return bad


def check_grading_preserved(E: EnhancedRMatrix, g: Grading) -> bool:
    return not grading_violations(E.R, g) and not grading_violations(E.R_inv, g)


def same_support(a: SparseOp, b: SparseOp) -> bool:
    return a.support() == b.support()
