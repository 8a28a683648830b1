"""Named link polynomials and the product/identification checks between them."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .braidrep import BraidWord, closure_mrt, component_count
from .laurent import MultiLaurent, VarContext
from .rmatrices import (
    EnhancedRMatrix,
    build_alexander,
    build_catalog_pair,
    check_axioms,
)
from .tensorops import SparseOp

__all__ = [
    "InvariantValue",
    "ComparisonReport",
    "SkeinTriple",
    "INVARIANTS",
    "compute",
    "alexander",
    "v1",
    "lambda1",
    "lambda_minus1",
    "delta_sl3",
    "merge_contexts",
    "lift",
    "tensor_product_pair",
    "check_theorem2_lambda1",
    "check_theorem2_lambda_minus1",
    "skein_triple",
    "non_integral_monomials",
]


@dataclass
class InvariantValue:
    name: str
    value: MultiLaurent
    braid: BraidWord
    components: int

    def __str__(self):
        return self.value.to_string(display=True)


INVARIANTS = {
    "alexander": "alexander",
    "v1": "v1",
    "lambda1": "lambda1",
    "lambda-1": "lambda-1",
    "sl3": "sl3",
}


def _value(pair: str | EnhancedRMatrix, beta: BraidWord, name: str | None = None) -> InvariantValue:
    E = build_catalog_pair(pair) if isinstance(pair, str) else pair
    res = closure_mrt(E, beta)
    return InvariantValue(name or E.name, res.scalar, beta, res.components)


def compute(name: str, beta: BraidWord) -> InvariantValue:
    aliases = {"delta_sl3": "sl3", "lambda_minus1": "lambda-1", "lambda-1": "lambda-1"}
    key = aliases.get(name, name)
    if key not in INVARIANTS:
        raise KeyError(f"unknown invariant {name!r}; choose from {sorted(INVARIANTS)}")
    return _value(key, beta, key)


def alexander(beta: BraidWord) -> InvariantValue:
    return _value("alexander", beta)


def v1(beta: BraidWord) -> InvariantValue:
    return _value("v1", beta)


def lambda1(beta: BraidWord) -> InvariantValue:
    return _value("lambda1", beta)


def lambda_minus1(beta: BraidWord) -> InvariantValue:
    return _value("lambda-1", beta)


def delta_sl3(beta: BraidWord) -> InvariantValue:
    return _value("sl3", beta)


# --- contexts --------------------------------------------------------------------------

def merge_contexts(*ctxs: VarContext) -> VarContext:
    names: list[str] = []
    roots: dict = {}
    for c in ctxs:
        for n in c.names:
            if n in names:
                if c.roots.get(n) != roots.get(n):
                    raise ValueError(f"variable {n!r} has conflicting root data")
                continue
            names.append(n)
            if n in c.roots:
                roots[n] = c.roots[n]
    return VarContext(names, roots)


def lift(x, ctx: VarContext):
    """Carry a polynomial or operator into a larger context, variables matched by name."""
    if x.ctx == ctx:
        return x
    return x.substitute({}, ctx)


# --- tensor product of enhanced pairs -------------------------------------------------

def tensor_product_pair(E1: EnhancedRMatrix, E2: EnhancedRMatrix, ctx: VarContext | None = None,
                        verify: bool = True) -> EnhancedRMatrix:
    """``τ(R⊗R')τ`` on ``(V⊗W)^{⊗2}`` with ``h = h⊗h'``.

    The basis vector ``v_i⊗w_k`` of ``V⊗W`` gets index ``(i-1)·dim W + k``.
    """
    ctx = ctx or merge_contexts(E1.ctx, E2.ctx)
    d1, d2 = E1.dim, E2.dim
    d = d1 * d2

    def combined(A: SparseOp, B: SparseOp) -> dict:
        A, B = lift(A, ctx), lift(B, ctx)
        out = {}
        for (r1, c1), a in A.items_flat():
            p, q = divmod(r1, d1)
            i, j = divmod(c1, d1)
            for (r2, c2), b in B.items_flat():
                pp, qq = divmod(r2, d2)
                k, l = divmod(c2, d2)
                row = (p * d2 + pp) * d + (q * d2 + qq)
                col = (i * d2 + k) * d + (j * d2 + l)
                out[(row, col)] = a * b
        return out

    R = SparseOp.from_flat(d, 2, ctx, combined(E1.R, E2.R))
    R_inv = SparseOp.from_flat(d, 2, ctx, combined(E1.R_inv, E2.R_inv))
    h1, h2 = lift(E1.h, ctx), lift(E2.h, ctx)
    hv = {}
    for (r1, c1), a in h1.items_flat():
        for (r2, c2), b in h2.items_flat():
            hv[(r1 * d2 + r2, c1 * d2 + c2)] = a * b
    h = SparseOp.from_flat(d, 1, ctx, hv)
    gradings = []
    E = EnhancedRMatrix(f"{E1.name}⊗{E2.name}", d, ctx, R, R_inv, h, gradings)
    if verify:
        rep = check_axioms(E)
        if not rep.ok:
            raise AssertionError(f"tensor product pair fails {rep.failures()}")
    return E


# --- identification checks --------------------------------------------------------------

@dataclass
class ComparisonReport:
    label: str
    braid: BraidWord
    lhs: MultiLaurent
    rhs: MultiLaurent
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def __str__(self):
        status = "pass" if self.ok else "FAIL"
        return (f"{self.label} [{self.braid}] {status}: "
                f"{self.lhs.to_string(True)}  vs  {self.rhs.to_string(True)}")


def _alexander_in(var: str, beta: BraidWord) -> MultiLaurent:
    return closure_mrt(_alex_cache(var), beta).scalar


_ALEX: dict = {}


def _alex_cache(var):
    if var not in _ALEX:
        _ALEX[var] = build_alexander(var)
    return _ALEX[var]


def check_theorem2_lambda1(beta: BraidWord) -> ComparisonReport:
    """``Λ1(t0, t1) = Δ(t0)·Δ(t1)``."""
    lam = lambda1(beta).value
    ctx = lam.ctx
    prod = lift(_alexander_in("t0", beta), ctx) * lift(_alexander_in("t1", beta), ctx)
    return ComparisonReport("Lambda1 = Delta(t0) Delta(t1)", beta, lam, prod)


def check_theorem2_lambda_minus1(beta: BraidWord, swapped: bool = False) -> ComparisonReport:
    """``Λ-1(t, s)`` at ``t = t1^-2, s = t2^-2`` against ``Δ_sl3(t1, t2)``.

    ``swapped=True`` uses ``t = t2^-2, s = t1^-2`` instead, the pairing under
    which the R-matrices themselves are conjugate; both are reported.
    """
    lam = lambda_minus1(beta).value
    sl3 = delta_sl3(beta).value
    ctx = sl3.ctx
    a, b = ("t2", "t1") if swapped else ("t1", "t2")
    sub = lam.substitute({"t": ctx.var(a) ** -2, "s": ctx.var(b) ** -2}, ctx)
    label = "Lambda-1(t2^-2, t1^-2) = Delta_sl3" if swapped else "Lambda-1(t1^-2, t2^-2) = Delta_sl3"
    return ComparisonReport(label, beta, sub, sl3, {"lambda-1": lam})


@dataclass
class SkeinTriple:
    plus: MultiLaurent
    minus: MultiLaurent
    zero: MultiLaurent
    residual: MultiLaurent

    @property
    def ok(self) -> bool:
        return self.residual.is_zero()


def skein_triple(beta: BraidWord, position: int, E: EnhancedRMatrix | None = None) -> SkeinTriple:
    """Closures of ``β·σ_i``, ``β·σ_i^{-1}`` and ``β``, with the Alexander skein residual."""
    if not 1 <= position <= beta.strands - 1:
        raise ValueError(f"position {position} out of range for {beta.strands} strands")
    E = E or build_catalog_pair("alexander")
    plus = closure_mrt(E, BraidWord(beta.strands, beta.letters + (position,))).scalar
    minus = closure_mrt(E, BraidWord(beta.strands, beta.letters + (-position,))).scalar
    zero = closure_mrt(E, beta).scalar
    ctx = E.ctx
    root, _ = ctx.resolve(ctx.roots[ctx.names[0]][0]) if ctx.roots else (ctx.names[0], 1)
    u = ctx.var(root)
    residual = plus - minus - (u ** -1 - u) * zero
    return SkeinTriple(plus, minus, zero, residual)


def non_integral_monomials(p: MultiLaurent, step: dict[str, int] | None = None) -> list[str]:
    """Monomials of ``p`` outside ``Z[x^{±step}]`` for the display variables.

    ``step`` maps display names to the required exponent step (default 1).
    """
    step = step or {}
    bad = []
    ctx = p.ctx
    for exps, c in p.terms().items():
        ok = c.im == 0 and Fraction(c.re).denominator == 1
        for name, e in zip(ctx.names, exps):
            disp, deg = ctx.display_name(name)
            q = Fraction(e, deg)
            if q.denominator != 1 or q.numerator % step.get(disp, 1):
                ok = False
        if not ok:
            bad.append(MultiLaurent.from_terms(ctx, {exps: c}).to_string(True))
    return bad
