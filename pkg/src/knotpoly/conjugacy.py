"""Conjugacy and weak conjugacy of enhanced R-matrices.

Two identifications are checked here:

* ``Λ1`` against the tensor product of two Alexander pairs, through the basis
  map ``θ(y_a⊗y_b) = x_{2a+b+1}`` and the swap of the middle tensor factors;
* ``Λ-1`` against ``sl3`` through the diagonal intertwiners ``φ_n`` built from
  ``σ``, ``ν`` and ``γ``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .braidrep import BraidWord, closure_mrt, random_braid, rho
from .invariants import lift, tensor_product_pair
from .laurent import GaussRational, MultiLaurent, VarContext
from .rmatrices import (
    WEIGHTS_A2,
    EnhancedRMatrix,
    build_alexander,
    build_catalog_pair,
    build_lambda_minus1,
    check_axioms,
)
from .tensorops import (
    SparseOp,
    compose,
    embed_two_site,
    invert,
    partial_trace,
    tensor,
)

__all__ = [
    "CheckResult",
    "Bridge",
    "STATED_BRIDGE",
    "WORKING_BRIDGE",
    "WeakConjugacyData",
    "conjugate",
    "check_alexander_pair_conjugacy",
    "weak_conjugacy_data",
    "build_phi_n",
    "check_phi_factorization",
    "check_two_strand_conjugacy",
    "check_n_strand_conjugacy",
    "partial_closure_ops",
    "check_trace_conditions",
    "check_closure_transfer",
]


@dataclass
class CheckResult:
    label: str
    ok: bool
    residual: SparseOp | None = None
    details: dict = field(default_factory=dict)

    def __str__(self):
        status = "pass" if self.ok else "FAIL"
        extra = "" if self.ok or self.residual is None else " " + self.residual.residual_summary()
        return f"{self.label}: {status}{extra}"


def conjugate(E: EnhancedRMatrix, phi: SparseOp, verify: bool = True) -> EnhancedRMatrix:
    """``(φ⊗φ)R(φ⁻¹⊗φ⁻¹)`` together with ``φhφ⁻¹``."""
    if phi.arity != 1 or phi.dim != E.dim:
        raise ValueError("phi must be an invertible map on V")
    phi_inv = invert(phi)
    pp = tensor(phi, phi)
    pp_inv = tensor(phi_inv, phi_inv)
    R = compose(compose(pp, E.R), pp_inv)
    R_inv = compose(compose(pp, E.R_inv), pp_inv)
    h = compose(compose(phi, E.h), phi_inv)
    out = EnhancedRMatrix(E.name + "^phi", E.dim, E.ctx, R, R_inv, h, list(E.gradings))
    if verify:
        rep = check_axioms(out)
        if not rep.ok:
            raise AssertionError(f"conjugated pair fails {rep.failures()}")
    return out


# --- Λ1 versus Alexander ⊗ Alexander ---------------------------------------------------

def check_alexander_pair_conjugacy(theta_perm: Sequence[int] = (1, 2, 3, 4)) -> list[CheckResult]:
    """``R~_Λ1 = (θ⊗θ)τ(R_{t1}⊗R_{t0})τ(θ⁻¹⊗θ⁻¹)`` and ``h_Λ1 = θ(h_{t1}⊗h_{t0})θ⁻¹``.

    ``theta_perm[k]`` is the x-index that the k-th vector ``y_a⊗y_b`` (row-major)
    is sent to; the default is the identification ``y0⊗y0, y0⊗y1, y1⊗y0,
    y1⊗y1 ↦ x1, x2, x3, x4``.
    """
    lam = build_catalog_pair("lambda1")
    ctx = lam.ctx
    prod = tensor_product_pair(build_alexander("t1"), build_alexander("t0"), ctx=ctx)
    theta = SparseOp.from_flat(4, 1, ctx, {(p - 1, k): 1 for k, p in enumerate(theta_perm)})
    th_inv = invert(theta)
    R = compose(compose(tensor(theta, theta), prod.R), tensor(th_inv, th_inv))
    h = compose(compose(theta, prod.h), th_inv)
    return [
        CheckResult("Lambda1 R = (theta x theta) tau (R_t1 x R_t0) tau (theta^-1 x theta^-1)",
                    R == lam.R, R - lam.R),
        CheckResult("Lambda1 h = theta (h_t1 x h_t0) theta^-1", h == lam.h, h - lam.h),
    ]


# --- Λ-1 versus sl3 ------------------------------------------------------------------------

@dataclass(frozen=True)
class Bridge:
    """How the ``Λ-1`` side is specialised before comparing with ``sl3``.

    ``t_to`` / ``s_to`` name the sl3 variable whose ``-2`` power replaces ``t`` / ``s``;
    ``r`` is the sign parameter of ``Λ-1``; ``zeta`` is the fourth root of unity
    used in ``σ`` and ``γ``.
    """

    t_to: str = "t1"
    s_to: str = "t2"
    r: int = 1
    zeta: GaussRational = GaussRational(0, 1)

    def describe(self) -> str:
        return f"t={self.t_to}^-2, s={self.s_to}^-2, r={self.r}, zeta={self.zeta}"


STATED_BRIDGE = Bridge("t1", "t2", 1, GaussRational(0, 1))
# Pairing under which the displayed R-matrices are actually conjugate: the
# variables are matched the other way round and the phases in σ, γ use -r√-1.
WORKING_BRIDGE = Bridge("t2", "t1", 1, GaussRational(0, -1))


@dataclass
class WeakConjugacyData:
    sigma: SparseOp
    nu: SparseOp
    gamma: SparseOp
    bridge: Bridge
    target: EnhancedRMatrix     # the sl3 pair (V side)
    source: EnhancedRMatrix     # the Λ-1 pair, already specialised into sl3 variables

    @property
    def ctx(self) -> VarContext:
        return self.target.ctx


def _specialise(E: EnhancedRMatrix, ctx: VarContext, bridge: Bridge) -> EnhancedRMatrix:
    sub = {"t": ctx.var(bridge.t_to) ** -2, "s": ctx.var(bridge.s_to) ** -2}
    R = E.R.substitute(sub, ctx)
    R_inv = E.R_inv.substitute(sub, ctx)
    h = E.h.substitute(sub, ctx)
    return EnhancedRMatrix(f"{E.name}[{bridge.describe()}]", E.dim, ctx, R, R_inv, h, list(E.gradings))


def weak_conjugacy_data(bridge: Bridge = WORKING_BRIDGE, sigma_phases: bool = True) -> WeakConjugacyData:
    sl3 = build_catalog_pair("sl3")
    ctx = sl3.ctx
    lam = build_lambda_minus1(bridge.r)
    z = bridge.zeta
    W = WEIGHTS_A2
    sig = [1, 1, 1, 1] + ([z] * 4 if sigma_phases else [1] * 4)
    sigma = SparseOp.diagonal(ctx, [MultiLaurent.constant(ctx, c) for c in sig])
    nu = SparseOp.diagonal(ctx, [MultiLaurent.monomial(ctx, [-W[i][0], -W[i][1]]) for i in range(1, 9)])
    gamma = SparseOp.diagonal(
        ctx, [MultiLaurent.constant(ctx, z ** (W[i][1] * W[j][0])) for i in range(1, 9) for j in range(1, 9)],
        arity=2)
    return WeakConjugacyData(sigma, nu, gamma, bridge, sl3, _specialise(lam, ctx, bridge))


def _power(op: SparseOp, k: int) -> SparseOp:
    out = SparseOp.identity(op.dim, op.arity, op.ctx)
    for _ in range(k):
        out = compose(op, out)
    return out


def _tensor_all(ops: Iterable[SparseOp]) -> SparseOp:
    ops = list(ops)
    out = ops[0]
    for op in ops[1:]:
        out = tensor(out, op)
    return out


def _gamma_product(d: WeakConjugacyData, pairs: Iterable[tuple[int, int]], n: int) -> SparseOp:
    out = SparseOp.identity(8, n, d.ctx)
    for i, j in pairs:
        out = compose(embed_two_site(d.gamma, i, j, n), out)
    return out


def build_phi_n(d: WeakConjugacyData, n: int) -> dict[str, SparseOp]:
    """``φ_n = (⊗_i σ∘ν^{n-i}) ∘ ∏_{i<j} (γ)_{i,j}`` plus the factorisation pieces.

    Returns ``{"phi", "nu_prev", "gamma_n"}`` with ``nu_prev = ν^{⊗(n-1)}`` and
    ``gamma_n = ∏_{i<n} (γ)_{i,n}``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    local = _tensor_all(compose(d.sigma, _power(d.nu, n - i)) for i in range(1, n + 1))
    gam = _gamma_product(d, [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)], n)
    out = {"phi": compose(local, gam)}
    if n >= 2:
        out["nu_prev"] = _tensor_all([d.nu] * (n - 1))
        out["gamma_n"] = _gamma_product(d, [(i, n) for i in range(1, n)], n)
    return out


def check_phi_factorization(d: WeakConjugacyData, n: int) -> CheckResult:
    """``φ_n = (φ_{n-1}⊗id)∘(ν_{n-1}⊗σ)∘γ_n``."""
    if n < 2:
        raise ValueError("the factorisation needs n >= 2")
    cur = build_phi_n(d, n)
    prev = build_phi_n(d, n - 1)["phi"]
    I = SparseOp.identity(8, 1, d.ctx)
    rhs = compose(compose(tensor(prev, I), tensor(cur["nu_prev"], d.sigma)), cur["gamma_n"])
    return CheckResult(f"phi_{n} factorisation", rhs == cur["phi"], rhs - cur["phi"])


def _conjugation_check(d: WeakConjugacyData, n: int, k: int) -> CheckResult:
    phi = build_phi_n(d, n)["phi"]
    lhs = compose(compose(phi, embed_two_site(d.target.R, k, k + 1, n)), invert(phi))
    rhs = embed_two_site(d.source.R, k, k + 1, n)
    return CheckResult(f"phi_{n} (R_sl3)_{k},{k + 1} phi_{n}^-1 = (R_Lambda-1)_{k},{k + 1} "
                       f"[{d.bridge.describe()}]", lhs == rhs, lhs - rhs)


def check_two_strand_conjugacy(d: WeakConjugacyData | None = None) -> CheckResult:
    return _conjugation_check(d or weak_conjugacy_data(), 2, 1)


def check_n_strand_conjugacy(n: int, k: int, d: WeakConjugacyData | None = None) -> CheckResult:
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got k={k}, n={n}")
    return _conjugation_check(d or weak_conjugacy_data(), n, k)


# --- trace conditions ---------------------------------------------------------------------------------

def partial_closure_ops(E: EnhancedRMatrix, n: int, count: int, seed: int = 0,
                        extra_strands: int = 1, max_length: int = 6) -> list[SparseOp]:
    """Operators of ``(n,n)``-tangles: ``ρ(β')`` on ``m`` strands with the last ``m-n`` closed up."""
    rng = random.Random(seed)
    out = []
    for s in range(count):
        m = n + (s % (extra_strands + 1))
        beta = random_braid(rng, max_length=max_length, strands=m) if m > 1 else BraidWord(1)
        F = rho(E, beta)
        while F.arity > n:
            F = _trace_last(E, F)
        out.append(F)
    return out


def _trace_last(E: EnhancedRMatrix, F: SparseOp) -> SparseOp:
    k = F.arity
    id_h = tensor(SparseOp.identity(E.dim, k - 1, E.ctx), E.h)
    return partial_trace(compose(id_h, F), k)


def check_trace_conditions(n: int, ops: Sequence[SparseOp], d: WeakConjugacyData | None = None) -> list[CheckResult]:
    d = d or weak_conjugacy_data()
    E = d.target
    h, h_inv = E.h, E.h_inv
    out = []
    sigma_inv = invert(d.sigma)
    lhs = compose(compose(sigma_inv, d.source.h), d.sigma)
    out.append(CheckResult("sigma^-1 h' sigma = h", lhs == h, lhs - h))
    if n == 2:
        lhs = compose(compose(invert(d.nu), h), d.nu)
        out.append(CheckResult("nu^-1 h nu = h", lhs == h, lhs - h))
    pieces = build_phi_n(d, n)
    g, nu_prev = pieces["gamma_n"], pieces["nu_prev"]
    g_inv, nu_prev_inv = invert(g), invert(nu_prev)
    id_h = tensor(SparseOp.identity(E.dim, n - 1, E.ctx), h)
    hinv_id = tensor(h_inv, SparseOp.identity(E.dim, n - 1, E.ctx))
    bad = {"gn": 0, "nun": 0, "g2": 0}
    for F in ops:
        conj = compose(compose(g, F), g_inv)
        base = partial_trace(compose(id_h, F), n)
        if partial_trace(compose(id_h, conj), n) != base:
            bad["gn"] += 1
        if compose(compose(nu_prev, base), nu_prev_inv) != base:
            bad["nun"] += 1
        if n == 2 and partial_trace(compose(hinv_id, conj), 1) != partial_trace(compose(hinv_id, F), 1):
            bad["g2"] += 1
    m = len(ops)
    out.append(CheckResult(f"gamma_n trace identity, n={n}", bad["gn"] == 0,
                           details={"samples": m, "failures": bad["gn"]}))
    out.append(CheckResult(f"nu_(n-1) trace identity, n={n}", bad["nun"] == 0,
                           details={"samples": m, "failures": bad["nun"]}))
    if n == 2:
        out.append(CheckResult("gamma_2 left trace identity", bad["g2"] == 0,
                               details={"samples": m, "failures": bad["g2"]}))
    return out


def check_closure_transfer(beta: BraidWord, d: WeakConjugacyData | None = None) -> CheckResult:
    """The closure scalar under ``sl3`` equals the specialised closure under ``Λ-1``."""
    d = d or weak_conjugacy_data()
    lam = build_lambda_minus1(d.bridge.r)
    ctx = d.ctx
    a = closure_mrt(d.target, beta).scalar
    b = closure_mrt(lam, beta).scalar.substitute(
        {"t": ctx.var(d.bridge.t_to) ** -2, "s": ctx.var(d.bridge.s_to) ** -2}, ctx)
    return CheckResult(f"mRT sl3 = mRT Lambda-1 [{beta}]", a == b,
                       details={"sl3": a.to_string(True), "lambda-1": b.to_string(True)})
