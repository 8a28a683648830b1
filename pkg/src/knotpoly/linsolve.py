"""Exact linear systems over the Laurent ring and its fraction field.

Rows are sparse dicts ``{column: MultiLaurent}``.  Elimination is a
fraction-free Gauss-Jordan sweep: unit (monomial) pivots are normalised to 1,
other pivots are cross-multiplied and the row content is removed afterwards so
that entries stay small.  Solutions are returned as :class:`RationalFn`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .laurent import (
    GaussRational,
    MASK,
    MultiLaurent,
    NotDivisible,
    RationalFn,
    VarContext,
    decode,
    encode,
)

__all__ = ["LinearSystem", "Echelon", "Solution", "echelon", "solve", "numeric_rank"]


@dataclass
class LinearSystem:
    """``sum_j rows[i][j] * x_j = rhs[i]`` with named unknowns."""

    ctx: VarContext
    unknowns: list[str]
    rows: list[dict[int, MultiLaurent]]
    rhs: list[MultiLaurent] | None = None
    label: str = ""

    @property
    def ncols(self) -> int:
        return len(self.unknowns)

    def is_homogeneous(self) -> bool:
        return self.rhs is None or all(b.is_zero() for b in self.rhs)

    def augmented(self) -> list[dict[int, MultiLaurent]]:
        if self.rhs is None:
            return [dict(r) for r in self.rows]
        out = []
        for r, b in zip(self.rows, self.rhs):
            row = dict(r)
            if b:
                row[self.ncols] = b
            out.append(row)
        return out


@dataclass
class Echelon:
    ncols: int
    pivots: list[tuple[int, dict[int, MultiLaurent]]]
    inconsistent: bool = False

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def pivot_columns(self) -> list[int]:
        return [c for c, _ in self.pivots]


@dataclass
class Solution:
    """Affine solution set ``x = particular + sum_f x_f * basis_f`` over the fraction field."""

    unknowns: list[str]
    free: list[int]
    # expressions[c] = (constant, {free_col: coeff}) for every column
    expressions: dict[int, tuple[RationalFn, dict[int, RationalFn]]] = field(default_factory=dict)
    rank: int = 0

    @property
    def nullity(self) -> int:
        return len(self.free)

    def value(self, col: int, free_values: dict[int, object] | None = None) -> RationalFn:
        const, coeffs = self.expressions[col]
        out = const
        for f, c in coeffs.items():
            v = (free_values or {}).get(f)
            if v is None:
                raise KeyError(f"no value for free unknown {self.unknowns[f]!r}")
            out = out + c * v
        return out

    def coefficient(self, col: int, free_col: int) -> RationalFn:
        const, coeffs = self.expressions[col]
        if free_col in coeffs:
            return coeffs[free_col]
        return RationalFn(MultiLaurent(const.ctx, {}))


# --- row hygiene ---------------------------------------------------------------

def _row_content_unit(row: dict[int, MultiLaurent]) -> MultiLaurent | None:
    """Monomial times rational that, divided out, leaves a primitive row."""
    ctx = next(iter(row.values())).ctx
    n = ctx.nvars
    low = None
    nums = 0
    dens = 1
    lead_sign = 0
    for v in row.values():
        for k, c in v._t.items():
            exps = decode(k - (k & MASK), n)[0]
            low = list(exps) if low is None else [min(a, b) for a, b in zip(low, exps)]
            c = Fraction(c)
            nums = gcd(nums, c.numerator)
            dens = dens * c.denominator // gcd(dens, c.denominator)
    if low is None:
        return None
    # sign: make the first entry's leading coefficient positive
    first = row[min(row)]
    _, lc = first.leading()
    lead = lc.re if lc.re else lc.im
    sign = -1 if lead < 0 else 1
    scale = Fraction(nums, dens) * sign
    if scale == 1 and not any(low):
        return None
    return MultiLaurent.monomial(ctx, low, scale)


def _primitive(row: dict[int, MultiLaurent], divisors: Sequence[MultiLaurent] = ()) -> dict[int, MultiLaurent]:
    if not row:
        return row
    u = _row_content_unit(row)
    if u is not None:
        inv = u.unit_inverse()
        row = {c: v * inv for c, v in row.items()}
    for d in divisors:
        while True:
            try:
                cand = {c: v.exact_div(d) for c, v in row.items()}
            except NotDivisible:
                break
            row = cand
    return row


def _row_weight(row):
    return sum(len(v) for v in row.values())


def echelon(rows: Iterable[dict[int, MultiLaurent]], ncols: int,
            order: Sequence[int] | None = None) -> Echelon:
    """Reduced fraction-free echelon form; column ``ncols`` (if present) is the right-hand side."""
    work = [_primitive({c: v for c, v in r.items() if v}) for r in rows]
    work = [r for r in work if r]
    work = _dedupe(work)
    order = list(order) if order is not None else list(range(ncols))
    pivots: list[tuple[int, dict]] = []
    divisors: list[MultiLaurent] = []
    for col in order:
        cands = [r for r in work if col in r]
        if not cands:
            continue
        best = min(cands, key=lambda r: (not r[col].is_unit(), len(r[col]), _row_weight(r)))
        work.remove(best)
        p = best[col]
        if p.is_unit():
            inv = p.unit_inverse()
            best = {c: v * inv for c, v in best.items()}
            p = best[col]
        else:
            if p not in divisors:
                divisors.append(p)
        new_work = []
        for r in work:
            r = _eliminate(r, best, col, p, divisors)
            if r:
                new_work.append(r)
        work = _dedupe(new_work)
        new_piv = []
        for pc, pr in pivots:
            if col in pr:
                pr = _eliminate(pr, best, col, p, divisors, keep=pc)
            new_piv.append((pc, pr))
        pivots = new_piv
        pivots.append((col, best))
    inconsistent = any(set(r) == {ncols} for r in work)
    return Echelon(ncols, pivots, inconsistent)


def _eliminate(r, best, col, p, divisors, keep=None):
    a = r.get(col)
    if a is None:
        return r
    one = p == 1
    out = {}
    for c in set(r) | set(best):
        if c == col:
            continue
        v = r.get(c)
        if v is not None and not one:
            v = v * p
        b = best.get(c)
        if b is not None:
            v = -(a * b) if v is None else v - a * b
        if v:
            out[c] = v
    out = _primitive(out, divisors) if out else out
    return out


def _dedupe(rows):
    seen = set()
    out = []
    for r in rows:
        key = frozenset((c, v) for c, v in r.items())
        if key in seen:
            continue
        seen.add(key)
        out.append(r)
    return out


def solve(system: LinearSystem, free_last: Sequence[int] = ()) -> Solution:
    """Parametric solution; columns in ``free_last`` are pivoted on last, so they
    become the free parameters whenever the system allows it."""
    n = system.ncols
    ctx = system.ctx
    late = [c for c in free_last]
    order = [c for c in range(n) if c not in late] + late
    ech = echelon(system.augmented(), n, order)
    if ech.inconsistent:
        raise ValueError("linear system is inconsistent")
    piv_cols = set(ech.pivot_columns)
    free = [c for c in range(n) if c not in piv_cols]
    zero = MultiLaurent(ctx, {})
    sol = Solution(list(system.unknowns), free, {}, ech.rank)
    for f in free:
        sol.expressions[f] = (RationalFn(zero), {f: RationalFn(MultiLaurent(ctx, {0: 1}))})
    for c, row in ech.pivots:
        p = row[c]
        const = RationalFn(row.get(n, zero), p)
        coeffs = {}
        for f in free:
            if f in row:
                coeffs[f] = RationalFn(-row[f], p)
        sol.expressions[c] = (const, coeffs)
    return sol


# --- numeric cross-check ---------------------------------------------------------

def _gauss_rank(mat: list[list[GaussRational]]) -> int:
    rows = [list(r) for r in mat if any(r)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        inv = GaussRational(1) / pr[c]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], pr)]
        rank += 1
    return rank


def random_point(ctx: VarContext, rng: random.Random, avoid: Sequence[MultiLaurent] = ()) -> dict:
    """A random rational point avoiding 0, ±1, coincidences and zeros of ``avoid``."""
    while True:
        vals = []
        point = {}
        for name in ctx.names:
            while True:
                v = Fraction(rng.randint(2, 97), rng.randint(1, 13)) * rng.choice((1, -1))
                if v not in (0, 1, -1) and v not in vals:
                    break
            vals.append(v)
            point[name] = v
        if all(a.eval(point) for a in avoid):
            return point


def numeric_rank(rows: Sequence[dict[int, MultiLaurent]], ncols: int, point: dict) -> int:
    mat = []
    for r in rows:
        line = [GaussRational(0)] * ncols
        for c, v in r.items():
            if c < ncols:
                line[c] = v.eval(point)
        mat.append(line)
    return _gauss_rank(mat)
