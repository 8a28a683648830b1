"""Braid words, the representation ``ρ_R`` and closure formulas.

Letters act bottom-to-top: ``ρ(w1·w2) = ρ(w2)∘ρ(w1)``.  A positive letter
``k`` places ``R`` on strands ``k, k+1``; a negative letter places ``R^{-1}``.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .laurent import MultiLaurent, _addmul, _prune
from .rmatrices import EnhancedRMatrix
from .tensorops import (
    SparseOp,
    ShapeError,
    as_scalar_multiple_of_identity,
    compose,
    embed_two_site,
    partial_trace,
    tensor,
)

__all__ = [
    "BraidWord",
    "BraidParseError",
    "ClosureResult",
    "ClosureError",
    "rho",
    "closure_mrt",
    "closure_operator",
    "left_closure",
    "right_closure",
    "markov_conjugate",
    "markov_stabilize",
    "component_count",
    "random_braid",
]


class BraidParseError(ValueError):
    pass


class ClosureError(RuntimeError):
    """The closure operator is not a scalar multiple of the identity."""


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for k in self.letters:
            if k == 0 or abs(k) > self.strands - 1:
                raise ValueError(f"letter {k} out of range for {self.strands} strands")

    @classmethod
    def parse(cls, text: str) -> "BraidWord":
        """Accept ``strands=n; 1 -2 1`` or JSON ``{"strands": n, "letters": [...]}``."""
        text = text.strip()
        try:
            if text.startswith("{"):
                obj = json.loads(text)
                return cls(int(obj["strands"]), tuple(obj.get("letters", ())))
            m = re.fullmatch(r"strands\s*=\s*(\d+)\s*[;,]?\s*(.*)", text, re.S)
            if not m:
                raise BraidParseError(f"expected 'strands=n; letters', got {text!r}")
            body = m.group(2).replace(",", " ").split()
            return cls(int(m.group(1)), tuple(int(x) for x in body))
        except (ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
            if isinstance(exc, BraidParseError):
                raise
            raise BraidParseError(str(exc)) from None

    def __str__(self):
        return f"strands={self.strands}; " + " ".join(str(k) for k in self.letters)

    def to_json(self) -> dict:
        return {"strands": self.strands, "letters": list(self.letters)}

    def __add__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise ValueError("cannot concatenate braids on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-k for k in reversed(self.letters)))

    def permutation(self) -> list[int]:
        """Where each bottom position ends up at the top (0-based)."""
        pos = list(range(self.strands))
        for k in self.letters:
            a = abs(k) - 1
            pos[a], pos[a + 1] = pos[a + 1], pos[a]
        return pos


def component_count(beta: BraidWord) -> int:
    perm = beta.permutation()
    seen = [False] * beta.strands
    count = 0
    for s in range(beta.strands):
        if seen[s]:
            continue
        count += 1
        while not seen[s]:
            seen[s] = True
            s = perm[s]
    return count


def markov_conjugate(beta: BraidWord, gamma: BraidWord) -> BraidWord:
    return gamma + beta + gamma.inverse()


def markov_stabilize(beta: BraidWord, sign: int = 1) -> BraidWord:
    n = beta.strands
    return BraidWord(n + 1, beta.letters + ((n if sign > 0 else -n),))


def random_braid(rng: random.Random, max_strands: int = 3, max_length: int = 6,
                 strands: int | None = None) -> BraidWord:
    n = strands or rng.randint(1, max_strands)
    if n == 1:
        return BraidWord(1)
    length = rng.randint(0, max_length)
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


# --- the representation ------------------------------------------------------------

def _check_dim(E: EnhancedRMatrix, beta: BraidWord):
    if E.dim ** beta.strands > 1 << 20:
        raise ShapeError(f"V^⊗{beta.strands} is too large for dim {E.dim}")


def rho(E: EnhancedRMatrix, beta: BraidWord) -> SparseOp:
    _check_dim(E, beta)
    n = beta.strands
    out = SparseOp.identity(E.dim, n, E.ctx)
    cache: dict[int, SparseOp] = {}
    for k in beta.letters:
        g = cache.get(k)
        if g is None:
            if n < 2:
                raise ShapeError("letter on a one-strand braid")
            g = cache[k] = embed_two_site(E.R if k > 0 else E.R_inv, abs(k), abs(k) + 1, n)
        out = compose(g, out)
    return out


def _local_columns(E: EnhancedRMatrix):
    # {col: [(row, raw)]} for R and R^{-1}
    def cols(op):
        out: dict[int, list] = {}
        for (r, c), v in op._e.items():
            out.setdefault(c, []).append((r, v))
        return out
    return cols(E.R), cols(E.R_inv)


def _apply_letter(vec: dict, k: int, d: int, n: int, pos_cols, neg_cols) -> dict:
    a = abs(k)
    wi = d ** (n - a)
    wj = wi // d
    local = pos_cols if k > 0 else neg_cols
    acc: dict = {}
    for idx, v in vec.items():
        x = (idx // wi) % d
        y = (idx // wj) % d
        base = idx - x * wi - y * wj
        for r, rv in local.get(x * d + y, ()):
            rx, ry = divmod(r, d)
            tgt = base + rx * wi + ry * wj
            slot = acc.get(tgt)
            if slot is None:
                slot = acc[tgt] = {}
            _addmul(slot, rv, v)
    out = {}
    for key, v in acc.items():
        v = _prune(v)
        if v:
            out[key] = v
    return out


def closure_operator(E: EnhancedRMatrix, beta: BraidWord) -> SparseOp:
    """``tr_{2..n}((id⊗h^{⊗(n-1)})∘ρ(β))`` computed column by column.

    Each basis vector is pushed through the word as a sparse vector, so the
    full ``ρ(β)`` is never materialised.
    """
    _check_dim(E, beta)
    d, n = E.dim, beta.strands
    ctx = E.ctx
    if not E.h.is_diagonal():
        F = compose(_h_tail(E, n), rho(E, beta))
        for _ in range(n - 1):
            F = partial_trace(F, F.arity)
        return F
    hdiag = [h._t for h in E.h.diagonal_entries()]
    pos_cols, neg_cols = _local_columns(E)
    tail = d ** (n - 1)
    # weight of the traced indices: product of h over strands 2..n
    weights = [{0: 1}] * tail
    for j in range(1, n):
        w = d ** (n - 1 - j)
        weights = [_mul(weights[t], hdiag[(t // w) % d]) for t in range(tail)]
    acc: dict = {}
    for a in range(d):
        for t in range(tail):
            vec = {a * tail + t: {0: 1}}
            for k in beta.letters:
                vec = _apply_letter(vec, k, d, n, pos_cols, neg_cols)
                if not vec:
                    break
            for idx, v in vec.items():
                b, tt = divmod(idx, tail)
                if tt != t:
                    continue
                slot = acc.get((b, a))
                if slot is None:
                    slot = acc[(b, a)] = {}
                _addmul(slot, weights[t], v)
    e = {}
    for key, v in acc.items():
        v = _prune(v)
        if v:
            e[key] = v
    return SparseOp(d, 1, ctx, e)


def _mul(x: dict, y: dict) -> dict:
    acc: dict = {}
    _addmul(acc, x, y)
    return _prune(acc)


def _h_tail(E: EnhancedRMatrix, n: int) -> SparseOp:
    op = SparseOp.identity(E.dim, 1, E.ctx)
    for _ in range(n - 1):
        op = tensor(op, E.h)
    return op


@dataclass
class ClosureResult:
    operator: SparseOp
    scalar: MultiLaurent
    components: int


def closure_mrt(E: EnhancedRMatrix, beta: BraidWord) -> ClosureResult:
    F = closure_operator(E, beta)
    via_trace = F.trace() * Fraction(1, E.dim)
    c = as_scalar_multiple_of_identity(F)
    if c is None or c != via_trace:
        raise ClosureError(f"{E.name}: closure of {beta} is not a scalar multiple of the identity")
    return ClosureResult(F, c, component_count(beta))


# --- (2,2)-tangle closures ---------------------------------------------------------------

def left_closure(E: EnhancedRMatrix, F: SparseOp) -> SparseOp:
    """``tr_2((id⊗h)∘F)``."""
    if F.arity != 2:
        raise ShapeError("left_closure needs an arity-2 operator")
    return partial_trace(compose(tensor(E.identity(), E.h), F), 2)


def right_closure(E: EnhancedRMatrix, F: SparseOp) -> SparseOp:
    """``tr_1(F∘(h^{-1}⊗id))``."""
    if F.arity != 2:
        raise ShapeError("right_closure needs an arity-2 operator")
    return partial_trace(compose(F, tensor(E.h_inv, E.identity())), 1)


def letters_from(seq: Iterable[int], strands: int) -> BraidWord:
    return BraidWord(strands, tuple(seq))
