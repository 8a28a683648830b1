"""Sparse operators on tensor powers of a finite-dimensional space.

A :class:`SparseOp` of dimension ``d`` and arity ``n`` is a ``d**n`` square
matrix with :class:`MultiLaurent` entries.  Basis vectors of ``V^{⊗n}`` are
multi-indices ``(i_1, ..., i_n)`` with ``1 <= i_k <= d``; they are flattened
row-major with the leftmost factor most significant, so ``e_i⊗e_j`` sits at
``(i-1)*d + (j-1)``.  Rows index outputs and columns index inputs.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Mapping

from .laurent import (
    ContextMismatch,
    GaussRational,
    MultiLaurent,
    NotDivisible,
    VarContext,
    _add,
    _addmul,
    _prune,
)

__all__ = [
    "SparseOp",
    "ShapeError",
    "SingularMatrix",
    "compose",
    "tensor",
    "embed_two_site",
    "partial_trace",
    "rot_left",
    "rot_right",
    "rot_left_inverse",
    "rot_right_inverse",
    "as_scalar_multiple_of_identity",
    "invert",
    "flatten",
    "unflatten",
]


class ShapeError(ValueError):
    pass


class SingularMatrix(ArithmeticError):
    pass


def flatten(idx: Iterable[int], dim: int) -> int:
    f = 0
    for i in idx:
        if not 1 <= i <= dim:
            raise ShapeError(f"index {i} out of range 1..{dim}")
        f = f * dim + (i - 1)
    return f


def unflatten(f: int, dim: int, arity: int) -> tuple[int, ...]:
    out = [0] * arity
    for k in range(arity - 1, -1, -1):
        f, r = divmod(f, dim)
        out[k] = r + 1
    return tuple(out)


class SparseOp:
    """Immutable sparse matrix over ``V^{⊗arity}``.

    ``entries`` maps flat ``(row, col)`` pairs to raw coefficient dicts of the
    context's Laurent ring (see :mod:`knotpoly.laurent`); zero entries are
    never stored.  Use :meth:`get` / :meth:`items` for the polynomial view.
    """

    __slots__ = ("dim", "arity", "ctx", "_e")

    def __init__(self, dim: int, arity: int, ctx: VarContext, entries: dict | None = None):
        self.dim = dim
        self.arity = arity
        self.ctx = ctx
        self._e = entries if entries is not None else {}

    # construction ---------------------------------------------------------
    @property
    def size(self) -> int:
        return self.dim ** self.arity

    @classmethod
    def from_entries(cls, dim: int, arity: int, ctx: VarContext,
                     entries: Mapping[tuple, object]) -> "SparseOp":
        """Build from ``{(row_multi_index, col_multi_index): value}``."""
        e = {}
        for (row, col), v in entries.items():
            row, col = tuple(row), tuple(col)
            if len(row) != arity or len(col) != arity:
                raise ShapeError("multi-index length does not match arity")
            v = MultiLaurent.constant(ctx, v)
            if v:
                e[(flatten(row, dim), flatten(col, dim))] = v._t
        return cls(dim, arity, ctx, e)

    @classmethod
    def from_flat(cls, dim: int, arity: int, ctx: VarContext,
                  entries: Mapping[tuple[int, int], object]) -> "SparseOp":
        e = {}
        n = dim ** arity
        for (r, c), v in entries.items():
            if not (0 <= r < n and 0 <= c < n):
                raise ShapeError(f"flat index ({r}, {c}) out of range")
            v = MultiLaurent.constant(ctx, v)
            if v:
                e[(r, c)] = v._t
        return cls(dim, arity, ctx, e)

    @classmethod
    def from_rows(cls, dim: int, arity: int, ctx: VarContext, rows) -> "SparseOp":
        """Dense row lists (values, polynomial strings or MultiLaurent)."""
        n = dim ** arity
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ShapeError(f"expected a {n}x{n} matrix")
        e = {}
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                if isinstance(v, str):
                    v = ctx.parse(v)
                v = MultiLaurent.constant(ctx, v)
                if v:
                    e[(i, j)] = v._t
        return cls(dim, arity, ctx, e)

    @classmethod
    def identity(cls, dim: int, arity: int, ctx: VarContext) -> "SparseOp":
        return cls(dim, arity, ctx, {(i, i): {0: 1} for i in range(dim ** arity)})

    @classmethod
    def diagonal(cls, ctx: VarContext, values: Iterable, arity: int = 1) -> "SparseOp":
        vals = [MultiLaurent.constant(ctx, ctx.parse(v) if isinstance(v, str) else v) for v in values]
        n = len(vals)
        dim = round(n ** (1 / arity))
        if dim ** arity != n:
            raise ShapeError("diagonal length is not a perfect power of the arity")
        return cls(dim, arity, ctx, {(i, i): v._t for i, v in enumerate(vals) if v})

    @classmethod
    def permutation(cls, dim: int, arity: int, ctx: VarContext, perm) -> "SparseOp":
        """Operator ``e_{i_1}⊗...⊗e_{i_n} ↦ e_{i_perm(1)}⊗...``: output slot k gets input slot perm[k] (0-based)."""
        e = {}
        for idx in product(range(1, dim + 1), repeat=arity):
            out = tuple(idx[perm[k]] for k in range(arity))
            e[(flatten(out, dim), flatten(idx, dim))] = {0: 1}
        return cls(dim, arity, ctx, e)

    # views -------------------------------------------------------------------
    def get(self, row, col) -> MultiLaurent:
        r = row if isinstance(row, int) else flatten(row, self.dim)
        c = col if isinstance(col, int) else flatten(col, self.dim)
        return MultiLaurent(self.ctx, self._e.get((r, c), {}))

    def items(self):
        """Yield ``(row_multi_index, col_multi_index, MultiLaurent)``."""
        for (r, c), v in sorted(self._e.items()):
            yield (unflatten(r, self.dim, self.arity), unflatten(c, self.dim, self.arity),
                   MultiLaurent(self.ctx, v))

    def items_flat(self):
        """Yield ``((flat_row, flat_col), MultiLaurent)``."""
        for key, v in self._e.items():
            yield key, MultiLaurent(self.ctx, v)

    def nnz(self) -> int:
        return len(self._e)

    def support(self) -> frozenset:
        return frozenset(self._e)

    def is_zero(self) -> bool:
        return not self._e

    def to_rows(self) -> list[list[MultiLaurent]]:
        n = self.size
        z = MultiLaurent(self.ctx, {})
        rows = [[z] * n for _ in range(n)]
        for (r, c), v in self._e.items():
            rows[r][c] = MultiLaurent(self.ctx, v)
        return rows

    def diagonal_entries(self) -> list[MultiLaurent]:
        return [MultiLaurent(self.ctx, self._e.get((i, i), {})) for i in range(self.size)]

    def is_diagonal(self) -> bool:
        return all(r == c for r, c in self._e)

    def trace(self) -> MultiLaurent:
        acc: dict = {}
        for (r, c), v in self._e.items():
            if r == c:
                acc = _add(acc, v)
        return MultiLaurent(self.ctx, acc)

    def by_row(self) -> dict[int, dict[int, dict]]:
        rows: dict = {}
        for (r, c), v in self._e.items():
            rows.setdefault(r, {})[c] = v
        return rows

    def by_col(self) -> dict[int, dict[int, dict]]:
        cols: dict = {}
        for (r, c), v in self._e.items():
            cols.setdefault(c, {})[r] = v
        return cols

    # algebra ----------------------------------------------------------------
    def _same_shape(self, other: "SparseOp"):
        if self.dim != other.dim or self.arity != other.arity:
            raise ShapeError(f"shape mismatch: ({self.dim},{self.arity}) vs ({other.dim},{other.arity})")
        if self.ctx is not other.ctx and self.ctx != other.ctx:
            raise ContextMismatch(f"context mismatch: {self.ctx} vs {other.ctx}")

    def __add__(self, other: "SparseOp") -> "SparseOp":
        self._same_shape(other)
        e = dict(self._e)
        for k, v in other._e.items():
            s = _add(e[k], v) if k in e else v
            if s:
                e[k] = s
            else:
                e.pop(k, None)
        return SparseOp(self.dim, self.arity, self.ctx, e)

    def __neg__(self) -> "SparseOp":
        return SparseOp(self.dim, self.arity, self.ctx,
                        {k: {m: -c for m, c in v.items()} for k, v in self._e.items()})

    def __sub__(self, other: "SparseOp") -> "SparseOp":
        return self + (-other)

    def scale(self, c) -> "SparseOp":
        c = MultiLaurent.constant(self.ctx, c)
        if not c:
            return SparseOp(self.dim, self.arity, self.ctx, {})
        e = {}
        for k, v in self._e.items():
            p = (MultiLaurent(self.ctx, v) * c)._t
            if p:
                e[k] = p
        return SparseOp(self.dim, self.arity, self.ctx, e)

    def __matmul__(self, other: "SparseOp") -> "SparseOp":
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, SparseOp):
            return NotImplemented
        return (self.dim == other.dim and self.arity == other.arity
                and self.ctx == other.ctx and self._e == other._e)

    __hash__ = None

    def map_entries(self, f, ctx: VarContext | None = None) -> "SparseOp":
        """Apply ``f: MultiLaurent -> MultiLaurent`` entrywise (optionally into ``ctx``)."""
        ctx = ctx or self.ctx
        e = {}
        for k, v in self._e.items():
            p = f(MultiLaurent(self.ctx, v))
            p = MultiLaurent.constant(ctx, p)
            if p:
                e[k] = p._t
        return SparseOp(self.dim, self.arity, ctx, e)

    def substitute(self, assignments, target: VarContext | None = None) -> "SparseOp":
        return self.map_entries(lambda p: p.substitute(assignments, target), target)

    def transpose(self) -> "SparseOp":
        return SparseOp(self.dim, self.arity, self.ctx, {(c, r): v for (r, c), v in self._e.items()})

    def residual_summary(self, limit: int = 3) -> str:
        if not self._e:
            return "0"
        parts = []
        for row, col, v in list(self.items())[:limit]:
            parts.append(f"[{row},{col}]={v}")
        more = f" (+{self.nnz() - limit} more)" if self.nnz() > limit else ""
        return "; ".join(parts) + more

    def __repr__(self):
        return f"SparseOp(dim={self.dim}, arity={self.arity}, nnz={self.nnz()})"

    # json --------------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "arity": self.arity,
            "context": self.ctx.to_json(),
            "entries": [
                {"row": list(r), "col": list(c), "value": v.to_json()}
                for r, c, v in self.items()
            ],
        }

    @classmethod
    def from_json(cls, obj, ctx: VarContext | None = None) -> "SparseOp":
        if ctx is None:
            if "context" not in obj:
                raise ValueError("operator JSON has no context header; pass a VarContext")
            ctx = VarContext.from_json(obj["context"])
        dim, arity = int(obj["dim"]), int(obj["arity"])
        entries = {}
        for item in obj["entries"]:
            val = item["value"]
            if isinstance(val, str):
                p = ctx.parse(val)
            else:
                p = MultiLaurent.from_json(ctx, val)
            key = (tuple(item["row"]), tuple(item["col"]))
            if key in entries:
                raise ValueError(f"duplicate entry {key}")
            entries[key] = p
        return cls.from_entries(dim, arity, ctx, entries)


# --- core operations ------------------------------------------------------------

def compose(a: SparseOp, b: SparseOp) -> SparseOp:
    """Matrix product ``a∘b`` (apply ``b`` first)."""
    a._same_shape(b)
    brows = b.by_row()
    acc: dict = {}
    for (r, k), av in a._e.items():
        brow = brows.get(k)
        if not brow:
            continue
        for c, bv in brow.items():
            slot = acc.get((r, c))
            if slot is None:
                slot = acc[(r, c)] = {}
            _addmul(slot, av, bv)
    e = {}
    for key, v in acc.items():
        v = _prune(v)
        if v:
            e[key] = v
    return SparseOp(a.dim, a.arity, a.ctx, e)


def _mul_raw(x: dict, y: dict) -> dict:
    acc: dict = {}
    _addmul(acc, x, y)
    return _prune(acc)


def tensor(a: SparseOp, b: SparseOp) -> SparseOp:
    if a.dim != b.dim:
        raise ShapeError(f"dim mismatch: {a.dim} vs {b.dim}")
    if a.ctx is not b.ctx and a.ctx != b.ctx:
        raise ContextMismatch("context mismatch")
    nb = b.size
    e = {}
    for (r1, c1), v1 in a._e.items():
        for (r2, c2), v2 in b._e.items():
            p = _mul_raw(v1, v2)
            if p:
                e[(r1 * nb + r2, c1 * nb + c2)] = p
    return SparseOp(a.dim, a.arity + b.arity, a.ctx, e)


def embed_two_site(f: SparseOp, i: int, j: int, n: int) -> SparseOp:
    """``(f)_{ij}``: ``f`` acting on tensor factors ``i < j`` of ``V^{⊗n}`` (1-based)."""
    if f.arity != 2:
        raise ShapeError("embed_two_site needs an arity-2 operator")
    if not 1 <= i < j <= n:
        raise ShapeError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    d = f.dim
    wi = d ** (n - i)
    wj = d ** (n - j)
    local = f.by_col()
    e = {}
    for idx in range(d ** n):
        a = (idx // wi) % d
        b = (idx // wj) % d
        base = idx - a * wi - b * wj
        for r, v in local.get(a * d + b, {}).items():
            ra, rb = divmod(r, d)
            e[(base + ra * wi + rb * wj, idx)] = v
    return SparseOp(d, n, f.ctx, e)


def partial_trace(f: SparseOp, i: int) -> SparseOp:
    """Trace out tensor factor ``i`` (1-based)."""
    if not 1 <= i <= f.arity:
        raise ShapeError(f"trace index {i} out of range 1..{f.arity}")
    d = f.dim
    w = d ** (f.arity - i)
    acc: dict = {}
    for (r, c), v in f._e.items():
        a = (r // w) % d
        if a != (c // w) % d:
            continue
        rr = (r // (w * d)) * w + r % w
        cc = (c // (w * d)) * w + c % w
        slot = acc.get((rr, cc))
        acc[(rr, cc)] = v if slot is None else _add(slot, v)
    e = {k: v for k, v in acc.items() if v}
    return SparseOp(d, f.arity - 1, f.ctx, e)


def _permute_legs(a: SparseOp, mapping) -> SparseOp:
    if a.arity != 2:
        raise ShapeError("rotation maps act on arity-2 operators")
    d = a.dim
    e = {}
    for (r, c), v in a._e.items():
        k, l = divmod(r, d)
        i, j = divmod(c, d)
        (r1, r2), (c1, c2) = mapping(i, j, k, l)
        e[(r1 * d + r2, c1 * d + c2)] = v
    return SparseOp(d, 2, a.ctx, e)


# Leg bookkeeping for a 2-in/2-out operator A with input (i, j) and output
# (k, l), i.e. A[row=(k,l), col=(i,j)].  Each rotation bends one input leg up
# and one output leg down, giving an operator on V⊗V* (or V*⊗V).

def rot_left(a: SparseOp) -> SparseOp:
    """``A^↺``: entry ``A[(k,l),(i,j)]`` moves to row ``(l,j)``, column ``(k,i)``."""
    return _permute_legs(a, lambda i, j, k, l: ((l, j), (k, i)))


def rot_right(a: SparseOp) -> SparseOp:
    """``A^↻``: entry ``A[(k,l),(i,j)]`` moves to row ``(i,k)``, column ``(j,l)``."""
    return _permute_legs(a, lambda i, j, k, l: ((i, k), (j, l)))


def rot_left_inverse(a: SparseOp) -> SparseOp:
    # row (l,j), col (k,i)  ->  row (k,l), col (i,j)
    return _permute_legs(a, lambda k, i, l, j: ((k, l), (i, j)))


def rot_right_inverse(a: SparseOp) -> SparseOp:
    # row (i,k), col (j,l)  ->  row (k,l), col (i,j)
    return _permute_legs(a, lambda j, l, i, k: ((k, l), (i, j)))


def as_scalar_multiple_of_identity(a: SparseOp) -> MultiLaurent | None:
    n = a.size
    if any(r != c for r, c in a._e):
        return None
    if not a._e:
        return MultiLaurent(a.ctx, {})
    if len(a._e) != n:
        return None
    first = a._e[(0, 0)]
    if all(v == first for v in a._e.values()):
        return MultiLaurent(a.ctx, first)
    return None


# --- inversion ---------------------------------------------------------------------

def _components(a: SparseOp) -> list[list[int]]:
    """Connected components of the bipartite row/column sparsity graph, as index sets.

    For a square invertible matrix whose pattern is block-diagonal up to a
    permutation, each component has equally many rows and columns.
    """
    n = a.size
    parent = list(range(2 * n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for r, c in a._e:
        pr, pc = find(r), find(n + c)
        if pr != pc:
            parent[pr] = pc
    groups: dict = {}
    for x in range(2 * n):
        groups.setdefault(find(x), []).append(x)
    return list(groups.values())


def _invert_block(rows: list[int], cols: list[int], a: SparseOp) -> dict:
    """Fraction-free Gauss-Jordan on ``[B | I]``; returns inverse entries keyed (col, row)."""
    ctx = a.ctx
    m = len(rows)
    Z = MultiLaurent(ctx, {})
    M = [[MultiLaurent(ctx, a._e.get((r, c), {})) for c in cols] +
         [MultiLaurent(ctx, {0: 1}) if q == p else Z for q in range(m)]
         for p, r in enumerate(rows)]
    prev = MultiLaurent(ctx, {0: 1})
    for k in range(m):
        cands = [p for p in range(k, m) if M[p][k]]
        if not cands:
            raise SingularMatrix("matrix is singular")
        piv = min(cands, key=lambda p: (not M[p][k].is_unit(), len(M[p][k])))
        M[k], M[piv] = M[piv], M[k]
        pk = M[k][k]
        rowk = M[k]
        for i in range(m):
            if i == k:
                continue
            rowi = M[i]
            f = rowi[k]
            new = []
            for j in range(2 * m):
                if j == k:
                    new.append(Z)
                    continue
                v = pk * rowi[j]
                if f and rowk[j]:
                    v = v - f * rowk[j]
                if v and not (prev == 1):
                    v = v.exact_div(prev)
                new.append(v)
            new[k] = Z
            M[i] = new
        prev = pk
    # every diagonal entry of the left half now equals the last pivot (= ±det)
    out = {}
    for p in range(m):
        d = M[p][p]
        for q in range(m):
            v = M[p][m + q]
            if not v:
                continue
            try:
                v = v.exact_div(d)
            except NotDivisible:
                raise NotDivisible("inverse entry is not a Laurent polynomial") from None
            out[(cols[p], rows[q])] = v._t
    return out


def invert(a: SparseOp) -> SparseOp:
    """Exact inverse, computed independently on each connected block of the sparsity pattern."""
    n = a.size
    e = {}
    for comp in _components(a):
        rows = [x for x in comp if x < n]
        cols = [x - n for x in comp if x >= n]
        if len(rows) != len(cols):
            raise SingularMatrix("sparsity pattern is not square on a block; matrix is singular")
        if len(rows) == 1:
            v = a._e.get((rows[0], cols[0]))
            if not v:
                raise SingularMatrix("zero row/column")
            p = MultiLaurent(a.ctx, v)
            inv = p.unit_inverse() if p.is_unit() else None
            if inv is None:
                raise NotDivisible("inverse entry is not a Laurent polynomial")
            e[(cols[0], rows[0])] = inv._t
            continue
        e.update(_invert_block(rows, cols, a))
    return SparseOp(a.dim, a.arity, a.ctx, e)
