"""Independent reference implementations used to derive expected values.

Nothing here touches the R-matrix engine.  The Conway oracle works directly on
the braid diagram: it switches crossings until the diagram is descending (an
unlink) and collects the smoothings on the way.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product

from knotpoly.laurent import MultiLaurent, VarContext


def _poly_add(a: dict, b: dict, scale: int = 1, shift: int = 0) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k + shift] = out.get(k + shift, 0) + scale * v
    return {k: v for k, v in out.items() if v}


def _components(strands: int, letters: tuple) -> int:
    pos = list(range(strands))
    for k in letters:
        a = abs(k) - 1
        pos[a], pos[a + 1] = pos[a + 1], pos[a]
    seen, count = set(), 0
    for s in range(strands):
        if s in seen:
            continue
        count += 1
        while s not in seen:
            seen.add(s)
            s = pos[s]
    return count


def _first_bad_crossing(strands: int, letters: tuple) -> int | None:
    """Index of the first crossing met from below on a base-point walk, if any.

    Components are walked in order of their lowest starting strand, each from
    the bottom of that strand.  Convention: at ``σ_i`` the strand entering at
    position ``i`` (left) passes over, at ``σ_i^{-1}`` the right one does.
    """
    n = len(letters)
    perm = list(range(strands))
    for k in letters:
        a = abs(k) - 1
        perm[a], perm[a + 1] = perm[a + 1], perm[a]
    seen_crossing = [False] * n
    done = set()
    for start in range(strands):
        if start in done:
            continue
        p = start
        while True:
            done.add(p)
            q = p
            for idx, k in enumerate(letters):
                a = abs(k) - 1
                if q == a or q == a + 1:
                    came_left = q == a
                    over = came_left if k > 0 else not came_left
                    if not seen_crossing[idx]:
                        seen_crossing[idx] = True
                        if not over:
                            return idx
                    q = a + 1 if came_left else a
            p = q
            if p == start:
                break
    return None


@lru_cache(maxsize=None)
def conway(strands: int, letters: tuple) -> tuple:
    """Conway polynomial of the closure as a sorted tuple of (power of z, coefficient)."""
    bad = _first_bad_crossing(strands, letters)
    if bad is None:
        return ((0, 1),) if _components(strands, letters) == 1 else ()
    e = letters[bad]
    switched = letters[:bad] + (-e,) + letters[bad + 1:]
    smoothed = letters[:bad] + letters[bad + 1:]
    # ∇(L+) - ∇(L-) = z ∇(L0)
    sign = 1 if e > 0 else -1
    total = _poly_add(dict(conway(strands, switched)), dict(conway(strands, smoothed)), sign, 1)
    return tuple(sorted(total.items()))


def conway_alexander(strands: int, letters, ctx: VarContext | None = None) -> MultiLaurent:
    """``Δ(t) = ∇(t^{-1/2} - t^{1/2})`` over the root variable ``u`` (``t = u²``)."""
    ctx = ctx or VarContext(["u"], {"u": ("t", 2)})
    u = ctx.var(ctx.names[0])
    z = u ** -1 - u
    out = ctx.zero()
    for power, c in conway(strands, tuple(letters)):
        out = out + z ** power * c
    return out


# --- dense linear algebra over Fractions -------------------------------------------------

def dense(op, point: dict) -> list[list[Fraction]]:
    """Evaluate a SparseOp at a rational point into a dense matrix of Fractions."""
    size = op.dim ** op.arity
    m = [[Fraction(0)] * size for _ in range(size)]
    for (r, c), v in op.items_flat():
        g = v.eval(point)
        assert g.im == 0, "dense oracle is real-only"
        m[r][c] = Fraction(g.re)
    return m


def matmul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = [[Fraction(0)] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                row = out[i]
                for j in range(m):
                    if bt[j]:
                        row[j] += x * bt[j]
    return out


def kron(a, b):
    return [[x * y for x in ra for y in rb] for ra in a for rb in b]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def dense_partial_trace_last(m, d: int):
    """Trace out the last tensor factor of dimension ``d``."""
    n = len(m) // d
    return [[sum(m[i * d + k][j * d + k] for k in range(d)) for j in range(n)] for i in range(n)]


def dense_ybe_residual(R, d: int) -> bool:
    I = identity(d)
    A, B = kron(R, I), kron(I, R)
    return matmul(matmul(A, B), A) == matmul(matmul(B, A), B)


def all_indices(d: int, arity: int):
    return product(range(d), repeat=arity)
