"""Exact multivariate Laurent polynomials over the Gaussian rationals.

A polynomial lives in a :class:`VarContext`, which fixes an ordered list of
*internal* variables.  Half-integer powers of a display variable are handled
by making its square root the internal variable (``t = u**2``), so that all
arithmetic happens in an honest Laurent ring.

Internally a polynomial is a dict ``{key: coeff}``.  The exponent vector is
packed into a single integer with signed base-2**16 digits, so multiplying
monomials is integer addition.  The imaginary unit ``i`` (written zeta in the
R-matrix literature) is carried as the lowest digit, restricted to 0 or 1 and
reduced with ``i**2 = -1``.  Coefficients are therefore plain ``int`` or
``Fraction``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

__all__ = [
    "GaussRational",
    "VarContext",
    "MultiLaurent",
    "RationalFn",
    "ContextMismatch",
    "NotDivisible",
    "parse_poly",
    "parse_rational",
]

BITS = 16
BASE = 1 << BITS
HALF = BASE >> 1
MASK = BASE - 1
MAX_EXP = HALF - 1


class ContextMismatch(ValueError):
    pass


class NotDivisible(ArithmeticError):
    pass


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {x!r} to an exact rational")


def _norm(c):
    """Collapse integral Fractions to int (keeps dict values small and fast)."""
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _fmt_rat(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class GaussRational:
    """``re + im*i`` with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    @classmethod
    def coerce(cls, x) -> "GaussRational":
        if isinstance(x, GaussRational):
            return x
        if isinstance(x, complex):
            raise TypeError("floating complex numbers are not exact")
        return cls(x, 0)

    def __add__(self, other):
        o = GaussRational.coerce(other)
        return GaussRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussRational.coerce(other)
        return GaussRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussRational.coerce(other) - self

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __mul__(self, other):
        o = GaussRational.coerce(other)
        return GaussRational(self.re * o.re - self.im * o.im,
                             self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self):
        return GaussRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other):
        o = GaussRational.coerce(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        p = self * o.conjugate()
        return GaussRational(p.re / n, p.im / n)

    def __rtruediv__(self, other):
        return GaussRational.coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return (GaussRational(1) / self) ** (-k)
        out = GaussRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        try:
            o = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_gaussian_integer(self) -> bool:
        return self.re.denominator == 1 and self.im.denominator == 1

    def __str__(self):
        return _fmt_coeff(self.re, self.im)

    def __repr__(self):
        return f"GaussRational({_fmt_rat(self.re)!r}, {_fmt_rat(self.im)!r})"


ZETA = GaussRational(0, 1)


def _fmt_coeff(re_, im_) -> str:
    if im_ == 0:
        return _fmt_rat(re_)
    if im_ == 1:
        ims = "i"
    elif im_ == -1:
        ims = "-i"
    else:
        ims = f"{_fmt_rat(im_)}*i"
    if re_ == 0:
        return ims
    sign = "-" if ims.startswith("-") else "+"
    return f"({_fmt_rat(re_)}{sign}{ims.lstrip('-')})"


class VarContext:
    """Ordered internal variables plus the display layer for square roots.

    ``roots`` maps an internal variable to ``(display_name, degree)``; e.g.
    ``{"u": ("t", 2)}`` means the internal ``u`` is ``t**(1/2)``.  Internal
    variables without an entry display as themselves.
    """

    __slots__ = ("names", "roots", "_index", "_display")

    def __init__(self, names: Iterable[str], roots: Mapping[str, tuple[str, int]] | None = None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for n in names:
            if n in ("i", "zeta") or not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", n):
                raise ValueError(f"bad variable name {n!r}")
        roots = dict(roots or {})
        for k, (disp, deg) in roots.items():
            if k not in names:
                raise ValueError(f"root entry for unknown variable {k!r}")
            if deg < 1:
                raise ValueError("root degree must be positive")
        displays = [roots.get(n, (n, 1))[0] for n in names]
        if len(set(displays)) != len(displays):
            raise ValueError("display names must be distinct")
        self.names = names
        self.roots = roots
        self._index = {n: i for i, n in enumerate(names)}
        self._display = {roots.get(n, (n, 1))[0]: (n, roots.get(n, (n, 1))[1]) for n in names}

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self._index[name]

    def resolve(self, name: str) -> tuple[str, int]:
        """Map an internal or display name to ``(internal, root_degree)``."""
        if name in self._index:
            return name, 1
        if name in self._display:
            return self._display[name]
        raise KeyError(f"unknown variable {name!r} in context {self.names}")

    def display_name(self, name: str) -> tuple[str, int]:
        return self.roots.get(name, (name, 1))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, VarContext):
            return NotImplemented
        return self.names == other.names and self.roots == other.roots

    def __hash__(self):
        return hash((self.names, tuple(sorted(self.roots.items()))))

    def __repr__(self):
        if self.roots:
            return f"VarContext({list(self.names)}, roots={self.roots})"
        return f"VarContext({list(self.names)})"

    def to_json(self) -> dict:
        return {
            "names": list(self.names),
            "roots": {k: [d, deg] for k, (d, deg) in self.roots.items()},
        }

    @classmethod
    def from_json(cls, obj) -> "VarContext":
        return cls(obj["names"], {k: (v[0], int(v[1])) for k, v in obj.get("roots", {}).items()})

    # convenience constructors
    def var(self, name: str) -> "MultiLaurent":
        return MultiLaurent.var(self, name)

    def const(self, c) -> "MultiLaurent":
        return MultiLaurent.constant(self, c)

    def zero(self) -> "MultiLaurent":
        return MultiLaurent(self, {})

    def one(self) -> "MultiLaurent":
        return MultiLaurent(self, {0: 1})

    def parse(self, text: str) -> "MultiLaurent":
        return parse_poly(text, self)


# --- packed key helpers -------------------------------------------------------

def encode(exps: Iterable[int], z: int = 0) -> int:
    k = z
    shift = BITS
    for e in exps:
        if not -MAX_EXP <= e <= MAX_EXP:
            raise OverflowError(f"exponent {e} outside supported range")
        k += e << shift
        shift += BITS
    return k


def decode(k: int, n: int) -> tuple[tuple[int, ...], int]:
    z = k & MASK
    k >>= BITS
    out = []
    for _ in range(n):
        d = k & MASK
        if d >= HALF:
            d -= BASE
        out.append(d)
        k = (k - d) >> BITS
    if k:
        raise OverflowError("exponent overflow in packed monomial")
    return tuple(out), z


# --- raw dict kernels (hot paths) ----------------------------------------------

def _add(a: dict, b: dict) -> dict:
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) + c
        if v:
            out[k] = v
        else:
            del out[k]
    return out


def _iadd(acc: dict, b: dict, sign: int = 1) -> None:
    for k, c in b.items():
        v = acc.get(k, 0) + (c if sign == 1 else -c)
        if v:
            acc[k] = v
        else:
            del acc[k]


def _scale(a: dict, c) -> dict:
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def _mul(a: dict, b: dict) -> dict:
    if len(a) > len(b):
        a, b = b, a
    out: dict = {}
    get = out.get
    bi = list(b.items())
    for ka, ca in a.items():
        for kb, cb in bi:
            k = ka + kb
            if k & MASK == 2:
                out[k - 2] = get(k - 2, 0) - ca * cb
            else:
                out[k] = get(k, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def _addmul(acc: dict, a: dict, b: dict) -> None:
    """acc += a*b in place; zero entries are left for the caller to prune."""
    get = acc.get
    bi = list(b.items())
    for ka, ca in a.items():
        for kb, cb in bi:
            k = ka + kb
            if k & MASK == 2:
                acc[k - 2] = get(k - 2, 0) - ca * cb
            else:
                acc[k] = get(k, 0) + ca * cb


def _prune(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


def _gauss_terms(t: dict, n: int) -> dict:
    """{exps: [re, im]} view of a raw dict."""
    out: dict = {}
    for k, c in t.items():
        z = k & MASK
        e = k - z
        slot = out.get(e)
        if slot is None:
            slot = out[e] = [0, 0]
        slot[z] += c
    return out


def _from_gauss(e: int, re_, im_) -> dict:
    d = {}
    if re_:
        d[e] = _norm(re_)
    if im_:
        d[e + 1] = _norm(im_)
    return d


class MultiLaurent:
    """Immutable Laurent polynomial in the internal variables of ``ctx``."""

    __slots__ = ("ctx", "_t", "_hash")

    def __init__(self, ctx: VarContext, terms: dict | None = None):
        self.ctx = ctx
        self._t = terms if terms is not None else {}
        self._hash = None

    # construction ---------------------------------------------------------
    @classmethod
    def constant(cls, ctx: VarContext, c) -> "MultiLaurent":
        if isinstance(c, MultiLaurent):
            c._check(ctx)
            return c
        g = GaussRational.coerce(c)
        return cls(ctx, _from_gauss(0, g.re, g.im))

    @classmethod
    def var(cls, ctx: VarContext, name: str, power: int = 1) -> "MultiLaurent":
        internal, deg = ctx.resolve(name)
        if deg != 1:
            raise ValueError(f"{name!r} is a display variable; use {internal!r} or parse with a rational exponent")
        exps = [0] * ctx.nvars
        exps[ctx.index(internal)] = power
        return cls(ctx, {encode(exps): 1})

    @classmethod
    def monomial(cls, ctx: VarContext, exps: Iterable[int], coeff=1) -> "MultiLaurent":
        g = GaussRational.coerce(coeff)
        exps = tuple(exps)
        if len(exps) != ctx.nvars:
            raise ValueError("exponent vector length does not match the context")
        return cls(ctx, _from_gauss(encode(exps), g.re, g.im))

    @classmethod
    def from_terms(cls, ctx: VarContext, terms: Mapping[tuple, object]) -> "MultiLaurent":
        acc: dict = {}
        for exps, c in terms.items():
            exps = tuple(exps)
            if len(exps) != ctx.nvars:
                raise ValueError("exponent vector length does not match the context")
            g = GaussRational.coerce(c)
            _iadd(acc, _from_gauss(encode(exps), g.re, g.im))
        return cls(ctx, acc)

    # views ------------------------------------------------------------------
    def terms(self) -> dict[tuple[int, ...], GaussRational]:
        n = self.ctx.nvars
        out = {}
        for e, (re_, im_) in _gauss_terms(self._t, n).items():
            if re_ or im_:
                out[decode(e, n)[0]] = GaussRational(re_, im_)
        return dict(sorted(out.items()))

    def __len__(self):
        return len(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def is_constant(self) -> bool:
        return all(k - (k & MASK) == 0 for k in self._t)

    def constant_value(self) -> GaussRational:
        if not self.is_constant():
            raise ValueError("not a constant")
        return GaussRational(self._t.get(0, 0), self._t.get(1, 0))

    def is_unit(self) -> bool:
        """True for c*monomial with c != 0 (the units of the Laurent ring)."""
        if not self._t:
            return False
        ks = list(self._t)
        e0 = ks[0] - (ks[0] & MASK)
        return all(k - (k & MASK) == e0 for k in ks)

    def is_real(self) -> bool:
        return all(not (k & MASK) for k in self._t)

    def has_integer_coefficients(self) -> bool:
        return all(type(c) is int or c.denominator == 1 for c in self._t.values())

    def exponent_vectors(self) -> list[tuple[int, ...]]:
        return list(self.terms())

    # arithmetic ------------------------------------------------------------
    def _check(self, ctx):
        if ctx is not self.ctx and ctx != self.ctx:
            raise ContextMismatch(f"context mismatch: {self.ctx} vs {ctx}")

    def _lift(self, other) -> dict:
        if isinstance(other, MultiLaurent):
            self._check(other.ctx)
            return other._t
        if isinstance(other, (int, Fraction, GaussRational)):
            g = GaussRational.coerce(other)
            return _from_gauss(0, g.re, g.im)
        raise TypeError(f"cannot combine MultiLaurent with {type(other).__name__}")

    def __add__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return MultiLaurent(self.ctx, _add(self._t, o))

    __radd__ = __add__

    def __neg__(self):
        return MultiLaurent(self.ctx, {k: -v for k, v in self._t.items()})

    def __sub__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return MultiLaurent(self.ctx, _add(self._t, {k: -v for k, v in o.items()}))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MultiLaurent(self.ctx, _scale(self._t, _norm(Fraction(other)) if type(other) is Fraction else other))
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return MultiLaurent(self.ctx, _mul(self._t, o))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("integer powers only")
        if k < 0:
            return self.unit_inverse() ** (-k)
        out = MultiLaurent(self.ctx, {0: 1})
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def unit_inverse(self) -> "MultiLaurent":
        if not self.is_unit():
            raise NotDivisible("only c*monomial is invertible in a Laurent ring")
        ks = list(self._t)
        e0 = ks[0] - (ks[0] & MASK)
        c = GaussRational(self._t.get(e0, 0), self._t.get(e0 + 1, 0))
        inv = GaussRational(1) / c
        return MultiLaurent(self.ctx, _from_gauss(-e0, inv.re, inv.im))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, GaussRational)):
            g = GaussRational(1) / GaussRational.coerce(other)
            return self * MultiLaurent(self.ctx, _from_gauss(0, g.re, g.im))
        if isinstance(other, MultiLaurent):
            return self.exact_div(other)
        return NotImplemented

    def exact_div(self, other: "MultiLaurent") -> "MultiLaurent":
        """Quotient ``self / other``, raising :class:`NotDivisible` if inexact."""
        self._check(other.ctx)
        if not other._t:
            raise ZeroDivisionError("division by zero polynomial")
        if other.is_unit():
            return self * other.unit_inverse()
        n = self.ctx.nvars
        b = {decode(e, n)[0]: GaussRational(re_, im_)
             for e, (re_, im_) in _gauss_terms(other._t, n).items() if re_ or im_}
        r = {decode(e, n)[0]: GaussRational(re_, im_)
             for e, (re_, im_) in _gauss_terms(self._t, n).items() if re_ or im_}
        if not r:
            return MultiLaurent(self.ctx, {})
        # per-variable exponent window of an exact quotient
        lo = [min(e[i] for e in r) - min(e[i] for e in b) for i in range(n)]
        hi = [max(e[i] for e in r) - max(e[i] for e in b) for i in range(n)]
        if any(a > z for a, z in zip(lo, hi)):
            raise NotDivisible("polynomial division is not exact")
        b_lead = max(b)
        b_lc = b[b_lead]
        q: dict = {}
        while r:
            lead = max(r)
            qe = tuple(x - y for x, y in zip(lead, b_lead))
            if any(x < a or x > z for x, a, z in zip(qe, lo, hi)):
                raise NotDivisible("polynomial division is not exact")
            qc = r[lead] / b_lc
            q[qe] = qc
            for be, bc in b.items():
                e = tuple(x + y for x, y in zip(qe, be))
                v = r.get(e, GaussRational(0)) - qc * bc
                if v:
                    r[e] = v
                else:
                    r.pop(e, None)
        return MultiLaurent.from_terms(self.ctx, q)

    def divides(self, other: "MultiLaurent") -> bool:
        try:
            other.exact_div(self)
        except NotDivisible:
            return False
        return True

    def __eq__(self, other):
        if isinstance(other, MultiLaurent):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                return False
            return self._t == other._t
        if isinstance(other, (int, Fraction, GaussRational)):
            g = GaussRational.coerce(other)
            return self._t == _from_gauss(0, g.re, g.im)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    # structure -------------------------------------------------------------
    def content_unit(self) -> "MultiLaurent":
        """Largest monomial dividing every term (lowest exponent per variable)."""
        if not self._t:
            return MultiLaurent(self.ctx, {0: 1})
        vecs = [decode(k - (k & MASK), self.ctx.nvars)[0] for k in self._t]
        low = [min(v[i] for v in vecs) for i in range(self.ctx.nvars)]
        return MultiLaurent(self.ctx, {encode(low): 1})

    def leading(self) -> tuple[tuple[int, ...], GaussRational]:
        t = self.terms()
        e = max(t)
        return e, t[e]

    def degree_range(self, var: str) -> tuple[int, int]:
        i = self.ctx.index(var)
        vals = [e[i] for e in self.terms()]
        return min(vals), max(vals)

    def map_coefficients(self, f) -> "MultiLaurent":
        return MultiLaurent.from_terms(self.ctx, {e: f(c) for e, c in self.terms().items()})

    def conjugate(self) -> "MultiLaurent":
        return MultiLaurent(self.ctx, {k: (-v if k & MASK else v) for k, v in self._t.items()})

    # substitution & evaluation ---------------------------------------------
    def substitute(self, assignments: Mapping[str, object], target: VarContext | None = None) -> "MultiLaurent":
        """Replace variables by polynomials of ``target`` (default: same context).

        Keys may be internal names or display names.  Assigning a display
        variable ``t = u**2`` fixes ``u`` to the square root of the value,
        which must then be a monomial with even exponents and coefficient 1.
        Variables left unassigned are carried over by name into ``target``.
        """
        target = target or self.ctx
        images: dict[str, MultiLaurent] = {}
        for key, val in assignments.items():
            internal, deg = self.ctx.resolve(key)
            if not isinstance(val, MultiLaurent):
                val = MultiLaurent.constant(target, val)
            val._check(target)
            if deg != 1:
                val = val._root(deg)
            images[internal] = val
        for name in self.ctx.names:
            if name not in images:
                try:
                    images[name] = MultiLaurent.var(target, target.resolve(name)[0]) \
                        if target.resolve(name)[1] == 1 else None
                except KeyError:
                    images[name] = None
        n = self.ctx.nvars
        cache: dict = {}
        acc: dict = {}
        for k, c in self._t.items():
            exps, z = decode(k - (k & MASK), n)
            z = k & MASK
            term = {z: c}
            for name, e in zip(self.ctx.names, exps):
                if e == 0:
                    continue
                img = images[name]
                if img is None:
                    raise KeyError(f"variable {name!r} not assigned and absent from target context")
                if e < 0 and not img.is_unit():
                    raise ValueError(f"non-monomial assignment for {name!r}, which appears with a negative exponent")
                p = cache.get((name, e))
                if p is None:
                    p = cache[(name, e)] = (img ** e)._t
                term = _mul(term, p)
            _iadd(acc, term)
        return MultiLaurent(target, acc)

    def _root(self, deg: int) -> "MultiLaurent":
        if not self.is_unit():
            raise ValueError("can only take roots of monomials")
        (exps, coeff), = self.terms().items()
        if coeff != 1 or any(e % deg for e in exps):
            raise ValueError(f"value is not a perfect {deg}-th power monomial")
        return MultiLaurent.monomial(self.ctx, [e // deg for e in exps])

    def eval(self, point: Mapping[str, object]) -> GaussRational:
        n = self.ctx.nvars
        vals = []
        for name in self.ctx.names:
            if name in point:
                vals.append(GaussRational.coerce(point[name]))
                continue
            disp, deg = self.ctx.display_name(name)
            if disp in point:
                raise ValueError(f"evaluate {name!r} (a root of {disp!r}) directly")
            vals.append(None)
        total = GaussRational(0)
        cache: dict = {}
        for e, (re_, im_) in _gauss_terms(self._t, n).items():
            if not (re_ or im_):
                continue
            exps = decode(e, n)[0]
            term = GaussRational(re_, im_)
            for i, x in enumerate(exps):
                if x == 0:
                    continue
                v = vals[i]
                if v is None:
                    raise KeyError(f"no value for variable {self.ctx.names[i]!r}")
                if x < 0 and not v:
                    raise ZeroDivisionError(f"zero assigned to {self.ctx.names[i]!r}, which has a negative exponent")
                p = cache.get((i, x))
                if p is None:
                    p = cache[(i, x)] = v ** x
                term = term * p
            total = total + term
        return total

    # text / json -----------------------------------------------------------
    def to_string(self, display: bool = False) -> str:
        t = self.terms()
        if not t:
            return "0"
        parts = []
        for exps, c in t.items():
            mono = []
            for name, e in zip(self.ctx.names, exps):
                if e == 0:
                    continue
                if display:
                    disp, deg = self.ctx.display_name(name)
                    q = Fraction(e, deg)
                    if q == 1:
                        mono.append(disp)
                    elif q.denominator == 1:
                        mono.append(f"{disp}^{q.numerator}")
                    else:
                        mono.append(f"{disp}^({q.numerator}/{q.denominator})")
                else:
                    mono.append(name if e == 1 else f"{name}^{e}")
            cs = _fmt_coeff(c.re, c.im)
            if mono:
                if cs == "1":
                    s = "*".join(mono)
                elif cs == "-1":
                    s = "-" + "*".join(mono)
                else:
                    s = cs + "*" + "*".join(mono)
            else:
                s = cs
            parts.append(s)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __str__(self):
        return self.to_string(display=True)

    def __repr__(self):
        return f"MultiLaurent({self.to_string()!r})"

    def to_json(self) -> list[dict]:
        return [
            {"exponents": list(e), "re": _fmt_rat(c.re), "im": _fmt_rat(c.im)}
            for e, c in self.terms().items()
        ]

    @classmethod
    def from_json(cls, ctx: VarContext, obj) -> "MultiLaurent":
        return cls.from_terms(ctx, {
            tuple(item["exponents"]): GaussRational(Fraction(item["re"]), Fraction(item["im"]))
            for item in obj
        })


# --- text grammar ----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str):
    pos = 0
    toks = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        num, ident, op = m.groups()
        if num is not None:
            toks.append(("num", int(num)))
        elif ident is not None:
            toks.append(("id", ident))
        elif op is not None and not op.isspace():
            if op not in "+-*/^()":
                raise ValueError(f"unexpected character {op!r} in {text!r}")
            toks.append(("op", op))
        pos = m.end()
    return toks


class _Parser:
    def __init__(self, text, ctx):
        self.toks = _tokenize(text)
        self.i = 0
        self.ctx = ctx
        self.text = text

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, val=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (val and tok[1] != val):
            raise ValueError(f"parse error near token {self.i} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self):
        if not self.toks:
            raise ValueError("empty polynomial text")
        out = self.expr()
        if self.i != len(self.toks):
            raise ValueError(f"trailing input in {self.text!r}")
        return out

    def expr(self):
        acc = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            rhs = self.unary()
            acc = acc * rhs if op == "*" else acc / rhs
        return acc

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def exponent(self) -> Fraction:
        if self.peek() == ("op", "("):
            self.take()
            sign = -1 if self.peek() == ("op", "-") else 1
            if sign < 0:
                self.take()
            num = self.take("num")[1]
            den = 1
            if self.peek() == ("op", "/"):
                self.take()
                den = self.take("num")[1]
            self.take("op", ")")
            return Fraction(sign * num, den)
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        return Fraction(sign * self.take("num")[1])

    def power(self):
        kind, val = self.peek()
        if kind == "id" and val not in ("i", "zeta"):
            self.take()
            internal, deg = self.ctx.resolve(val)
            e = Fraction(1)
            if self.peek() == ("op", "^"):
                self.take()
                e = self.exponent()
            k = e * deg
            if k.denominator != 1:
                raise ValueError(f"exponent {e} of {val!r} is not representable in this context")
            return MultiLaurent.var(self.ctx, internal, int(k))
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            e = self.exponent()
            if e.denominator != 1:
                raise ValueError("fractional powers of compound expressions are not supported")
            base = base ** int(e)
        return base

    def atom(self):
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return MultiLaurent.constant(self.ctx, val)
        if kind == "id":
            self.take()
            return MultiLaurent.constant(self.ctx, ZETA)
        if (kind, val) == ("op", "("):
            self.take()
            inner = self.expr()
            self.take("op", ")")
            return inner
        raise ValueError(f"parse error near token {self.i} in {self.text!r}")


def parse_poly(text: str, ctx: VarContext) -> MultiLaurent:
    """Parse ``coeff*var^exp*...`` terms joined by ``+``/``-``.

    ``i`` (or ``zeta``) is the imaginary unit, exponents may be negative or
    ``(p/q)`` for display variables that are roots, and ``/`` divides by
    constants or monomials.
    """
    return _Parser(text, ctx).parse()


class _RationalParser(_Parser):
    def power(self):
        out = super().power()
        return out if isinstance(out, RationalFn) else RationalFn(out, reduce=False)


def parse_rational(text: str, ctx: VarContext) -> "RationalFn":
    """Like :func:`parse_poly`, but ``/`` may divide by any nonzero expression."""
    return _RationalParser(text, ctx).parse()


# --- rational functions ------------------------------------------------------------

class RationalFn:
    """Quotient ``num/den`` of Laurent polynomials; equality is by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: MultiLaurent, den: MultiLaurent | None = None, *, reduce: bool = True):
        if den is None:
            den = MultiLaurent(num.ctx, {0: 1})
        num._check(den.ctx)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den
        if reduce:
            self._reduce()

    @property
    def ctx(self):
        return self.num.ctx

    def _reduce(self):
        num, den = self.num, self.den
        if num.is_zero():
            self.num, self.den = num, MultiLaurent(num.ctx, {0: 1})
            return
        if den.is_unit():
            self.num, self.den = num * den.unit_inverse(), MultiLaurent(num.ctx, {0: 1})
            return
        try:
            q = num.exact_div(den)
        except NotDivisible:
            pass
        else:
            self.num, self.den = q, MultiLaurent(num.ctx, {0: 1})
            return
        # normalise the denominator: lowest monomial 1, leading coefficient 1
        u = den.content_unit()
        e, lc = (den * u.unit_inverse()).leading()
        scale = u * lc
        inv = scale.unit_inverse()
        self.num, self.den = num * inv, den * inv

    @classmethod
    def lift(cls, x, ctx: VarContext) -> "RationalFn":
        if isinstance(x, RationalFn):
            return x
        if isinstance(x, MultiLaurent):
            return cls(x, reduce=False)
        return cls(MultiLaurent.constant(ctx, x), reduce=False)

    def __add__(self, other):
        o = RationalFn.lift(other, self.ctx)
        if self.den == o.den:
            return RationalFn(self.num + o.num, self.den)
        return RationalFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-RationalFn.lift(other, self.ctx))

    def __rsub__(self, other):
        return RationalFn.lift(other, self.ctx) - self

    def __mul__(self, other):
        o = RationalFn.lift(other, self.ctx)
        return RationalFn(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RationalFn.lift(other, self.ctx)
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFn(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return RationalFn.lift(other, self.ctx) / self

    def __pow__(self, k: int):
        if k < 0:
            return RationalFn(self.den, self.num) ** (-k)
        return RationalFn(self.num ** k, self.den ** k)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        try:
            o = RationalFn.lift(other, self.ctx)
        except (TypeError, ContextMismatch):
            return NotImplemented
        return self.num * o.den == o.num * self.den

    __hash__ = None

    def is_laurent(self) -> bool:
        return self.den.is_unit()

    def to_laurent(self) -> MultiLaurent:
        if self.den.is_unit():
            return self.num * self.den.unit_inverse()
        return self.num.exact_div(self.den)

    def eval(self, point) -> GaussRational:
        d = self.den.eval(point)
        if not d:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return self.num.eval(point) / d

    def substitute(self, assignments, target=None) -> "RationalFn":
        return RationalFn(self.num.substitute(assignments, target), self.den.substitute(assignments, target))

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFn({self.num.to_string()!r}, {self.den.to_string()!r})"
