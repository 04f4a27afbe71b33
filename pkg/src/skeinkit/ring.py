"""Exact arithmetic over Z[v^{±1}, s^{±1}] and its fraction field.

A ``LaurentPoly`` is a sparse Laurent polynomial in the two framing/skein
variables v and s with arbitrary-precision integer coefficients.  A
``RatFunc`` is a quotient of two of them; equality is decided by
cross-multiplication, so no canonical form is ever needed for correctness.
Reduction at construction time (integer content, denominator monomial shift,
univariate gcd in s) is best-effort and exists only to keep coefficients
small.  ``FormalSeries`` provides truncated power series in an auxiliary
variable t; its coefficient arithmetic is duck-typed so the same routines
serve both rational-function series and series of skein elements.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence


class SpecializationError(ValueError):
    """Raised when a substitution makes a denominator vanish identically."""


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------

class LaurentPoly:
    """Sparse Laurent polynomial in v, s over the integers.

    Terms are stored as a map (exp_v, exp_s) -> nonzero coefficient; the
    empty map is the zero polynomial.

    >>> print(quantum_int(3))
    s^2 + 1 + s^-2
    >>> print(brace(2) * brace(2))
    s^4 - 2 + s^-4
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=()):
        data = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for (a, b), c in items:
            key = (a, b)
            acc = data.get(key, 0) + c
            if acc:
                data[key] = acc
            else:
                data.pop(key, None)
        self._terms = data
        self._hash = None

    @classmethod
    def _raw(cls, data: dict) -> "LaurentPoly":
        # Trusted constructor: data has no zero values and is not shared.
        self = object.__new__(cls)
        self._terms = data
        self._hash = None
        return self

    @classmethod
    def monomial(cls, coeff: int, exp_v: int = 0, exp_s: int = 0) -> "LaurentPoly":
        return cls._raw({(exp_v, exp_s): coeff}) if coeff else cls._raw({})

    @classmethod
    def coerce(cls, x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls.monomial(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # -- predicates

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(0, 0): 1}

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def terms(self):
        return self._terms.items()

    # -- arithmetic

    def __add__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        data = dict(self._terms)
        for key, c in other._terms.items():
            acc = data.get(key, 0) + c
            if acc:
                data[key] = acc
            else:
                data.pop(key, None)
        return LaurentPoly._raw(data)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if not self._terms or not other._terms:
            return LaurentPoly._raw({})
        small, big = self._terms, other._terms
        if len(small) > len(big):
            small, big = big, small
        data = {}
        for (a1, b1), c1 in small.items():
            for (a2, b2), c2 in big.items():
                key = (a1 + a2, b1 + b2)
                acc = data.get(key, 0) + c1 * c2
                if acc:
                    data[key] = acc
                else:
                    del data[key]
        return LaurentPoly._raw(data)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) == 1:
                ((a, b), c), = self._terms.items()
                if c in (1, -1):
                    return LaurentPoly.monomial(c, -a, -b) ** (-n)
            raise ValueError("negative power of a non-unit Laurent polynomial")
        result = LaurentPoly.monomial(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.monomial(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- substitutions

    def sub_mirror(self) -> "LaurentPoly":
        """v -> v^{-1}, s -> s^{-1}."""
        return LaurentPoly._raw({(-a, -b): c for (a, b), c in self._terms.items()})

    def sub_he(self) -> "LaurentPoly":
        """s -> -s^{-1}, v fixed."""
        return LaurentPoly._raw(
            {(a, -b): (c if b % 2 == 0 else -c) for (a, b), c in self._terms.items()}
        )

    def sub_psi(self, n: int) -> "LaurentPoly":
        """v -> v^n, s -> s^n."""
        return LaurentPoly._raw({(a * n, b * n): c for (a, b), c in self._terms.items()})

    def sub_v_power_of_s(self, k: int) -> "LaurentPoly":
        """v -> s^k (exponents may collide, so coefficients are merged)."""
        data = {}
        for (a, b), c in self._terms.items():
            key = (0, b + k * a)
            acc = data.get(key, 0) + c
            if acc:
                data[key] = acc
            else:
                del data[key]
        return LaurentPoly._raw(data)

    # -- rendering

    def __str__(self):
        if not self._terms:
            return "0"
        chunks = []
        for key in sorted(self._terms, reverse=True):
            a, b = key
            c = self._terms[key]
            factors = []
            if a:
                factors.append("v" if a == 1 else f"v^{a}")
            if b:
                factors.append("s" if b == 1 else f"s^{b}")
            if abs(c) != 1 or not factors:
                factors.insert(0, str(abs(c)))
            term = "*".join(factors)
            if not chunks:
                chunks.append(term if c > 0 else "-" + term)
            else:
                chunks.append((" + " if c > 0 else " - ") + term)
        return "".join(chunks)

    def __repr__(self):
        return f"LaurentPoly('{self}')"

    def to_json(self) -> dict:
        return {f"{a},{b}": c for (a, b), c in sorted(self._terms.items(), reverse=True)}

    @classmethod
    def from_json(cls, obj: dict) -> "LaurentPoly":
        terms = {}
        for key, c in obj.items():
            a, b = (int(part) for part in key.split(","))
            terms[(a, b)] = int(c)
        return cls(terms)


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly.monomial(1)
V = LaurentPoly.monomial(1, 1, 0)
S = LaurentPoly.monomial(1, 0, 1)
V_INV = LaurentPoly.monomial(1, -1, 0)
S_INV = LaurentPoly.monomial(1, 0, -1)
Z = S - S_INV


def quantum_int(n: int) -> LaurentPoly:
    """The quantum integer [n] = s^{n-1} + s^{n-3} + ... + s^{1-n}."""
    if n <= 0:
        raise ValueError(f"quantum integer needs n >= 1, got {n}")
    return LaurentPoly._raw({(0, n - 1 - 2 * k): 1 for k in range(n)})


def brace(n: int) -> LaurentPoly:
    """{n} = s^n - s^{-n}."""
    if n <= 0:
        raise ValueError(f"brace needs n >= 1, got {n}")
    return LaurentPoly._raw({(0, n): 1, (0, -n): -1})


def quantum_factorial(m: int) -> LaurentPoly:
    """[m]! = [1][2]...[m]."""
    if m < 0:
        raise ValueError("negative quantum factorial")
    out = ONE
    for k in range(2, m + 1):
        out = out * quantum_int(k)
    return out


def alpha(m: int) -> LaurentPoly:
    """s^{m(m-1)/2} [m]!, the quasi-idempotent normalisation factor."""
    if m <= 0:
        raise ValueError(f"alpha needs m >= 1, got {m}")
    return LaurentPoly.monomial(1, 0, m * (m - 1) // 2) * quantum_factorial(m)


# ---------------------------------------------------------------------------
# Best-effort reduction helpers (dense integer polynomials in s, ascending)
# ---------------------------------------------------------------------------

def _zp_content(f):
    g = 0
    for c in f:
        g = math.gcd(g, c)
        if g == 1:
            return 1
    return g


def _zp_prim(f):
    while f and f[-1] == 0:
        f.pop()
    if not f:
        return f
    g = _zp_content(f)
    if f[-1] < 0:
        g = -g
    if g != 1:
        f = [c // g for c in f]
    return f


def _zp_prem(f, g):
    # Pseudo-remainder of f by g, both nonzero, deg f >= deg g.
    r = list(f)
    dg = len(g) - 1
    lg = g[-1]
    while r and len(r) - 1 >= dg:
        lr = r[-1]
        r = [lg * c for c in r]
        shift = len(r) - 1 - dg
        for i, gc in enumerate(g):
            r[shift + i] -= lr * gc
        while r and r[-1] == 0:
            r.pop()
    return r


def _zp_gcd(f, g):
    f = _zp_prim(list(f))
    g = _zp_prim(list(g))
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _zp_prem(f, g)
        f, g = g, _zp_prim(r)
    return f


def _zp_divexact(f, g):
    # Exact division in Z[s]; asserts the remainder vanishes.
    r = list(f)
    lg = g[-1]
    q = [0] * (len(f) - len(g) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = r[k + len(g) - 1]
        if c == 0:
            continue
        qc, rem = divmod(c, lg)
        assert rem == 0, "inexact division in reduction"
        q[k] = qc
        for i, gc in enumerate(g):
            r[k + i] -= qc * gc
    assert not any(r), "nonzero remainder in reduction"
    return q


def _reduce_pair(num: dict, den: dict):
    """Best-effort reduction of a terms-dict fraction; preserves the value."""
    if not num:
        return {}, {(0, 0): 1}
    # integer content
    g = 0
    for c in num.values():
        g = math.gcd(g, c)
        if g == 1:
            break
    if g != 1:
        for c in den.values():
            g = math.gcd(g, c)
            if g == 1:
                break
    if g > 1:
        num = {k: c // g for k, c in num.items()}
        den = {k: c // g for k, c in den.items()}
    # shift so the denominator has minimal exponents (0, 0)
    dv = min(a for a, _ in den)
    ds = min(b for _, b in den)
    if dv or ds:
        den = {(a - dv, b - ds): c for (a, b), c in den.items()}
        num = {(a - dv, b - ds): c for (a, b), c in num.items()}
    # univariate gcd in s when the denominator does not involve v
    if len(den) > 1 and all(a == 0 for a, _ in den):
        dmax = max(b for _, b in den)
        dd = [0] * (dmax + 1)
        for (_, b), c in den.items():
            dd[b] = c
        cols = {}
        for (a, b), c in num.items():
            cols.setdefault(a, {})[b] = c
        g = dd
        dense_cols = {}
        for a, col in cols.items():
            lo = min(col)
            hi = max(col)
            dense = [col.get(b, 0) for b in range(lo, hi + 1)]
            dense_cols[a] = (lo, dense)
            g = _zp_gcd(g, dense)
            if len(g) == 1:
                break
        if len(g) > 1:
            dd = _zp_divexact(dd, g)
            den = {(0, b): c for b, c in enumerate(dd) if c}
            num = {}
            for a, (lo, dense) in dense_cols.items():
                for b, c in enumerate(_zp_divexact(dense, g)):
                    if c:
                        num[(a, b + lo)] = c
    return num, den


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------

class RatFunc:
    """Quotient of two Laurent polynomials.

    Equality is by cross-multiplication, so instances are deliberately
    unhashable; reduction at construction is best-effort only.  The
    denominator sign is normalised so that its term of lexicographically
    least (exp_v, exp_s) has a positive coefficient.
    """

    __slots__ = ("num", "den")
    __hash__ = None

    def __init__(self, num, den=1):
        num = LaurentPoly.coerce(num)
        den = LaurentPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in RatFunc")
        nt, dt = _reduce_pair(num._terms, den._terms)
        if dt[min(dt)] < 0:
            nt = {k: -c for k, c in nt.items()}
            dt = {k: -c for k, c in dt.items()}
        self.num = LaurentPoly._raw(nt)
        self.den = LaurentPoly._raw(dt)

    @classmethod
    def coerce(cls, x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        return cls(LaurentPoly.coerce(x))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == self.den

    # -- arithmetic

    def __add__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(RatFunc)
        out.num = -self.num
        out.den = self.den
        return out

    def __sub__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero RatFunc")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) / self

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = RatFunc.coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    # -- rendering

    def __str__(self):
        if self.den.is_one():
            return f"({self.num})"
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc('{self}')"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "RatFunc":
        return cls(LaurentPoly.from_json(obj["num"]), LaurentPoly.from_json(obj["den"]))


RF_ZERO = RatFunc(0)
RF_ONE = RatFunc(1)


def delta_const() -> RatFunc:
    """The unknot value (v^{-1} - v)/(s - s^{-1})."""
    return RatFunc(V_INV - V, Z)


def _dispatch_sub(f, poly_op):
    if isinstance(f, LaurentPoly):
        return poly_op(f)
    if isinstance(f, int):
        return f
    if isinstance(f, RatFunc):
        return RatFunc(poly_op(f.num), poly_op(f.den))
    raise TypeError(f"unsupported operand {type(f).__name__}")


def mirror_coeff(f):
    """Coefficient conjugation v -> v^{-1}, s -> s^{-1}; an involution."""
    return _dispatch_sub(f, lambda p: p.sub_mirror())


def he_involution(f):
    """The substitution s -> -s^{-1}, which swaps complete and elementary."""
    return _dispatch_sub(f, lambda p: p.sub_he())


def psi_N(f, n: int):
    """The ring map v -> v^N, s -> s^N."""
    if n < 1:
        raise ValueError(f"psi_N needs N >= 1, got {n}")
    return _dispatch_sub(f, lambda p: p.sub_psi(n))


def specialize_slN(f, n: int):
    """Substitute v -> s^{-N}, landing in Laurent polynomials in s alone."""
    if n < 1:
        raise ValueError(f"specialize_slN needs N >= 1, got {n}")
    if isinstance(f, LaurentPoly):
        return f.sub_v_power_of_s(-n)
    if isinstance(f, int):
        return f
    if isinstance(f, RatFunc):
        den = f.den.sub_v_power_of_s(-n)
        if den.is_zero():
            raise SpecializationError(f"denominator vanishes at v = s^-{n}")
        return RatFunc(f.num.sub_v_power_of_s(-n), den)
    raise TypeError(f"unsupported operand {type(f).__name__}")


# ---------------------------------------------------------------------------
# Truncated formal power series
# ---------------------------------------------------------------------------

def _coeff_is_one(c) -> bool:
    probe = getattr(c, "is_one", None)
    if probe is not None:
        return probe()
    return c == 1


@dataclass(frozen=True)
class FormalSeries:
    """Power series in t truncated at degree ``order`` (inclusive).

    Coefficients are any ring-like values supporting +, -, * and division
    by integers; rational-function series use RatFunc coefficients.
    """

    order: int
    coeffs: tuple

    def __init__(self, order: int, coeffs: Sequence):
        if order < 0:
            raise ValueError("series order must be >= 0")
        coeffs = list(coeffs)
        if not coeffs:
            raise ValueError("need at least the constant coefficient")
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        while len(coeffs) < order + 1:
            coeffs.append(coeffs[0] - coeffs[0])
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __eq__(self, other):
        if not isinstance(other, FormalSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return all(self.coeffs[k] == other.coeffs[k] for k in range(n + 1))


def series_add(a: FormalSeries, b: FormalSeries) -> FormalSeries:
    order = min(a.order, b.order)
    return FormalSeries(order, [a[k] + b[k] for k in range(order + 1)])


def series_scale(a: FormalSeries, c) -> FormalSeries:
    return FormalSeries(a.order, [x * c for x in a.coeffs])


def series_mul(a: FormalSeries, b: FormalSeries) -> FormalSeries:
    order = min(a.order, b.order)
    out = []
    for n in range(order + 1):
        acc = a[0] * b[n]
        for k in range(1, n + 1):
            acc = acc + a[k] * b[n - k]
        out.append(acc)
    return FormalSeries(order, out)


def series_inverse(a: FormalSeries) -> FormalSeries:
    """Multiplicative inverse; the constant term must be 1."""
    if not _coeff_is_one(a[0]):
        raise ValueError("series inverse needs constant term 1")
    inv = [a[0]]
    for n in range(1, a.order + 1):
        acc = a[1] * inv[n - 1]
        for k in range(2, n + 1):
            acc = acc + a[k] * inv[n - k]
        inv.append(-acc)
    return FormalSeries(a.order, inv)


def series_log(a: FormalSeries) -> FormalSeries:
    """Formal logarithm sum_{k>=1} (-1)^{k+1} (a-1)^k / k; needs a(0) = 1."""
    if not _coeff_is_one(a[0]):
        raise ValueError("series log needs constant term 1")
    zero = a[0] - a[0]
    u = FormalSeries(a.order, [zero] + [a[k] for k in range(1, a.order + 1)])
    acc = [zero] * (a.order + 1)
    power = u
    for k in range(1, a.order + 1):
        for n in range(k, a.order + 1):
            term = power[n] / k
            acc[n] = acc[n] + (term if k % 2 == 1 else -term)
        if k < a.order:
            power = series_mul(power, u)
    return FormalSeries(a.order, acc)
