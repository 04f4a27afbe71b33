"""Skein elements as symmetric functions over the fraction field.

The canonical internal form is the power-sum basis: a ``SymElement`` is a
finite map partition -> RatFunc read as sum c_mu p_mu, where
p_mu = p_{mu_1} ... p_{mu_l}.  Multiplication is concatenation of
partitions, plethysm by a power sum is index substitution, and every other
basis (h, e, Schur, Turaev A) is reached by an exact closed-form change of
basis recorded in a ``BasisExpansion``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .partitions import EMPTY, Partition, mn_character, parse_partition, partitions_of, z_mu
from .ring import LaurentPoly, RatFunc

BASES = ("p", "h", "e", "schur", "A")

_Scalar = (int, LaurentPoly, RatFunc)


# -- free-monomial maps {Partition: RatFunc}; shared by every basis ----------

def _fmap_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for key, c in b.items():
        if key in out:
            acc = out[key] + c
            if acc.is_zero():
                del out[key]
            else:
                out[key] = acc
        else:
            out[key] = c
    return out


def _fmap_scale(a: dict, c) -> dict:
    c = RatFunc.coerce(c)
    if c.is_zero():
        return {}
    return {key: coeff * c for key, coeff in a.items()}


def _fmap_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for lam, c1 in a.items():
        for mu, c2 in b.items():
            key = lam.concat(mu)
            c = c1 * c2
            if key in out:
                acc = out[key] + c
                if acc.is_zero():
                    del out[key]
                else:
                    out[key] = acc
            else:
                out[key] = c
    return out


def _fmap_clean(a: dict) -> dict:
    return {key: c for key, c in a.items() if not c.is_zero()}


class SymElement:
    """Element of the positive annulus skein in the power-sum basis."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict):
        self._terms = _fmap_clean(terms)

    @classmethod
    def _raw(cls, terms: dict) -> "SymElement":
        self = object.__new__(cls)
        self._terms = terms
        return self

    @classmethod
    def zero(cls) -> "SymElement":
        return cls._raw({})

    @classmethod
    def unit(cls) -> "SymElement":
        return cls._raw({EMPTY: RatFunc(1)})

    @classmethod
    def term(cls, lam: Partition, coeff=1) -> "SymElement":
        coeff = RatFunc.coerce(coeff)
        return cls._raw({} if coeff.is_zero() else {lam: coeff})

    def terms(self):
        return self._terms.items()

    def coeff(self, lam: Partition) -> RatFunc:
        return self._terms.get(lam, RatFunc(0))

    def support(self):
        return set(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return set(self._terms) == {EMPTY} and self._terms[EMPTY].is_one()

    def degrees(self) -> set[int]:
        return {lam.weight for lam in self._terms}

    def graded_component(self, m: int) -> dict:
        return {lam: c for lam, c in self._terms.items() if lam.weight == m}

    # -- arithmetic

    def __add__(self, other):
        if isinstance(other, _Scalar):
            other = SymElement.term(EMPTY, other)
        if not isinstance(other, SymElement):
            return NotImplemented
        return SymElement._raw(_fmap_add(self._terms, other._terms))

    __radd__ = __add__

    def __neg__(self):
        return SymElement._raw({lam: -c for lam, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, _Scalar):
            other = SymElement.term(EMPTY, other)
        if not isinstance(other, SymElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _Scalar):
            return SymElement._raw(_fmap_scale(self._terms, other))
        if not isinstance(other, SymElement):
            return NotImplemented
        return SymElement._raw(_fmap_mul(self._terms, other._terms))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _Scalar):
            return self * RatFunc.coerce(other).inverse()
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, _Scalar):
            other = SymElement.term(EMPTY, other)
        if not isinstance(other, SymElement):
            return NotImplemented
        if set(self._terms) != set(other._terms):
            return False
        return all(c == other._terms[lam] for lam, c in self._terms.items())

    __hash__ = None

    def __str__(self):
        return render_terms(self._terms, "p")

    def __repr__(self):
        return f"SymElement('{self}')"


def mul(f: SymElement, g: SymElement) -> SymElement:
    return f * g


@lru_cache(maxsize=None)
def power_sum(m: int) -> SymElement:
    """p_m; the unit for m = 0."""
    if m < 0:
        raise ValueError(f"power_sum needs m >= 0, got {m}")
    if m == 0:
        return SymElement.unit()
    return SymElement.term(Partition((m,)))


@lru_cache(maxsize=None)
def complete(m: int) -> SymElement:
    """h_m via the Newton recurrence m h_m = sum_{k=1}^{m} p_k h_{m-k}."""
    if m < 0:
        raise ValueError(f"complete needs m >= 0, got {m}")
    if m == 0:
        return SymElement.unit()
    acc = SymElement.zero()
    for k in range(1, m + 1):
        acc = acc + power_sum(k) * complete(m - k)
    return acc / m


@lru_cache(maxsize=None)
def elementary(m: int) -> SymElement:
    """e_m via m e_m = sum_{k=1}^{m} (-1)^{k-1} p_k e_{m-k}."""
    if m < 0:
        raise ValueError(f"elementary needs m >= 0, got {m}")
    if m == 0:
        return SymElement.unit()
    acc = SymElement.zero()
    for k in range(1, m + 1):
        term = power_sum(k) * elementary(m - k)
        acc = acc + (term if k % 2 == 1 else -term)
    return acc / m


def schur(lam: Partition) -> SymElement:
    """s_lambda = sum_mu chi_lambda(mu)/z_mu p_mu (Frobenius formula)."""
    terms = {}
    for mu in partitions_of(lam.weight):
        chi = mn_character(lam, mu)
        if chi:
            terms[mu] = RatFunc(chi, z_mu(mu))
    return SymElement._raw(terms)


def jacobi_trudi(lam: Partition) -> SymElement:
    """det(h_{lam_i + j - i}) expanded over h-monomials; Schur oracle."""
    l = lam.length
    if l == 0:
        return SymElement.unit()
    total = SymElement.zero()
    for perm in permutations(range(l)):
        degrees = [lam.parts[i] + perm[i] - i for i in range(l)]
        if any(d < 0 for d in degrees):
            continue
        inversions = sum(
            1 for i in range(l) for j in range(i + 1, l) if perm[i] > perm[j]
        )
        prod = SymElement.unit()
        for d in degrees:
            prod = prod * complete(d)
        total = total + (prod if inversions % 2 == 0 else -prod)
    return total


def plethysm_by_pm(f: SymElement, m: int) -> SymElement:
    """f[P_m]: substitute p_j -> p_{jm}, coefficients untouched."""
    if m < 1:
        raise ValueError(f"plethysm_by_pm needs m >= 1, got {m}")
    if m == 1:
        return f
    return SymElement._raw(
        {Partition(tuple(p * m for p in lam.parts)): c for lam, c in f.terms()}
    )


# ---------------------------------------------------------------------------
# Basis expansions
# ---------------------------------------------------------------------------

@dataclass
class BasisExpansion:
    """A skein element written in a named monomial basis."""

    basis: str
    terms: dict

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        self.terms = {
            lam: RatFunc.coerce(c)
            for lam, c in self.terms.items()
            if not RatFunc.coerce(c).is_zero()
        }

    def coeff(self, lam: Partition) -> RatFunc:
        return self.terms.get(lam, RatFunc(0))

    def __eq__(self, other):
        if not isinstance(other, BasisExpansion):
            return NotImplemented
        if self.basis != other.basis or set(self.terms) != set(other.terms):
            return False
        return all(c == other.terms[lam] for lam, c in self.terms.items())

    def __str__(self):
        return render_terms(self.terms, self.basis)

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [
                {"partition": list(lam.parts), "coeff": self.terms[lam].to_json()}
                for lam in sorted(self.terms, reverse=True)
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "BasisExpansion":
        terms = {}
        for entry in obj["terms"]:
            lam = Partition(tuple(int(p) for p in entry["partition"]))
            terms[lam] = RatFunc.from_json(entry["coeff"])
        return cls(obj["basis"], terms)


# p_m written in the h- and e-monomial algebras, from the Newton recurrences.

@lru_cache(maxsize=None)
def _p_in_h(m: int) -> tuple:
    if m == 0:
        return ((EMPTY, RatFunc(1)),)
    acc = _fmap_scale({Partition((m,)): RatFunc(1)}, m)
    for k in range(1, m):
        prev = _fmap_mul(dict(_p_in_h(k)), {Partition((m - k,)): RatFunc(1)})
        acc = _fmap_add(acc, _fmap_scale(prev, -1))
    return tuple(acc.items())


@lru_cache(maxsize=None)
def _p_in_e(m: int) -> tuple:
    # p_m = (-1)^{m-1} m e_m + sum_{k<m} (-1)^{m+k-1} p_k e_{m-k}
    if m == 0:
        return ((EMPTY, RatFunc(1)),)
    acc = _fmap_scale({Partition((m,)): RatFunc(1)}, m if m % 2 == 1 else -m)
    for k in range(1, m):
        prev = _fmap_mul(dict(_p_in_e(k)), {Partition((m - k,)): RatFunc(1)})
        acc = _fmap_add(acc, _fmap_scale(prev, 1 if (m + k) % 2 == 1 else -1))
    return tuple(acc.items())


def _pmono_in(m_expand, lam: Partition) -> dict:
    out = {EMPTY: RatFunc(1)}
    for part in lam.parts:
        out = _fmap_mul(out, dict(m_expand(part)))
    return out


def to_basis(f: SymElement, basis: str) -> BasisExpansion:
    """Exact change of basis from the canonical power-sum form."""
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}")
    if basis == "p":
        return BasisExpansion("p", dict(f.terms()))
    if basis in ("h", "e"):
        expand = _p_in_h if basis == "h" else _p_in_e
        acc: dict = {}
        for lam, c in f.terms():
            acc = _fmap_add(acc, _fmap_scale(_pmono_in(expand, lam), c))
        return BasisExpansion(basis, acc)
    if basis == "schur":
        acc = {}
        for m in f.degrees():
            component = f.graded_component(m)
            for lam in partitions_of(m):
                coeff = RatFunc(0)
                for mu, c in component.items():
                    chi = mn_character(lam, mu)
                    if chi:
                        coeff = coeff + c * chi
                if not coeff.is_zero():
                    acc[lam] = coeff
        return BasisExpansion("schur", acc)
    # Turaev basis: delegated to the skein module
    from .skein import a_basis_expand

    return a_basis_expand(f)


def from_basis(exp: BasisExpansion) -> SymElement:
    """Evaluate a named-basis expansion back to the canonical form."""
    if exp.basis == "p":
        return SymElement(dict(exp.terms))
    if exp.basis in ("h", "e"):
        gen = complete if exp.basis == "h" else elementary
        acc = SymElement.zero()
        for lam, c in exp.terms.items():
            term = SymElement.unit()
            for part in lam.parts:
                term = term * gen(part)
            acc = acc + term * c
        return acc
    if exp.basis == "schur":
        acc = SymElement.zero()
        for lam, c in exp.terms.items():
            acc = acc + schur(lam) * c
        return acc
    from .skein import eval_a_monomial

    acc = SymElement.zero()
    for lam, c in exp.terms.items():
        acc = acc + eval_a_monomial(lam) * c
    return acc


# ---------------------------------------------------------------------------
# Text rendering shared by SymElement, BasisExpansion and the CLI
# ---------------------------------------------------------------------------

_BASIS_ATOM = {"p": "p", "h": "h", "e": "e", "schur": "Q", "A": "A"}


def _coeff_chunks(c: RatFunc) -> tuple[str, str]:
    """Split a coefficient into (sign, magnitude-string); '' for magnitude 1."""
    num, den = c.num, c.den
    lead = max(num._terms)
    if num._terms[lead] < 0:
        num = -num
        sign = "-"
    else:
        sign = "+"
    if den.is_one():
        if num.is_one():
            return sign, ""
        body = str(num)
        return sign, body if num.is_monomial() else f"({body})"
    if (-num).is_one():
        # (-1)/den after sign extraction cannot occur; kept for safety
        return sign, f"1/({den})"
    numstr = str(num) if num.is_monomial() else f"({num})"
    if num.is_one():
        numstr = "1"
    return sign, f"{numstr}/({den})"


def render_terms(terms: dict, basis: str) -> str:
    """Deterministic text form, partitions in descending lex order."""
    if not terms:
        return "0"
    atom = _BASIS_ATOM[basis]
    chunks = []
    for lam in sorted(terms, reverse=True):
        sign, mag = _coeff_chunks(terms[lam])
        if lam == EMPTY:
            body = mag if mag else "1"
        else:
            name = f"{atom}[{','.join(str(p) for p in lam.parts)}]"
            body = f"{mag}*{name}" if mag else name
        if not chunks:
            chunks.append(body if sign == "+" else "-" + body)
        else:
            chunks.append((" + " if sign == "+" else " - ") + body)
    return "".join(chunks)
