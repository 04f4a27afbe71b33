"""Skein structure on the symmetric-function algebra of the annulus.

Provides the Turaev closed-braid basis A_lambda and all transitions into
and out of it, the mirror map, the geometric power-sum representatives
X_m = [m] P_m, the meridian operators and their power-sum generalisations,
and the (fractional) framing twists used by the cabling formula.

The generator A_m is defined through the exponential series identity
exp(z sum_k [k] p_k t^k / k) = 1 + z sum_m A_m t^m; the classical power
series relation with the complete symmetric functions is kept as a checked
invariant rather than a second definition.
"""

from __future__ import annotations

from fractions import Fraction
from dataclasses import dataclass
from functools import lru_cache

from .partitions import (
    EMPTY,
    Partition,
    content_power_sum,
    content_sum,
    k_lambda,
    partitions_of,
    rearrangements,
)
from .ring import (
    FormalSeries,
    LaurentPoly,
    RatFunc,
    S_INV,
    V,
    V_INV,
    Z,
    brace,
    mirror_coeff,
    quantum_int,
)
from .symfunc import (
    BasisExpansion,
    SymElement,
    _fmap_add,
    _fmap_mul,
    _fmap_scale,
    complete,
    from_basis,
    power_sum,
    to_basis,
)


class FractionalExponentError(ValueError):
    """A fractional twist produced a non-integral exponent."""

    def __init__(self, lam: Partition, exponent: "TwistExponent"):
        self.partition = lam
        self.exponent = exponent
        super().__init__(
            f"non-integral twist exponent (v^{exponent.v_exp}, s^{exponent.s_exp}) "
            f"on partition {lam}"
        )


@dataclass(frozen=True)
class TwistExponent:
    """Exact rational exponent pair of a framing-twist eigenvalue v^a s^b."""

    v_exp: Fraction
    s_exp: Fraction

    @classmethod
    def for_partition(cls, lam: Partition, n: int, m: int) -> "TwistExponent":
        return cls(Fraction(-lam.weight * n, m), Fraction(2 * content_sum(lam) * n, m))

    def is_integral(self) -> bool:
        return self.v_exp.denominator == 1 and self.s_exp.denominator == 1

    def monomial(self) -> LaurentPoly:
        return LaurentPoly.monomial(1, int(self.v_exp), int(self.s_exp))


# ---------------------------------------------------------------------------
# Turaev generators
# ---------------------------------------------------------------------------

_exp_cache: list[SymElement] = [SymElement.unit()]


def _log_coeff(k: int) -> SymElement:
    # coefficient of t^k in z sum [k] p_k t^k / k
    return power_sum(k) * RatFunc(Z * quantum_int(k), k)


def _exp_coeff(n: int) -> SymElement:
    while len(_exp_cache) <= n:
        k = len(_exp_cache)
        acc = SymElement.zero()
        for j in range(1, k + 1):
            acc = acc + _log_coeff(j) * _exp_cache[k - j] * j
        _exp_cache.append(acc / k)
    return _exp_cache[n]


@lru_cache(maxsize=None)
def turaev_A(m: int) -> SymElement:
    """The closed m-braid generator A_m as a degree-m element."""
    if m < 1:
        raise ValueError(f"turaev_A needs m >= 1, got {m}")
    return _exp_coeff(m) * RatFunc(1, Z)


@lru_cache(maxsize=None)
def eval_a_monomial(lam: Partition) -> SymElement:
    """The product A_lambda = A_{lam_1} ... A_{lam_l}."""
    if lam == EMPTY:
        return SymElement.unit()
    return eval_a_monomial(Partition(lam.parts[1:])) * turaev_A(lam.parts[0])


@lru_cache(maxsize=None)
def _p_in_A(m: int) -> tuple:
    # p_m = (m/[m]) sum_{lam |- m} (k_lam / l) (-z)^{l-1} A_lam
    out = {}
    qm = quantum_int(m)
    for lam in partitions_of(m):
        l = lam.length
        num = LaurentPoly.monomial(m * k_lambda(lam)) * (-Z) ** (l - 1)
        out[lam] = RatFunc(num, qm * l)
    return tuple(out.items())


@lru_cache(maxsize=None)
def _pmono_in_A(lam: Partition) -> tuple:
    if lam == EMPTY:
        return ((EMPTY, RatFunc(1)),)
    head = dict(_p_in_A(lam.parts[0]))
    tail = dict(_pmono_in_A(Partition(lam.parts[1:])))
    return tuple(_fmap_mul(tail, head).items())


def a_basis_expand(f: SymElement) -> BasisExpansion:
    """Rewrite an element in Turaev monomials A_lambda."""
    acc: dict = {}
    for lam, c in f.terms():
        acc = _fmap_add(acc, _fmap_scale(dict(_pmono_in_A(lam)), c))
    return BasisExpansion("A", acc)


def abar_coeff(lam: Partition) -> RatFunc:
    """Coefficient of A_lambda in the mirrored generator: k_lam (-z)^{l-1}."""
    if lam.weight < 1:
        raise ValueError("abar_coeff needs a nonempty partition")
    return RatFunc(LaurentPoly.monomial(k_lambda(lam)) * (-Z) ** (lam.length - 1))


def abar(m: int) -> BasisExpansion:
    """Mirror image of A_m in the Turaev basis, summed over all lam |- m."""
    if m < 1:
        raise ValueError(f"abar needs m >= 1, got {m}")
    return BasisExpansion("A", {lam: abar_coeff(lam) for lam in partitions_of(m)})


@lru_cache(maxsize=None)
def abar_elem(m: int) -> SymElement:
    """The mirrored generator evaluated back to the power-sum form."""
    return from_basis(abar(m))


def X_elem(m: int) -> SymElement:
    """The geometric power-sum representative, m sum (k/l)(-z)^{l-1} A_lam."""
    if m < 1:
        raise ValueError(f"X_elem needs m >= 1, got {m}")
    acc = SymElement.zero()
    for lam in partitions_of(m):
        l = lam.length
        coeff = RatFunc(LaurentPoly.monomial(m * k_lambda(lam)) * (-Z) ** (l - 1), l)
        acc = acc + eval_a_monomial(lam) * coeff
    return acc


def a_ij(i: int, j: int) -> SymElement:
    """Intermediate closed braid between A_m and its mirror (i, j >= 0):
    A_{i,j} = A_{i+j+1} - z sum_{k=i+1}^{i+j} A_k Abar_{i+j+1-k}."""
    if i < 0 or j < 0:
        raise ValueError("a_ij needs i, j >= 0")
    m = i + j + 1
    acc = turaev_A(m)
    for k in range(i + 1, m):
        acc = acc - turaev_A(k) * abar_elem(m - k) * Z
    return acc


# ---------------------------------------------------------------------------
# Complete and elementary symmetric functions in the Turaev basis
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def theta_rec(lam: Partition) -> RatFunc:
    """Coefficient of A_lambda in h_m, by the recursion
    theta_lam = (1 / s^m [m]) sum over distinct parts u of s^u theta_{lam - u}."""
    if lam == EMPTY:
        return RatFunc(1)
    m = lam.weight
    acc = RatFunc(0)
    for u in sorted(set(lam.parts), reverse=True):
        acc = acc + theta_rec(lam.without_part(u)) * LaurentPoly.monomial(1, 0, u)
    return acc / RatFunc(quantum_int(m) * LaurentPoly.monomial(1, 0, m))


def theta_closed(lam: Partition) -> RatFunc:
    """Closed form: s^m times the sum of c_r over distinct rearrangements r,
    where c_r = prod_i 1 / ([r_1+...+r_i] s^{r_1+...+r_i})."""
    if lam == EMPTY:
        return RatFunc(1)
    m = lam.weight
    acc = RatFunc(0)
    for seq in rearrangements(lam):
        den = LaurentPoly.monomial(1)
        total = 0
        for part in seq:
            total += part
            den = den * quantum_int(total)
        acc = acc + RatFunc(1, den * LaurentPoly.monomial(1, 0, sum(seq[i] * (len(seq) - i) for i in range(len(seq)))))
    return acc * LaurentPoly.monomial(1, 0, m)


def tau_closed(lam: Partition) -> RatFunc:
    """Coefficient of A_lambda in e_m: the image of theta under s -> -s^{-1},
    written directly as (-1)^{m+l} s^{-m} sum_r prod_i s^{sum}/[sum]."""
    if lam == EMPTY:
        return RatFunc(1)
    m, l = lam.weight, lam.length
    acc = RatFunc(0)
    for seq in rearrangements(lam):
        den = LaurentPoly.monomial(1)
        exp = 0
        total = 0
        for part in seq:
            total += part
            den = den * quantum_int(total)
            exp += total
        acc = acc + RatFunc(LaurentPoly.monomial(1, 0, exp), den)
    sign = 1 if (m + l) % 2 == 0 else -1
    return acc * LaurentPoly.monomial(sign, 0, -m)


def h_in_A(m: int) -> BasisExpansion:
    """h_m in the Turaev basis, coefficients from the theta recursion."""
    if m < 1:
        raise ValueError(f"h_in_A needs m >= 1, got {m}")
    return BasisExpansion("A", {lam: theta_rec(lam) for lam in partitions_of(m)})


def e_in_A(m: int) -> BasisExpansion:
    """e_m in the Turaev basis, coefficients from the closed tau formula."""
    if m < 1:
        raise ValueError(f"e_in_A needs m >= 1, got {m}")
    return BasisExpansion("A", {lam: tau_closed(lam) for lam in partitions_of(m)})


@lru_cache(maxsize=None)
def _h_in_A_series_map(m: int) -> tuple:
    # third route: solve [m] h_m = sum_{j<m} s^{-j} h_j A_{m-j} in the
    # free Turaev-monomial algebra
    if m == 0:
        return ((EMPTY, RatFunc(1)),)
    acc: dict = {}
    for j in range(m):
        term = _fmap_mul(
            dict(_h_in_A_series_map(j)), {Partition((m - j,)): RatFunc(1)}
        )
        acc = _fmap_add(acc, _fmap_scale(term, LaurentPoly.monomial(1, 0, -j)))
    return tuple(_fmap_scale(acc, RatFunc(1, quantum_int(m))).items())


def h_in_A_series(m: int) -> BasisExpansion:
    """h_m in the Turaev basis via series inversion of the A/H relation."""
    if m < 1:
        raise ValueError(f"h_in_A_series needs m >= 1, got {m}")
    return BasisExpansion("A", dict(_h_in_A_series_map(m)))


# ---------------------------------------------------------------------------
# Mirror map and diagonal (meridian / twist) operators
# ---------------------------------------------------------------------------

def mirror(f: SymElement) -> SymElement:
    """Conjugate coefficients, fixing every Schur element; an involution."""
    exp = to_basis(f, "schur")
    return from_basis(
        BasisExpansion("schur", {lam: mirror_coeff(c) for lam, c in exp.terms.items()})
    )


def _schur_diagonal(f: SymElement, eigenvalue) -> SymElement:
    exp = to_basis(f, "schur")
    return from_basis(
        BasisExpansion(
            "schur", {lam: c * eigenvalue(lam) for lam, c in exp.terms.items()}
        )
    )


def _t_eigen(lam: Partition) -> LaurentPoly:
    return Z * V_INV * content_power_sum(lam, 1)


def delta_phi(f: SymElement) -> SymElement:
    """Meridian defect map: Q_lam -> {1} v^{-1} (sum_x s^{2c(x)}) Q_lam."""
    return _schur_diagonal(f, _t_eigen)


def delta_phibar(f: SymElement) -> SymElement:
    """Reverse-meridian defect map, with conjugated eigenvalues."""
    return _schur_diagonal(f, lambda lam: _t_eigen(lam).sub_mirror())


def meridian_phi(f: SymElement) -> SymElement:
    """Encircling meridian map: delta_phi plus delta times the identity."""
    from .ring import delta_const

    return delta_phi(f) + f * delta_const()


def meridian_phibar(f: SymElement) -> SymElement:
    from .ring import delta_const

    return delta_phibar(f) + f * delta_const()


def delta_PN(f: SymElement, n: int) -> SymElement:
    """Meridian decorated by the degree-N power sum:
    eigenvalue {N} v^{-N} sum_x s^{2Nc(x)} on Q_lam."""
    if n < 1:
        raise ValueError(f"delta_PN needs N >= 1, got {n}")
    return _schur_diagonal(f, lambda lam: brace(n) * V_INV ** n * content_power_sum(lam, n))


def delta_PN_star(f: SymElement, n: int) -> SymElement:
    """Same with reversed string orientation: -{N} v^N sum_x s^{-2Nc(x)}."""
    if n < 1:
        raise ValueError(f"delta_PN_star needs N >= 1, got {n}")
    return _schur_diagonal(
        f, lambda lam: -brace(n) * V ** n * content_power_sum(lam, n).sub_mirror()
    )


def fractional_twist(f: SymElement, n: int, m: int) -> SymElement:
    """Diagonal map Q_lam -> v^{-|lam| n/m} s^{2 n c(lam)/m} Q_lam.

    Exponents are carried as exact rationals; a non-integral exponent on
    any partition in the Schur support raises FractionalExponentError.
    """
    if m < 1:
        raise ValueError(f"fractional_twist needs m >= 1, got {m}")
    exp = to_basis(f, "schur")
    out = {}
    for lam, c in exp.terms.items():
        tw = TwistExponent.for_partition(lam, n, m)
        if not tw.is_integral():
            raise FractionalExponentError(lam, tw)
        out[lam] = c * tw.monomial()
    return from_basis(BasisExpansion("schur", out))


def framing_twist(f: SymElement) -> SymElement:
    """Full positive framing change: Q_lam -> v^{-|lam|} s^{2 c(lam)} Q_lam."""
    return fractional_twist(f, 1, 1)


# ---------------------------------------------------------------------------
# Generating series used by the identity suites
# ---------------------------------------------------------------------------

def a_series(order: int) -> FormalSeries:
    """1 + z sum A_i t^i as a series of skein elements."""
    coeffs = [SymElement.unit()]
    coeffs += [turaev_A(i) * Z for i in range(1, order + 1)]
    return FormalSeries(order, coeffs)


def abar_series(order: int) -> FormalSeries:
    """1 - z sum Abar_i t^i."""
    coeffs = [SymElement.unit()]
    coeffs += [abar_elem(i) * (-Z) for i in range(1, order + 1)]
    return FormalSeries(order, coeffs)


def h_series(order: int, s_scale: int = 0) -> FormalSeries:
    """H(s^k t) = sum h_n s^{kn} t^n for integer k."""
    coeffs = [
        complete(n) * LaurentPoly.monomial(1, 0, s_scale * n)
        for n in range(order + 1)
    ]
    return FormalSeries(order, coeffs)
