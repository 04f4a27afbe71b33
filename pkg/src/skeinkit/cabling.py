"""Torus-link cabling in the annulus skein.

The (m, n) cable pattern acts on decorations by a fractional framing twist
composed with plethysm by the degree-m power sum; decorating with a power
sum collapses to an explicit alternating sum over hooks, and the power-sum
meridian operators factor through the same hook sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .partitions import hooks_of
from .ring import LaurentPoly, RatFunc, brace
from .skein import delta_PN, delta_phi, fractional_twist, framing_twist
from .symfunc import BasisExpansion, SymElement, from_basis, plethysm_by_pm, power_sum


class CoprimalityError(ValueError):
    """Cable operation invoked on a non-coprime (strings, twists) pair."""


@dataclass(frozen=True)
class CableSpec:
    """An (m, n) torus cable: m strings, n twists (n may be negative)."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"cable needs m >= 1, got {self.m}")

    @property
    def coprime(self) -> bool:
        return gcd(self.m, abs(self.n)) == 1

    def require_coprime(self):
        if not self.coprime:
            raise CoprimalityError(
                f"cable ({self.m}, {self.n}) needs coprime strings and twists"
            )


def cable_decorate(spec: CableSpec, q: SymElement) -> SymElement:
    """Decorate the (m, n) torus pattern with q: twist^{n/m} of q[P_m]."""
    spec.require_coprime()
    return fractional_twist(plethysm_by_pm(q, spec.m), spec.n, spec.m)


def torus_power_sum(spec: CableSpec, d: int) -> SymElement:
    """The (m, n) pattern decorated by the degree-d power sum, as the
    explicit hook sum sum_{(a|b) |- md} (-1)^b v^{-nd} s^{nd(a-b)} Q_(a|b)."""
    spec.require_coprime()
    if d < 1:
        raise ValueError(f"torus_power_sum needs d >= 1, got {d}")
    terms = {}
    for hook in hooks_of(spec.m * d):
        coeff = LaurentPoly.monomial(
            -1 if hook.leg % 2 else 1,
            -spec.n * d,
            spec.n * d * (hook.arm - hook.leg),
        )
        terms[hook.partition()] = RatFunc(coeff)
    return from_basis(BasisExpansion("schur", terms))


def power_hopf_check(m_big: int, n_big: int):
    """Both sides of the power-sum meridian identity
    Delta_{P_N}(P_M) = {MN} T_{M/d}^{N/d} * P_d with d = gcd(M, N).

    Returns (lhs, rhs, equal); the sides stay separate so failures can be
    inspected term by term.
    """
    if m_big < 1 or n_big < 1:
        raise ValueError("power_hopf_check needs M, N >= 1")
    d = gcd(m_big, n_big)
    lhs = delta_PN(power_sum(m_big), n_big)
    rhs = torus_power_sum(CableSpec(m_big // d, n_big // d), d) * brace(m_big * n_big)
    return lhs, rhs, lhs == rhs


def framing_change_identity(m_big: int) -> bool:
    """Check Delta_{P_M}(P_M) = {M^2} tau(P_M), the framing-change case."""
    if m_big < 1:
        raise ValueError("framing_change_identity needs M >= 1")
    lhs = delta_PN(power_sum(m_big), m_big)
    rhs = framing_twist(power_sum(m_big)) * brace(m_big * m_big)
    return lhs == rhs
