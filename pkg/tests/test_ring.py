import doctest

import pytest
from hypothesis import given, strategies as st

import skeinkit.ring
from skeinkit.ring import (
    RF_ONE,
    FormalSeries,
    LaurentPoly,
    RatFunc,
    S,
    S_INV,
    SpecializationError,
    V,
    V_INV,
    Z,
    alpha,
    brace,
    delta_const,
    he_involution,
    mirror_coeff,
    psi_N,
    quantum_int,
    series_inverse,
    series_log,
    series_mul,
    specialize_slN,
)

# -- strategies ---------------------------------------------------------------

coeffs = st.integers(min_value=-9, max_value=9).filter(lambda c: c != 0)
exponents = st.tuples(st.integers(-3, 3), st.integers(-3, 3))
laurent_polys = st.dictionaries(exponents, coeffs, max_size=4).map(LaurentPoly)
nonzero_polys = laurent_polys.filter(lambda p: not p.is_zero())
rat_funcs = st.tuples(laurent_polys, nonzero_polys).map(lambda nd: RatFunc(*nd))
nonzero_rats = rat_funcs.filter(lambda r: not r.is_zero())


def mono(c, a=0, b=0):
    return LaurentPoly.monomial(c, a, b)


# -- quantum integers, braces, alpha ------------------------------------------

def test_quantum_int_values():
    assert quantum_int(1) == 1
    assert quantum_int(2) == S + S_INV
    assert quantum_int(3) == S ** 2 + 1 + S_INV ** 2


def test_quantum_int_domain():
    with pytest.raises(ValueError):
        quantum_int(0)
    with pytest.raises(ValueError):
        quantum_int(-3)


def test_brace_values():
    assert brace(1) == S - S_INV
    assert brace(1) == Z
    assert brace(4) == mono(1, 0, 4) - mono(1, 0, -4)
    with pytest.raises(ValueError):
        brace(0)


def test_brace_factors_through_quantum_int():
    for n in range(1, 21):
        assert brace(n) == quantum_int(n) * brace(1)
    assert brace(3) != brace(1) + brace(2)


def test_alpha_values():
    assert alpha(1) == 1
    assert alpha(2) == S ** 2 + 1
    assert alpha(3) == mono(1, 0, 3) * (S + S_INV) * (S ** 2 + 1 + S_INV ** 2)


# -- delta and the coefficient involutions ------------------------------------

def test_delta_const():
    assert delta_const() == RatFunc(V_INV - V, S - S_INV)


def test_delta_is_mirror_symmetric():
    # Substituting v -> v^-1, s -> s^-1 negates numerator and denominator
    # alike, so the unknot value is fixed by the mirror map.
    d = delta_const()
    assert mirror_coeff(d) == d


def test_delta_specializes_to_quantum_int():
    assert specialize_slN(delta_const(), 2) == RatFunc(quantum_int(2))
    assert specialize_slN(delta_const(), 3) == RatFunc(quantum_int(3))


def test_mirror_coeff_examples():
    assert mirror_coeff(Z) == -Z
    for m in range(1, 9):
        assert mirror_coeff(quantum_int(m)) == quantum_int(m)
    assert mirror_coeff(RatFunc(1)) == RatFunc(1)


def test_he_involution_examples():
    for k in range(1, 7):
        lhs = he_involution(RatFunc(quantum_int(k) * mono(1, 0, k)))
        assert lhs == RatFunc(-quantum_int(k), mono(1, 0, k))
    assert he_involution(RatFunc(Z)) == RatFunc(Z)
    assert he_involution(RatFunc(V)) == RatFunc(V)


def test_psi_N_examples():
    assert psi_N(Z, 3) == brace(3)
    assert psi_N(delta_const(), 1) == delta_const()
    assert psi_N(RatFunc(brace(1) * V_INV), 2) == RatFunc(brace(2) * V_INV ** 2)
    with pytest.raises(ValueError):
        psi_N(Z, 0)


def test_specialize_examples():
    assert specialize_slN(V_INV, 2) == S ** 2
    assert specialize_slN(Z, 5) == Z
    with pytest.raises(SpecializationError):
        specialize_slN(RatFunc(1, V - S_INV ** 2), 2)


@given(rat_funcs)
def test_involutions_are_involutions(f):
    assert mirror_coeff(mirror_coeff(f)) == f
    assert he_involution(he_involution(f)) == f


@given(rat_funcs, st.integers(1, 4), st.integers(1, 4))
def test_psi_composes(f, m, n):
    assert psi_N(f, 1) == f
    assert psi_N(psi_N(f, m), n) == psi_N(f, m * n)


# -- ring and field axioms -----------------------------------------------------

@given(laurent_polys, laurent_polys, laurent_polys)
def test_laurent_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + LaurentPoly() == a
    assert a * LaurentPoly.monomial(1) == a


@given(rat_funcs, rat_funcs, rat_funcs)
def test_ratfunc_field_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == RatFunc(0)


@given(nonzero_rats)
def test_ratfunc_multiplicative_inverse(a):
    assert a * a.inverse() == RF_ONE
    assert (a / a).is_one()


@given(rat_funcs, nonzero_polys)
def test_cross_multiplication_equality(a, scale):
    assert RatFunc(a.num * scale, a.den * scale) == a


@given(laurent_polys, nonzero_polys)
def test_denominator_sign_normalization(num, den):
    f = RatFunc(num, den)
    if not f.den.is_zero():
        least = min(dict(f.den.terms()))
        assert dict(f.den.terms())[least] > 0


def test_ratfunc_rejects_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        RatFunc(1, LaurentPoly())


def test_ratfunc_is_unhashable():
    with pytest.raises(TypeError):
        hash(RatFunc(1, Z))


# -- truncated series ----------------------------------------------------------

def test_series_inverse_geometric():
    c = RatFunc(V, quantum_int(2))
    inv = series_inverse(FormalSeries(3, [RF_ONE, c]))
    assert inv.coeffs == (RF_ONE, -c, c ** 2, -(c ** 3))


def test_series_log_classical():
    log = series_log(FormalSeries(3, [RF_ONE, RF_ONE]))
    assert log.coeffs == (RatFunc(0), RF_ONE, RatFunc(-1, 2), RatFunc(1, 3))


def test_series_inverse_needs_unit_constant():
    with pytest.raises(ValueError):
        series_inverse(FormalSeries(2, [RatFunc(2)]))
    with pytest.raises(ValueError):
        series_log(FormalSeries(2, [RatFunc(Z)]))


unit_series = st.lists(rat_funcs, min_size=1, max_size=5).map(
    lambda tail: FormalSeries(5, [RF_ONE] + tail)
)


@given(unit_series)
def test_series_inverse_round_trip(a):
    assert series_mul(a, series_inverse(a)) == FormalSeries(5, [RF_ONE])


@given(unit_series, unit_series)
def test_series_log_is_additive(a, b):
    lhs = series_log(series_mul(a, b))
    rhs = series_add_pair(series_log(a), series_log(b))
    assert lhs == rhs


def series_add_pair(a, b):
    return FormalSeries(min(a.order, b.order),
                        [a[k] + b[k] for k in range(min(a.order, b.order) + 1)])


def test_docstrings():
    failures, _ = doctest.testmod(skeinkit.ring)
    assert failures == 0
