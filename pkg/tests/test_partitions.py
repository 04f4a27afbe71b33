from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from skeinkit.partitions import (
    EMPTY,
    Hook,
    Partition,
    as_hook,
    content_power_sum,
    content_sum,
    hooks_of,
    k_lambda,
    mn_character,
    omega,
    parse_partition,
    partitions_of,
    rearrangements,
    z_mu,
)
from skeinkit.ring import LaurentPoly, psi_N, quantum_int


def P(*parts):
    return Partition(tuple(parts))


small_partitions = st.integers(0, 7).flatmap(
    lambda m: st.sampled_from(partitions_of(m))
)


# -- construction and syntax ---------------------------------------------------

def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    with pytest.raises(ValueError):
        Partition((-1,))
    assert P().weight == 0 and P().length == 0
    assert P(4, 2, 1).weight == 7


def test_parse_and_render():
    assert parse_partition("[3,2,1]") == P(3, 2, 1)
    assert parse_partition("[]") == EMPTY
    assert parse_partition("(2|2)") == P(3, 1, 1)
    assert str(P(3, 2)) == "[3,2]"
    with pytest.raises(ValueError):
        parse_partition("[2,3]")
    with pytest.raises(ValueError):
        parse_partition("3,2")


# -- rearrangement count -------------------------------------------------------

def test_k_lambda_paper_values():
    assert k_lambda(P(4, 4, 4, 2, 2, 1, 1, 1)) == 560
    assert k_lambda(P(3, 3, 1, 1, 1)) == 10
    for m in range(1, 9):
        assert k_lambda(P(m)) == 1


def test_k_lambda_counts_rearrangements_brute_force():
    for m in range(0, 9):
        for lam in partitions_of(m):
            distinct = set(permutations(lam.parts))
            assert k_lambda(lam) == len(distinct)
            assert sorted(rearrangements(lam)) == sorted(distinct)


# -- contents ------------------------------------------------------------------

def test_content_sum_examples():
    assert content_sum(P(1)) == 0
    assert content_sum(P(2, 1)) == 0
    for m in range(1, 9):
        for hook in hooks_of(m):
            assert 2 * content_sum(hook.partition()) == m * (hook.arm - hook.leg)


def test_content_power_sum_hooks():
    # on an m-hook the content power sum collapses to [m] s^(a-b)
    for m in range(1, 8):
        for hook in hooks_of(m):
            want = quantum_int(m) * LaurentPoly.monomial(1, 0, hook.arm - hook.leg)
            assert content_power_sum(hook.partition(), 1) == want
    assert content_power_sum(P(1), 3) == LaurentPoly.monomial(1)
    assert content_power_sum(P(2), 2) == 1 + LaurentPoly.monomial(1, 0, 4)


@given(small_partitions, st.integers(1, 4))
def test_content_power_sum_is_psi_of_base_case(lam, n):
    assert content_power_sum(lam, n) == psi_N(content_power_sum(lam, 1), n)


# -- cycle-type order ----------------------------------------------------------

def test_z_mu_examples():
    assert z_mu(P(1, 1, 1)) == 6
    assert z_mu(P(2, 1)) == 2
    assert z_mu(P(3)) == 3
    assert z_mu(EMPTY) == 1


def test_z_mu_sums_to_factorial():
    for m in range(1, 8):
        assert sum(factorial(m) // z_mu(mu) for mu in partitions_of(m)) \
            == sum(1 for mu in partitions_of(m) for _ in range(factorial(m) // z_mu(mu)))
        total = sum(factorial(m) // z_mu(mu) * 1 for mu in partitions_of(m))
        # class sizes partition the symmetric group
        assert total == factorial(m)


# -- hooks ----------------------------------------------------------------------

def test_hooks_of():
    assert hooks_of(1) == [Hook(0, 0)]
    assert hooks_of(3) == [Hook(2, 0), Hook(1, 1), Hook(0, 2)]
    assert len(hooks_of(7)) == 7
    assert as_hook(P(3, 1, 1)) == Hook(2, 2)
    assert as_hook(P(2, 2)) is None


def test_omega():
    assert omega(P(2, 2)) == 0
    assert omega(P(3, 1, 1)) == 1
    assert omega(P(1, 1)) == -1
    assert omega(EMPTY) == 0


# -- characters ------------------------------------------------------------------

def hook_length_dimension(lam):
    """Independent oracle: the hook-length formula for dim of the
    irreducible representation indexed by lam."""
    conj = lam.conjugate().parts
    dim = factorial(lam.weight)
    for i, j in lam.cells():
        dim //= (lam.parts[i] - j) + (conj[j] - i) - 1
    return dim


def test_character_weight_mismatch():
    with pytest.raises(ValueError):
        mn_character(P(2), P(1))


def test_character_examples():
    assert mn_character(P(1, 1), P(2)) == -1
    assert mn_character(P(2, 1), P(1, 1, 1)) == 2
    assert mn_character(EMPTY, EMPTY) == 1


def test_character_on_full_cycle_is_omega():
    for m in range(1, 10):
        for lam in partitions_of(m):
            assert mn_character(lam, P(m)) == omega(lam)


def test_character_dimension_matches_hook_lengths():
    for m in range(1, 8):
        ones = Partition((1,) * m)
        for lam in partitions_of(m):
            assert mn_character(lam, ones) == hook_length_dimension(lam)


def test_character_column_orthogonality():
    for m in range(1, 8):
        for mu in partitions_of(m):
            for rho in partitions_of(m):
                total = sum(
                    mn_character(lam, mu) * mn_character(lam, rho)
                    for lam in partitions_of(m)
                )
                assert total == (z_mu(mu) if mu == rho else 0)
