import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pihall.arith import (
    FactoredInt,
    PrimeSet,
    e_star,
    epsilon,
    factor_q_pow_minus_eta,
    factorize,
    r_part_product_closed_form,
    is_prime,
    mult_order,
    pi_part,
    r_part,
    r_part_product,
    r_part_q_pow_minus_1,
    r_part_q_pow_minus_eta,
    symmetric_dominates,
    three_part_product,
    three_part_q_pow_minus_eta,
    two_part_product,
    two_part_q_pow_minus_eta,
)

ODD_Q = [q for q in range(3, 50, 2)]
SMALL_R = [2, 3, 5, 7, 11, 13]


def direct_r_part(n: int, r: int) -> int:
    # independent oracle: repeated division
    out = 1
    n = abs(n)
    while n % r == 0:
        out *= r
        n //= r
    return out


def test_pi_part_examples():
    assert pi_part(48, (2, 3)) == 48
    assert pi_part(120, (2, 3)) == 24
    assert pi_part(1, (2, 3, 5)) == 1


def test_mult_order_examples():
    assert mult_order(7, 3) == 1
    assert mult_order(2, 7) == 3
    assert mult_order(7, 2) == 2
    assert mult_order(5, 2) == 1
    with pytest.raises(ValueError):
        mult_order(6, 3)


def test_e_star_examples():
    assert e_star(1) == 2
    assert e_star(4) == 4
    assert e_star(6) == 3


def test_r_part_q_pow_minus_1_examples():
    assert r_part_q_pow_minus_1(7, 4, 3) == 3
    assert direct_r_part(7**4 - 1, 3) == 3
    assert r_part_q_pow_minus_1(7, 1, 5) == 1
    assert r_part_q_pow_minus_1(3, 2, 2) == 8


def test_r_part_q_pow_minus_eta_examples():
    assert r_part_q_pow_minus_eta(5, 3, 3, 1) == 1
    assert r_part_q_pow_minus_eta(7, 2, 2, 1) == 16
    assert r_part_q_pow_minus_eta(5, 2, 3, -1) == 3


def test_r_part_product_examples():
    assert r_part_product(7, 2, 2, 1) == 32
    # oracle-computed: (5-1)_3 * (5^2-1)_3 = 1 * 3
    assert r_part_product(5, 2, 3, 1) == 3
    assert r_part_product(3, 1, 2, 1) == 2


def test_symmetric_dominates_examples():
    assert symmetric_dominates(7, 5, 3) is True
    assert symmetric_dominates(7, 5, 1) is False
    assert symmetric_dominates(5, 7, 4) is True


def test_epsilon_examples():
    assert epsilon(5) == 1
    assert epsilon(7) == -1
    assert epsilon(13) == 1
    with pytest.raises(ValueError):
        epsilon(8)


def test_factorize_examples():
    assert factorize(168).as_dict() == {2: 3, 3: 1, 7: 1}
    assert factorize(1).as_dict() == {}
    assert factorize(5040).as_dict() == {2: 4, 3: 2, 5: 1, 7: 1}


def test_factorize_large_semiprime():
    n = 1000003 * 1000033
    assert factorize(n).as_dict() == {1000003: 1, 1000033: 1}


def test_factored_int_invariants():
    with pytest.raises(ValueError):
        FactoredInt(12, ((2, 1), (3, 1)))  # does not multiply back
    with pytest.raises(ValueError):
        FactoredInt(4, ((4, 1),))  # key not prime


def test_prime_set():
    ps = PrimeSet([5, 2, 3])
    assert ps.sorted == (2, 3, 5)
    with pytest.raises(ValueError):
        PrimeSet([4])


def test_closed_forms_match_direct_valuation_exhaustively():
    # every closed form equals the direct r-valuation of q^n - eta^n
    for q in ODD_Q:
        for r in SMALL_R:
            if math.gcd(q, r) != 1:
                continue
            for n in range(1, 13):
                for eta in (1, -1):
                    direct = direct_r_part(q**n - eta**n, r)
                    assert r_part_q_pow_minus_eta(q, n, r, eta) == direct, (q, n, r, eta)


def test_specialized_two_three_parts_match_general_form():
    for q in ODD_Q:
        for n in range(1, 13):
            for eta in (1, -1):
                assert two_part_q_pow_minus_eta(q, n, eta) == r_part_q_pow_minus_eta(
                    q, n, 2, eta
                )
                if q % 3 != 0:
                    assert three_part_q_pow_minus_eta(q, n, eta) == r_part_q_pow_minus_eta(
                        q, n, 3, eta
                    )


def test_product_closed_forms():
    for q in ODD_Q:
        for n in range(1, 13):
            for eta in (1, -1):
                direct = direct_r_part(
                    math.prod(q**i - eta**i for i in range(1, n + 1)), 2
                )
                assert two_part_product(q, n, eta) == direct
                assert r_part_product(q, n, 2, eta) == direct
                if q % 3 != 0:
                    direct3 = direct_r_part(
                        math.prod(q**i - eta**i for i in range(1, n + 1)), 3
                    )
                    assert three_part_product(q, n, eta) == direct3
                    assert r_part_product(q, n, 3, eta) == direct3


def test_product_closed_form_odd_r():
    for q in (2, 3, 5, 7, 11, 49):
        for r in (3, 5, 7, 11, 13):
            if math.gcd(q, r) != 1:
                continue
            for n in range(1, 13):
                direct = direct_r_part(
                    math.prod(q**i - 1 for i in range(1, n + 1)), r
                )
                assert r_part_product_closed_form(q, n, r) == direct, (q, n, r)


def test_symmetric_domination_guarantee():
    # guaranteed whenever m >= (r+1)/2
    for q in (5, 7, 11, 13, 25):
        for r in (3, 5, 7, 11, 13):
            if q % r == 0:
                continue
            for m in range((r + 1) // 2, (r + 1) // 2 + 4):
                assert symmetric_dominates(q, r, m), (q, r, m)


@given(
    a=st.integers(min_value=1, max_value=10**6),
    b=st.integers(min_value=1, max_value=10**6),
)
@settings(max_examples=80, deadline=None)
def test_pi_part_multiplicative_over_coprime(a, b):
    if math.gcd(a, b) != 1:
        return
    pi = (2, 3, 5)
    assert pi_part(a * b, pi) == pi_part(a, pi) * pi_part(b, pi)


@given(
    q1=st.integers(min_value=1, max_value=2000),
    q2=st.integers(min_value=1, max_value=2000),
)
@settings(max_examples=80, deadline=None)
def test_epsilon_multiplicative(q1, q2):
    a, b = 2 * q1 + 1, 2 * q2 + 1
    assert epsilon(a) * epsilon(b) == epsilon(a * b)


@given(st.integers(min_value=2, max_value=10**7))
@settings(max_examples=60, deadline=None)
def test_factorize_roundtrip(n):
    f = factorize(n)
    assert math.prod(p**e for p, e in f.factors) == n
    assert all(is_prime(p) for p, _ in f.factors)


@given(
    q=st.sampled_from(ODD_Q),
    r=st.sampled_from(SMALL_R),
    n=st.integers(min_value=1, max_value=20),
)
@settings(max_examples=120, deadline=None)
def test_product_is_termwise_product(q, r, n):
    if math.gcd(q, r) != 1:
        return
    for eta in (1, -1):
        term = 1
        for i in range(1, n + 1):
            term *= r_part_q_pow_minus_eta(q, i, r, eta)
        assert r_part_product(q, n, r, eta) == term


def test_cyclotomic_factoring_matches_direct():
    for q in (2, 3, 7, 13, 47):
        for n in (1, 2, 6, 12, 30):
            assert factor_q_pow_minus_eta(q, n, 1).value == q**n - 1
            assert factor_q_pow_minus_eta(q, n, -1).value == q**n - (-1) ** n
