import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from gdiv.divisors import (
    Family,
    FunctionFamily,
    OracleBoundError,
    binom,
    brute_force_frak_t_k,
    brute_force_tau_k,
    evaluate,
    frak_t_k,
    max_log_ratio,
    tau_k,
)
from gdiv.gaussint import GaussInt

FAMILIES = list(Family)[:4]


@pytest.mark.parametrize("k, n, expected", [(3, 4, 6), (2, 6, 4), (2, 1, 1), (5, 1, 1)])
def test_tau_k_examples(k, n, expected):
    assert tau_k(k, n) == expected


def test_tau_2_of_6_by_pair_count():
    assert tau_k(2, 6) == sum(1 for a in range(1, 7) for b in range(1, 7) if a * b == 6)


@pytest.mark.parametrize("k, alpha, expected", [(2, 2, 3), (2, 5, 4), (2, 3, 2)])
def test_frak_t_k_local_formulas(k, alpha, expected):
    assert frak_t_k(k, alpha) == expected
    assert frak_t_k(k, GaussInt(alpha)) == expected


@pytest.mark.parametrize(
    "fam, arg, expected",
    [
        (FunctionFamily(Family.TAU_E_K_STAR, 2), 12, 3),
        (FunctionFamily(Family.FRAK_T_E_K, 2), GaussInt(1, 1) ** 4, 3),
        (FunctionFamily(Family.FRAK_T_E_K, 2), GaussInt(-4), 3),
        (FunctionFamily(Family.FRAK_T_E_K, 2), 2, 2),
        (FunctionFamily(Family.TAU_E_K_STAR, 2), 4, 3),
    ],
)
def test_evaluate_examples(fam, arg, expected):
    assert evaluate(fam, arg) == expected


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("k", [2, 3, 7])
def test_squarefree_arguments_give_one(family, k):
    fam = FunctionFamily(family, k)
    for n in (1, 2, 6, 30, 2310):
        assert evaluate(fam, n if not fam.gaussian else GaussInt(n, 1)) in (1,) or not fam.gaussian
        if not fam.gaussian:
            assert evaluate(fam, n) == 1
    if fam.gaussian:
        assert evaluate(fam, GaussInt(3, 1)) == 1  # (1+i)(1+2i) up to a unit


def test_domain_errors():
    with pytest.raises(ValueError):
        evaluate(FunctionFamily(Family.TAU_E_K, 2), GaussInt(2, 1))
    with pytest.raises(ValueError):
        evaluate(FunctionFamily(Family.TAU_E_K, 2), 0)
    with pytest.raises(ValueError):
        evaluate(FunctionFamily(Family.FRAK_T_E_K, 2), 0)
    with pytest.raises(ValueError):
        FunctionFamily(Family.TAU_E_K, 1)


@pytest.mark.parametrize("k, alpha, expected", [(2, 2, 3), (2, 1, 1), (3, GaussInt(1, 1), 3)])
def test_brute_force_frak_t_k_examples(k, alpha, expected):
    assert brute_force_frak_t_k(k, alpha) == expected


@pytest.mark.parametrize("k, n, expected", [(2, 101, 2), (2, 36, 9), (3, 4, 6)])
def test_brute_force_tau_k_examples(k, n, expected):
    assert brute_force_tau_k(k, n) == expected


def test_oracles_enforce_bounds():
    with pytest.raises(OracleBoundError):
        brute_force_tau_k(2, 10**6 + 1)
    with pytest.raises(OracleBoundError):
        brute_force_tau_k(5, 10)
    with pytest.raises(OracleBoundError):
        brute_force_frak_t_k(2, GaussInt(100, 1))


def test_frak_t_k_matches_brute_force_up_to_norm_200():
    for a in range(1, 15):
        for b in range(0, 15):
            alpha = GaussInt(a, b)
            if alpha.norm() <= 200:
                for k in (2, 3):
                    assert frak_t_k(k, alpha) == brute_force_frak_t_k(k, alpha), (k, alpha)


def test_tau_k_matches_brute_force_up_to_2000():
    for k in (2, 3, 4):
        for n in range(1, 2001):
            assert tau_k(k, n) == brute_force_tau_k(k, n)


def test_tau_k_bound():
    for k in (2, 3, 5):
        for n in range(2, 10**4 + 1):
            assert tau_k(k, n) <= k ** math.log2(n) * (1 + 1e-12)


@pytest.mark.parametrize("k", range(2, 9))
def test_local_formula_consistency(k):
    assert frak_t_k(k, 3) == k
    assert frak_t_k(k, 7) == k
    assert frak_t_k(k, 5) == k * k
    assert frak_t_k(k, 2) == binom(k + 1, 2)
    for a in range(1, 6):
        assert frak_t_k(k, 2**a) == binom(k + 2 * a - 1, 2 * a)
        assert frak_t_k(k, 13**a) == binom(k + a - 1, a) ** 2


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(FAMILIES), st.integers(2, 4), st.integers(1, 10**5), st.integers(1, 10**5))
def test_multiplicativity_on_coprime_pairs(family, k, m, n):
    if math.gcd(m, n) != 1:
        return
    fam = FunctionFamily(family, k)
    if fam.gaussian:
        z, w = GaussInt(m, 1), GaussInt(n, 2)
        if math.gcd(z.norm(), w.norm()) != 1:
            return
        assert evaluate(fam, z * w) == evaluate(fam, z) * evaluate(fam, w)
    else:
        assert evaluate(fam, m * n) == evaluate(fam, m) * evaluate(fam, n)


def test_multiplicativity_many_random_pairs():
    rng = random.Random(7)
    fam = FunctionFamily(Family.TAU_E_K_STAR, 3)
    checked = 0
    while checked < 10_000:
        m, n = rng.randint(1, 10**6), rng.randint(1, 10**6)
        if math.gcd(m, n) == 1:
            assert evaluate(fam, m * n) == evaluate(fam, m) * evaluate(fam, n)
            checked += 1


@pytest.mark.parametrize(
    "base, k, expected",
    [("tau_k", 2, math.log(2) / 2), ("frak_t_k", 2, math.log(3) / 2), ("frak_t_k", 3, math.log(6) / 2)],
)
def test_max_log_ratio(base, k, expected):
    n, v = max_log_ratio(base, k, 100)
    assert n == 2
    assert v == expected
