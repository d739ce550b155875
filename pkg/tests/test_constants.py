import math
import random

import mpmath
import pytest

from gdiv.constants import (
    NonConvergenceError,
    _log_factors,
    compute_constant,
    constant_for_family,
    dirichlet_beta,
    hecke_zeta,
    local_factor,
    zeta_real,
)
from gdiv.divisors import Family, FunctionFamily
from gdiv.primes import primes_up_to


@pytest.mark.parametrize("s", [0.5, 1.5, 2.0, 3.0, 4.0, 7.5, 12.0, 30.0])
def test_zeta_real_against_mpmath(s):
    assert zeta_real(s) == pytest.approx(float(mpmath.zeta(s)), rel=1e-13)


def test_zeta_exact_values():
    assert zeta_real(2.0) == pytest.approx(math.pi**2 / 6, rel=1e-14)
    assert zeta_real(4.0) == pytest.approx(math.pi**4 / 90, rel=1e-14)
    assert zeta_real(0.5) == pytest.approx(-1.4603545088, abs=1e-10)


@pytest.mark.parametrize("s", [1.0, 0.7, 0.0, -2.0])
def test_zeta_real_rejects_unsupported(s):
    with pytest.raises(ValueError):
        zeta_real(s)


def test_dirichlet_beta():
    assert dirichlet_beta(2.0) == pytest.approx(float(mpmath.catalan), rel=1e-13)
    assert dirichlet_beta(1.0) == pytest.approx(math.pi / 4)
    assert dirichlet_beta(3.0) == pytest.approx(math.pi**3 / 32, rel=1e-13)
    assert hecke_zeta(2.0) == pytest.approx(math.pi**2 / 6 * float(mpmath.catalan), rel=1e-13)


def _g(which, k, y, A=64):
    fam = FunctionFamily({"C": Family.FRAK_T_E_K, "Cstar": Family.FRAK_T_E_K_STAR}[which], k)
    base = fam.base_table(A)
    return 1 + math.fsum((base[a] - base[a - 1]) / y**a for a in range(2, A + 1))


@pytest.mark.parametrize("which", ["C", "Cstar"])
def test_local_factor_by_splitting_type(which):
    assert local_factor(which, 2, 2) == pytest.approx(_g(which, 2, 2), rel=1e-14)
    assert local_factor(which, 2, 3) == pytest.approx(_g(which, 2, 9), rel=1e-14)
    assert local_factor(which, 2, 5) == pytest.approx(_g(which, 2, 5) ** 2, rel=1e-14)


def test_frak_t_e_2_local_factor_starts_with_p_minus_2():
    # base differences for k=2: 1, 1, 0, 1, -1, ... so g(y) = 1 + y^-2 + 0 y^-3 + ...
    assert local_factor("C", 2, 2, truncation=3) == pytest.approx(1.25)


@pytest.mark.parametrize("which", ["C", "Cstar", "A", "B"])
@pytest.mark.parametrize("k", [2, 3])
def test_direct_agrees_with_accelerated(which, k):
    direct = compute_constant(which, k, 10**6, max_tail=1e-4)
    acc = compute_constant(which, k, 10**4, method="accelerated")
    assert abs(direct.value - acc.value) <= 50 * direct.tail_estimate * direct.value


def test_known_values():
    assert compute_constant("C", 2).value == pytest.approx(1.156101, abs=5e-6)
    assert compute_constant("Cstar", 2).value == pytest.approx(1.524172, abs=5e-6)


def test_accelerated_is_stable_in_cutoff():
    a = compute_constant("A", 2, 10**3, method="accelerated").value
    b = compute_constant("A", 2, 10**5, method="accelerated").value
    assert abs(a - b) <= 1e-10


def test_a2_self_consistency():
    direct = compute_constant("A", 2, 10**6)
    acc = compute_constant("A", 2, 10**5, method="accelerated")
    assert abs(direct.value - acc.value) <= 1e-6


@pytest.mark.parametrize("which", ["C", "Cstar"])
def test_stabilization(which):
    lo = compute_constant(which, 2, 10**5, max_tail=1e-4)
    hi = compute_constant(which, 2, 10**6, max_tail=1e-4)
    assert abs(hi.value - lo.value) <= 10 * lo.tail_estimate * lo.value


def test_product_order_invariance():
    logs = _log_factors("Cstar", 2, primes_up_to(10**6), 64).tolist()
    ref = math.exp(math.fsum(logs))
    rng = random.Random(1)
    for _ in range(3):
        rng.shuffle(logs)
        assert abs(math.exp(math.fsum(logs)) - ref) < 1e-12


def test_nonconvergence_and_domain():
    with pytest.raises(NonConvergenceError):
        compute_constant("C", 2, 1000)
    with pytest.raises(ValueError):
        compute_constant("C", 2, 50)
    with pytest.raises(ValueError):
        compute_constant("D", 2)
    with pytest.raises(ValueError):
        compute_constant("C", 1)
    with pytest.raises(ValueError):
        compute_constant("C", 2, method="magic")


def test_result_metadata():
    r = compute_constant("C", 3, 10**6, max_tail=1e-4)
    d = r.as_dict()
    assert d["which"] == "C" and d["k"] == 3 and d["prime_cutoff"] == 10**6
    assert d["series_truncation"] == 64 and d["tail_estimate"] > 0


def test_gauss_one_constant():
    assert constant_for_family(FunctionFamily(Family.GAUSS_ONE)) == math.pi / 4
