import math

import pytest

from gdiv.champions import (
    champion_scan,
    crude_ratio_bound,
    extremal_construction,
    limsup_constant,
    prime_counting_report,
)
from gdiv.divisors import Family, FunctionFamily, evaluate
from gdiv.gaussint import GaussInt

M2 = FunctionFamily(Family.FRAK_T_E_K, 2)


def test_limsup_constant():
    assert limsup_constant(M2) == pytest.approx(math.log(2) / 2)
    assert limsup_constant(FunctionFamily(Family.TAU_E_K, 3)) == pytest.approx(math.log(3) / 2)


def test_frozen_final_record():
    recs = champion_scan(M2, 10**6)
    last = recs[-1]
    assert (last.n_or_norm, last.value) == (40000, 16)
    assert last.ratio == pytest.approx(0.6176297, abs=1e-7)
    assert last.argument == "norm=40000"


def test_records_strictly_increase():
    recs = champion_scan(FunctionFamily(Family.TAU_E_K_STAR, 2), 10**5)
    assert all(b.ratio > a.ratio for a, b in zip(recs, recs[1:]))
    assert all(r.n_or_norm >= 16 for r in recs)


def _max_by_norm(fam, x):
    best = {}
    for a in range(1, math.isqrt(x) + 1):
        for b in range(0, math.isqrt(x - a * a) + 1):
            n = a * a + b * b
            best[n] = max(best.get(n, 0), evaluate(fam, GaussInt(a, b)))
    return best


@pytest.mark.parametrize("family", [Family.FRAK_T_E_K, Family.FRAK_T_E_K_STAR])
def test_scan_uses_largest_value_per_norm(family):
    fam = FunctionFamily(family, 3)
    x = 3000
    best = _max_by_norm(fam, x)
    record, expected = -math.inf, []
    for n in range(16, x + 1):
        if n in best:
            r = math.log(best[n]) * math.log(math.log(n)) / math.log(n)
            if r > record:
                record = r
                expected.append((n, best[n]))
    assert [(c.n_or_norm, c.value) for c in champion_scan(fam, x)] == expected


def test_powers_of_two_closed_form():
    # on N = 2^a the value is base(a), attained by (1+i)^a
    for a in range(4, 16):
        assert evaluate(M2, GaussInt(1, 1) ** a) == M2.base(a)


def test_ratio_below_crude_bound():
    for fam_id in Family:
        if fam_id is Family.GAUSS_ONE:
            continue
        fam = FunctionFamily(fam_id, 2)
        for r in champion_scan(fam, 10**5):
            assert r.ratio <= crude_ratio_bound(fam, r.n_or_norm)


def test_squarefree_extremal_ratio_is_zero():
    assert extremal_construction(M2, 1, 1000) == 0.0


def test_extremal_monotone_and_in_band():
    target = math.log(2) / 2
    xs = [10**3, 3 * 10**3, 10**4, 3 * 10**4, 10**5]
    ratios = [extremal_construction(M2, 2, X) for X in xs]
    assert all(b <= a for a, b in zip(ratios, ratios[1:]))
    assert target <= ratios[-1] <= 1.3 * target


def test_l_two_dominates():
    for l in (3, 4, 5):
        assert extremal_construction(M2, l, 10**5) < extremal_construction(M2, 2, 10**5)


def test_extremal_domain():
    with pytest.raises(ValueError):
        extremal_construction(M2, 0, 1000)
    with pytest.raises(ValueError):
        extremal_construction(M2, 2, 99)


def test_rational_family_uses_rational_primes():
    fam = FunctionFamily(Family.TAU_E_K, 2)
    r = extremal_construction(fam, 2, 1000)
    from gdiv.primes import primes_up_to

    ps = primes_up_to(1000)
    S = math.fsum(math.log(p) for p in ps)
    expected = len(ps) * math.log(2) * math.log(2 * S) / (2 * S)
    assert r == pytest.approx(expected, rel=1e-12)


def test_prime_counting_small():
    rep = prime_counting_report(2)
    assert rep.count == 1
    assert prime_counting_report(10).count == 4  # 1+i, 1+2i, 2+i, 3
    with pytest.raises(ValueError):
        prime_counting_report(1)


def test_prime_counting_ratios():
    rep = prime_counting_report(10**6)
    assert 1.0 <= rep.count_ratio <= 1.15
    assert rep.logsum / 10**6 == pytest.approx(rep.logsum_ratio)
