"""End-to-end numerical checks, shared by ``gdiv verify-all`` and the test suite.

Each check returns a :class:`CheckResult` whose ``values`` hold only
deterministic numbers; wall time is kept apart so two runs can be compared
byte for byte.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .bell import bell_series, derive_zeta_exponents, verify_lemma6
from .champions import extremal_construction, prime_counting_report
from .constants import compute_constant, zeta_real
from .divisors import (
    Family,
    FunctionFamily,
    binom,
    brute_force_frak_t_k,
    brute_force_tau_k,
    frak_t_k,
    max_log_ratio,
    tau_k,
)
from .gaussint import GaussInt
from .summing import (
    count_tau_a,
    lattice_norm_sums,
    norm_coefficients,
    residual_analysis,
    summatory,
    summatory_many,
)

REFERENCE_C2 = 1.156101
REFERENCE_C2_STAR = 1.524172
CONSTANT_TOL = 5e-6
TAU122_TOL = 5000.0


@dataclass
class CheckResult:
    name: str
    passed: bool
    values: dict = field(default_factory=dict)
    seconds: float = 0.0
    time_limit: float | None = None

    @property
    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name} ({self.seconds:.2f}s)"


def _timed(name: str, limit: float | None, fn: Callable[[], tuple[bool, dict]]) -> CheckResult:
    t0 = time.perf_counter()
    ok, values = fn()
    dt = time.perf_counter() - t0
    if limit is not None and dt >= limit:
        ok = False
        values["time_limit_exceeded"] = True
    return CheckResult(name, bool(ok), values, dt, limit)


def check_constants() -> CheckResult:
    def run():
        c = compute_constant("C", 2, 10**6)
        cs = compute_constant("Cstar", 2, 10**6)
        ok = abs(c.value - REFERENCE_C2) <= CONSTANT_TOL and abs(cs.value - REFERENCE_C2_STAR) <= CONSTANT_TOL
        return ok, {
            "C_2": c.value,
            "C_2_star": cs.value,
            "C_2_gap": c.value - REFERENCE_C2,
            "C_2_star_gap": cs.value - REFERENCE_C2_STAR,
            "tail_C_2": c.tail_estimate,
            "tail_C_2_star": cs.tail_estimate,
        }

    return _timed("1 Euler-product constants C_2, C_2*", 30.0, run)


def check_lemma6() -> CheckResult:
    def run():
        failures = []
        for fam_id in (Family.TAU_E_K_STAR, Family.FRAK_T_E_K, Family.FRAK_T_E_K_STAR):
            for k in range(2, 9):
                rep = verify_lemma6(FunctionFamily(fam_id, k))
                if not rep.passed:
                    failures.append(f"{fam_id.value} k={k}: {rep.message}")
                if fam_id is Family.FRAK_T_E_K and list(rep.residual.coeffs) != [1] + [0] * 8:
                    failures.append(f"frak_t_e_k k={k}: residual {rep.residual.coeffs}")
        vec = derive_zeta_exponents(bell_series(FunctionFamily(Family.FRAK_T_E_K, 2), 8)).exponent_vector()
        if vec != (1, 1, 0, 0, -1, 1, -1, 0):
            failures.append(f"k=2 exponent vector {vec}")
        return not failures, {"checked": 21, "k2_vector": list(vec), "failures": failures}

    return _timed("2 zeta-power factorizations of the Bell series", 1.0, run)


def check_oracles() -> CheckResult:
    def run():
        bad = []
        n_alpha = 0
        for a in range(1, 15):
            for b in range(0, 15):
                alpha = GaussInt(a, b)
                if alpha.norm() > 200:
                    continue
                n_alpha += 1
                for k in (2, 3):
                    if frak_t_k(k, alpha) != brute_force_frak_t_k(k, alpha):
                        bad.append(f"frak_t_{k}({alpha})")
        for k in (1, 2, 3, 4):
            for n in range(1, 2001):
                if tau_k(k, n) != brute_force_tau_k(k, n):
                    bad.append(f"tau_{k}({n})")
        return not bad, {"gaussian_classes": n_alpha, "rational_n": 2000, "mismatches": bad[:20]}

    return _timed("3 divisor functions vs tuple-counting oracles", 60.0, run)


def check_sieve_vs_lattice(x: int = 10**4) -> CheckResult:
    def run():
        bad = []
        for fam_id in (Family.FRAK_T_E_K, Family.FRAK_T_E_K_STAR):
            for k in (2, 3):
                fam = FunctionFamily(fam_id, k)
                sieve = np.cumsum(norm_coefficients(fam, x).b)
                oracle = np.cumsum(lattice_norm_sums(fam, x))
                if not np.array_equal(sieve, oracle):
                    first = int(np.flatnonzero(sieve != oracle)[0])
                    bad.append(f"{fam} first differs at x={first}")
        m2 = summatory(FunctionFamily(Family.FRAK_T_E_K, 2), 10).exact_sum
        t2 = summatory(FunctionFamily(Family.TAU_E_K_STAR, 2), 10).exact_sum
        ok = not bad and m2 == 11 and t2 == 15
        return ok, {"M_2(10)": m2, "T_2*(10)": t2, "mismatches": bad}

    return _timed("4 norm sieve vs lattice enumeration", None, run)


MAIN_TERM_GRID = (10**4, 10**5, 10**6)


def check_main_terms(threads: int | None = None) -> CheckResult:
    def run():
        values = {}
        ok = True
        for fam_id, label in ((Family.FRAK_T_E_K, "M_2"), (Family.FRAK_T_E_K_STAR, "M_2*")):
            table = residual_analysis(FunctionFamily(fam_id, 2), MAIN_TERM_GRID, threads)
            gaps = [abs(r.exact_sum / r.x - table.constant) for r in table.rows]
            decreasing = all(b < a for a, b in zip(gaps, gaps[1:]))
            ok = ok and decreasing and table.ok
            values[label] = {
                "exact": [r.exact_sum for r in table.rows],
                "gaps": gaps,
                "normalized_residuals": [r.normalized_residual for r in table.rows],
                "max_over_median": table.max_over_median,
            }
        return ok, values

    return _timed("5 main terms C_2 x and C_2* x", None, run)


def check_tau122() -> CheckResult:
    def run():
        x = 10**6
        count = count_tau_a(1, x)
        z2, zh = zeta_real(2.0), zeta_real(0.5)
        residual = count - z2 * x - zh * math.sqrt(x)
        return abs(residual) <= TAU122_TOL, {"count": count, "zeta2": z2, "zeta_half": zh, "residual": residual}

    return _timed("6 count of d0 d1^2 <= 10^6", 5.0, run)


def check_prime_distribution() -> CheckResult:
    def run():
        r6 = prime_counting_report(10**6)
        r7 = prime_counting_report(10**7)
        ok = 1.0 <= r6.count_ratio <= 1.15 and 0.95 <= r7.logsum_ratio <= 1.05
        return ok, {
            "count_1e6": r6.count,
            "count_ratio_1e6": r6.count_ratio,
            "logsum_1e7": r7.logsum,
            "logsum_ratio_1e7": r7.logsum_ratio,
        }

    return _timed("7 Gaussian prime counts", 60.0, run)


def check_maximal_order() -> CheckResult:
    def run():
        fam = FunctionFamily(Family.FRAK_T_E_K, 2)
        xs = (10**3, 10**4, 10**5)
        ratios = [extremal_construction(fam, 2, X) for X in xs]
        target = math.log(2) / 2
        ok = all(b <= a for a, b in zip(ratios, ratios[1:])) and target <= ratios[-1] <= 1.3 * target
        closed = []
        for k in range(2, 9):
            n1, v1 = max_log_ratio("tau_k", k, 100)
            n2, v2 = max_log_ratio("frak_t_k", k, 100)
            good = n1 == 2 and n2 == 2 and v1 == math.log(k) / 2 and v2 == 0.5 * math.log(binom(k + 1, 2))
            ok = ok and good
            closed.append([k, n1, v1, n2, v2, good])
        return ok, {"extremal_ratios": ratios, "max_log_ratio": closed}

    return _timed("8 maximal order: extremal construction and max log ratio", None, run)


def check_thread_invariance() -> CheckResult:
    """Segmented sums must not depend on the number of worker threads."""

    def run():
        from . import _sieve
        from .summing import local_tables

        fam = FunctionFamily(Family.FRAK_T_E_K_STAR, 3)
        tables = local_tables(fam, 21)
        xs = (10**4, 123_457, 10**6)
        one = _sieve.checkpoint_sums(tables, xs, threads=1, segment=1 << 16)
        eight = _sieve.checkpoint_sums(tables, xs, threads=8, segment=1 << 16)
        whole = summatory_many(fam, xs, threads=1)
        ok = one == eight == whole
        return ok, {"sums": [one[x] for x in xs]}

    return _timed("9 thread-count invariance", None, run)


def run_all(threads: int | None = None) -> list[CheckResult]:
    return [
        check_constants(),
        check_lemma6(),
        check_oracles(),
        check_sieve_vs_lattice(),
        check_main_terms(threads),
        check_tau122(),
        check_prime_distribution(),
        check_maximal_order(),
        check_thread_invariance(),
    ]
