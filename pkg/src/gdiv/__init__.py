"""Exponential divisor functions over the integers and the Gaussian integers."""

__version__ = "0.1.0"

from .gaussint import GaussInt, canonical_associate, divide_exact, parse_gauss  # noqa: E402
from .primes import classify, factor_gauss, factor_rational, is_gaussian_prime, split_prime  # noqa: E402
from .divisors import Family, FunctionFamily, evaluate, frak_t_k, tau_k  # noqa: E402
from .bell import TruncatedSeries, bell_series, derive_zeta_exponents, verify_lemma6  # noqa: E402
from .constants import compute_constant, zeta_real  # noqa: E402
from .summing import count_tau_a, norm_coefficients, summatory  # noqa: E402
from .champions import champion_scan, extremal_construction, prime_counting_report  # noqa: E402
