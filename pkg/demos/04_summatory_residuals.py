"""Exact summatory functions against their linear main terms.

The Gaussian sums run over norm classes and are computed by sieving the
norm coefficients, so x = 10^7 needs no enumeration of lattice points.
"""

from gdiv.divisors import Family, FunctionFamily
from gdiv.summing import count_tau_a, residual_analysis, tau_a_main_terms

xs = [10**3, 10**4, 10**5, 10**6, 10**7]
for family in (Family.FRAK_T_E_K, Family.FRAK_T_E_K_STAR):
    table = residual_analysis(FunctionFamily(family, 2), xs)
    print(f"{family.value}, k=2, constant {table.constant:.8f}")
    for r in table.rows:
        print(f"  x={r.x:>9}  sum={r.exact_sum:>10}  residual/sqrt(x)={r.normalized_residual:+.4f}")

x = 10**6
count = count_tau_a(1, x)
a, b = tau_a_main_terms(x)
print(f"\n#{{d0 d1^2 <= {x}}} = {count}; zeta(2)x + zeta(1/2)sqrt(x) = {a + b:.2f}; diff {count - a - b:+.2f}")
