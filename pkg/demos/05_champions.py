"""Large values: running champions against the extremal prime-power construction."""

import math

from gdiv.champions import champion_scan, extremal_construction, limsup_constant
from gdiv.divisors import Family, FunctionFamily

fam = FunctionFamily(Family.FRAK_T_E_K, 2)
print(f"limsup target log 2 / 2 = {limsup_constant(fam):.5f}\n")
print("Champions of log f * loglog N / log N up to norm 10^6:")
for r in champion_scan(fam, 10**6):
    print(f"  {r.argument:<12} f={r.value:<4} ratio={r.ratio:.5f}")

print("\nSquares of all primes of norm <= X:")
for X in (10**3, 10**4, 10**5, 10**6):
    print(f"  X={X:<8} ratio={extremal_construction(fam, 2, X):.5f}")
print(f"\nConvergence is like 1 + O(logloglog / loglog); loglog(10^6) = {math.log(math.log(1e6)):.2f}")
