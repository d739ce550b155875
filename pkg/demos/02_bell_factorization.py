"""Bell series of the exponential divisor functions as products of zeta powers.

Each local series 1 + x + ... is peeled into factors (1 - x^j)^-e_j; the
exponents e_j are compared with the closed-form polynomials in k.
"""

from gdiv.bell import bell_series, derive_zeta_exponents, verify_lemma6
from gdiv.divisors import Family, FunctionFamily

fam = FunctionFamily(Family.FRAK_T_E_K, 2)
s = bell_series(fam, 12)
print(f"Bell series of {fam.family.value}, k=2:\n  {s}")
zf = derive_zeta_exponents(s)
print("  exponents e_j:", zf.exponent_vector())

print("\nClosed-form exponents against the greedy derivation:")
for family in (Family.TAU_E_K_STAR, Family.FRAK_T_E_K, Family.FRAK_T_E_K_STAR):
    for k in (2, 5, 8):
        rep = verify_lemma6(FunctionFamily(family, k))
        status = "ok" if rep.passed else "MISMATCH"
        exps = [rep.closed_form_exponents[j] for j in sorted(rep.closed_form_exponents)]
        print(f"  {family.value:<16} k={k}  {status:<8} e = {exps}")
