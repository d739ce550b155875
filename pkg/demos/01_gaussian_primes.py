"""Tour of Z[i]: how rational primes split, and unique factorization."""

from gdiv import GaussInt
from gdiv.primes import classify, factor_gauss, gaussian_primes_up_to, split_prime

print("Rational primes and their behaviour in Z[i]:")
for p in (2, 3, 5, 7, 13, 29):
    kind = classify(p).value
    extra = ""
    if kind == "split":
        q = split_prime(p)
        extra = f"  {p} = ({q}) * ({q.conj()})"
    print(f"  {p:>3}  {kind}{extra}")

print("\nGaussian primes of norm at most 50, one per associate class:")
print("  " + ", ".join(str(q) for q in gaussian_primes_up_to(50)))

z = GaussInt(-27, 36)
f = factor_gauss(z)
print(f"\n{z} = {f}")
assert f.value() == z
