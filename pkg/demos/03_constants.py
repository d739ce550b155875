"""Euler-product constants: a plain product against the zeta-accelerated one."""

from gdiv.constants import compute_constant

for which in ("C", "Cstar", "A", "B"):
    for k in (2, 3):
        direct = compute_constant(which, k, 10**6, max_tail=1e-4)
        fast = compute_constant(which, k, 10**4, method="accelerated")
        print(
            f"{which:>5} k={k}: direct {direct.value:.10f} (tail ~{direct.tail_estimate:.1e})"
            f"  accelerated {fast.value:.12f}  diff {direct.value - fast.value:+.1e}"
        )
