"""Bounds on k_U(n) and k_SO(n), and how far apart they drift."""

import numpy as np

from steenrod_bounds import bounds

print(" n     ku_lower       ku_upper  kso_lower  kso_upper  kso_exact")
for n in range(1, 31):
    rep = bounds.bound_report(n)
    exact = rep.kso_exact
    if isinstance(exact, frozenset):
        exact = " or ".join(map(str, sorted(exact)))
    print(f"{n:2d} {rep.ku_lower:>12d} {rep.ku_upper:>14d} {rep.kso_lower:>10d} {rep.kso_upper:>10d}  {exact or '-'}")

# per-prime gaps grow only logarithmically
for p in (2, 3, 5):
    n, lower, upper = bounds.nu_gap_sweep(p, 100_000)
    gap = upper - lower
    idx = np.searchsorted(n, [10**k for k in range(2, 6)])
    print(f"p={p}", "max gap up to 1e2..1e5:", [int(gap[: i + 1].max()) for i in idx])
