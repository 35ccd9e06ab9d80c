"""Lower/upper bounds and exact small-dimension values of k_U(n) and k_SO(n).

``k_U(n)`` is the least multiplier making every integral n-dimensional
homology class a continuous image of a stably complex manifold; ``k_SO(n)``
is the analogue for oriented manifolds and equals the odd part of ``k_U(n)``.
Per prime:

    sum_{i>=1} floor((n-1) / (2 p^i))  <=  nu_p(k_U(n))  <=  floor((n-3) / (2(p-1)))

and the lower bound is the exponent of ``p`` in ``floor((n-1)/2)!``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, prod

import numpy as np

from .fp import odd_part, primes_upto
from .seqcomb import count_k

PUBLISHED_KSO_TABLE = (
    1, 1, 1, 1, 1, 1, 3, 3, 3, 3, 15, 15,
    45, 45, 315, 315, 315, 315, 2835, 2835, 14175, 14175, 155925,
)
# k_SO(24) is known only up to this pair
KSO_24_CANDIDATES = frozenset({155925, 3 * 155925})


def nu_lower(p: int, n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    return count_k(p, n)


def nu_upper(p: int, n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    return max(0, (n - 3) // (2 * (p - 1)))


def contributing_primes(n: int) -> list[int]:
    """Primes with a possibly nonzero exponent in either bound: ``2p <= n-1``."""
    return primes_upto((n - 1) // 2)


def exact_window(p: int, n: int) -> bool:
    """Is the lower bound for ``nu_p(k_U(n))`` known to be exact?"""
    return n < 2 * p * p + 2 * p


def ku_bounds(n: int) -> tuple[int, int]:
    if n < 1:
        raise ValueError("n must be positive")
    lower = factorial((n - 1) // 2)
    upper = prod(p ** nu_upper(p, n) for p in contributing_primes(n))
    return lower, upper


def kso_bounds(n: int) -> tuple[int, int]:
    lower, upper = ku_bounds(n)
    return odd_part(lower), odd_part(upper)


def ku_stable(n: int) -> int:
    """The older stable bound ``prod p^floor((n-1)/(2(p-1)))`` (informational)."""
    if n < 1:
        raise ValueError("n must be positive")
    return prod(p ** ((n - 1) // (2 * (p - 1))) for p in primes_upto(max(2, (n + 1) // 2)))


def kso_stable(n: int) -> int:
    return odd_part(ku_stable(n))


@dataclass(frozen=True)
class PrimeBound:
    p: int
    nu_lower: int
    nu_upper: int
    exact: int | None = None


@dataclass(frozen=True)
class BoundReport:
    n: int
    per_prime: tuple[PrimeBound, ...]
    ku_lower: int
    ku_upper: int
    kso_lower: int
    kso_upper: int
    ku_exact: int | None = None
    kso_exact: int | frozenset | None = None
    ku_stable: int | None = None
    kso_stable: int | None = None

    def to_dict(self) -> dict:
        kso_exact = self.kso_exact
        if isinstance(kso_exact, frozenset):
            kso_exact = sorted(kso_exact)
        out = {
            "n": self.n,
            "per_prime": [
                {"p": b.p, "nu_lower": b.nu_lower, "nu_upper": b.nu_upper, "exact": b.exact}
                for b in self.per_prime
            ],
            "ku_lower": self.ku_lower,
            "ku_upper": self.ku_upper,
            "kso_lower": self.kso_lower,
            "kso_upper": self.kso_upper,
            "ku_exact": self.ku_exact,
            "kso_exact": kso_exact,
        }
        if self.ku_stable is not None:
            out["ku_stable"] = self.ku_stable
            out["kso_stable"] = self.kso_stable
        return out


def exact_values(n: int) -> dict:
    """What is known exactly in dimension ``n``.

    Returns ``{"nu_exact": {p: nu}, "ku_exact": int|None, "kso_exact": ...}``
    where ``kso_exact`` is a frozenset of two candidates at ``n = 24``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    nu_exact = {p: nu_lower(p, n) for p in contributing_primes(n) if exact_window(p, n)}
    base = factorial((n - 1) // 2)
    ku_exact = base if n < 12 else None
    if n < 24:
        kso_exact = odd_part(base)
    elif n == 24:
        kso_exact = KSO_24_CANDIDATES
    else:
        kso_exact = None
    return {"nu_exact": nu_exact, "ku_exact": ku_exact, "kso_exact": kso_exact}


def bound_report(n: int, superseded: bool = False) -> BoundReport:
    ex = exact_values(n)
    per_prime = tuple(
        PrimeBound(p, nu_lower(p, n), nu_upper(p, n), ex["nu_exact"].get(p))
        for p in contributing_primes(n)
    )
    ku_lo, ku_hi = ku_bounds(n)
    return BoundReport(
        n=n,
        per_prime=per_prime,
        ku_lower=ku_lo,
        ku_upper=ku_hi,
        kso_lower=odd_part(ku_lo),
        kso_upper=odd_part(ku_hi),
        ku_exact=ex["ku_exact"],
        kso_exact=ex["kso_exact"],
        ku_stable=ku_stable(n) if superseded else None,
        kso_stable=kso_stable(n) if superseded else None,
    )


def paper_table() -> list[tuple[int, int]]:
    """``(n, k_SO(n))`` for ``n = 1..23`` from the exact formula."""
    return [(n, exact_values(n)["kso_exact"]) for n in range(1, 24)]


def nu_gap_sweep(p: int, n_max: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized ``(n, nu_lower, nu_upper)`` for ``n = 1..n_max``."""
    n = np.arange(1, n_max + 1, dtype=np.int64)
    lower = np.zeros_like(n)
    q = 2 * p
    while q <= n_max - 1:
        lower += (n - 1) // q
        q *= p
    upper = np.maximum(0, (n - 3) // (2 * (p - 1)))
    return n, lower, upper
