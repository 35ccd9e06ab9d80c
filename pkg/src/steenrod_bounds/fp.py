"""Small exact helpers for arithmetic mod a prime."""

from functools import lru_cache
from math import comb, isqrt


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"expected a prime, got {p!r}")
    return p


def primes_upto(n: int) -> list[int]:
    """Primes ``<= n`` by the sieve of Eratosthenes."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for q in range(2, isqrt(n) + 1):
        if sieve[q]:
            sieve[q * q :: q] = bytearray(len(range(q * q, n + 1, q)))
    return [q for q in range(n + 1) if sieve[q]]


@lru_cache(maxsize=None)
def _small_binom(n: int, k: int, p: int) -> int:
    return comb(n, k) % p


def binom_mod(n: int, k: int, p: int) -> int:
    """``binom(n, k) mod p`` by Lucas' theorem.

    Negative ``n`` or ``k`` (and ``k > n``) give 0, which is the convention
    the Adem relations need.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    result = 1
    while n or k:
        nd, kd = n % p, k % p
        if kd > nd:
            return 0
        result = result * _small_binom(nd, kd, p) % p
        n //= p
        k //= p
    return result


def multinomial_mod(parts, p: int) -> int:
    """Multinomial coefficient ``(sum parts)! / prod(part!)`` reduced mod p."""
    result = 1
    total = 0
    for part in parts:
        if part == 0:
            continue
        total += part
        result = result * binom_mod(total, part, p) % p
        if result == 0:
            return 0
    return result


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {p}")
    return pow(a, -1, p)


def sign(r: int, p: int) -> int:
    """``(-1)^r`` as a canonical residue mod p."""
    return 1 if r % 2 == 0 else p - 1


def valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def odd_part(n: int) -> int:
    if n == 0:
        return 0
    return n >> ((n & -n).bit_length() - 1)
