"""Exponent sequences, the admissible/unrestricted correspondence and excess.

Sequences are plain tuples of nonnegative ints with trailing zeros removed,
so ``()`` is the zero sequence and structural equality is the right notion
of equality.  Two families matter:

* unrestricted sequences ``J = (x_1, x_2, ...)``, indexing Milnor monomials;
* admissible sequences ``I`` with ``x_i >= p * x_{i+1}``, indexing the
  Cartan-Serre words ``P^{x_1} P^{x_2} ...``.

``gamma`` sends an admissible ``I`` to ``(x_1 - p x_2, x_2 - p x_3, ...)``.
It is a bijection that preserves the right-lexicographic order and maps
admissible sequences of weight ``r`` onto the unrestricted sequences ``J``
with ``sum_k x_k (1 + p + ... + p^{k-1}) = r``.
"""

from functools import lru_cache
from typing import Iterable, Sequence

ExponentSeq = tuple[int, ...]


def normalize(entries: Iterable[int]) -> ExponentSeq:
    """Tuple of ``entries`` with trailing zeros stripped; rejects negatives."""
    seq = [int(x) for x in entries]
    if any(x < 0 for x in seq):
        raise ValueError(f"negative entry in exponent sequence {seq}")
    while seq and seq[-1] == 0:
        seq.pop()
    return tuple(seq)


def entry(seq: Sequence[int], i: int) -> int:
    """1-based entry ``x_i`` with the implicit zero tail."""
    return seq[i - 1] if 0 < i <= len(seq) else 0


def weight(seq: Sequence[int]) -> int:
    """``|I|``, the plain sum of the entries."""
    return sum(seq)


def is_admissible(seq: Sequence[int], p: int) -> bool:
    return all(seq[i] >= p * entry(seq, i + 2) for i in range(len(seq)))


def right_lex_key(seq: Sequence[int]):
    """Sort key realizing the right-lexicographic order on normalized tuples.

    After normalization the longer sequence has the larger last index with a
    nonzero entry, so length decides first and then the reversed entries.
    """
    return (len(seq), tuple(reversed(seq)))


def right_lex_cmp(a: Sequence[int], b: Sequence[int]) -> int:
    """-1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    n = max(len(a), len(b))
    for i in range(n, 0, -1):
        x, y = entry(a, i), entry(b, i)
        if x != y:
            return 1 if x > y else -1
    return 0


def gamma(seq: Sequence[int], p: int) -> ExponentSeq:
    seq = normalize(seq)
    if not is_admissible(seq, p):
        raise ValueError(f"{seq} is not admissible for p={p}")
    return normalize(seq[i] - p * entry(seq, i + 2) for i in range(len(seq)))


def gamma_inv(seq: Sequence[int], p: int) -> ExponentSeq:
    seq = normalize(seq)
    out = [0] * len(seq)
    acc = 0
    for i in range(len(seq) - 1, -1, -1):
        acc = seq[i] + p * acc
        out[i] = acc
    return tuple(out)


def upsilon_weight(k: int, p: int) -> int:
    """``1 + p + ... + p^{k-1}``, the contribution of one unit in slot k."""
    return (p**k - 1) // (p - 1)


def upsilon_degree(seq: Sequence[int], p: int) -> int:
    """The ``r`` with ``seq`` in the weight-r slice (Milnor degree / 2(p-1))."""
    return sum(x * upsilon_weight(k, p) for k, x in enumerate(seq, start=1))


def _max_slot(p: int, r: int) -> int:
    k = 0
    while upsilon_weight(k + 1, p) <= r:
        k += 1
    return k


@lru_cache(maxsize=None)
def _enumerate(p: int, r: int) -> tuple[ExponentSeq, ...]:
    n = _max_slot(p, r)
    weights = [upsilon_weight(k, p) for k in range(1, n + 1)]
    found = []

    def rec(k, remaining, tail):
        # fill slots n, n-1, ..., 1; slot 1 takes whatever is left
        if k == 1:
            found.append(normalize((remaining,) + tail))
            return
        w = weights[k - 1]
        for x in range(remaining // w, -1, -1):
            rec(k - 1, remaining - x * w, (x,) + tail)

    if n == 0:
        found.append(())
    else:
        rec(n, r, ())
    found.sort(key=right_lex_key, reverse=True)
    return tuple(found)


def enumerate_upsilon_r(p: int, r: int) -> list[ExponentSeq]:
    """All sequences of weight ``r``, descending in right-lex order."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    return list(_enumerate(p, r))


def enumerate_gamma_r(p: int, r: int) -> list[ExponentSeq]:
    """Admissible sequences with entry sum ``r``, descending right-lex."""
    return [gamma_inv(j, p) for j in _enumerate(p, r)]


def greatest_in_upsilon_r(p: int, r: int) -> ExponentSeq:
    """Right-lex maximum of the weight-r slice, built digit by digit.

    The maximum is the unique representation ``r = sum x_k w_k`` (with
    ``w_k = 1 + ... + p^{k-1}``) whose digits satisfy ``x_k <= p`` and where
    a digit equal to ``p`` forces every lower digit to vanish.  Taking the top
    slot greedily produces exactly such digits: the remainder after slot k is
    below ``w_k = 1 + p w_{k-1}``, so the next digit is at most ``p`` and
    equals ``p`` only when nothing is left over.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    n = _max_slot(p, r)
    digits = [0] * n
    remaining = r
    for k in range(n, 0, -1):
        w = upsilon_weight(k, p)
        digits[k - 1], remaining = divmod(remaining, w)
    return normalize(digits)


def satisfies_greatest_conditions(seq: Sequence[int], p: int) -> bool:
    """Entries bounded by ``p``; an entry equal to ``p`` has only zeros below."""
    for i, x in enumerate(seq):
        if x > p:
            return False
        if x == p and any(seq[:i]):
            return False
    return True


def upsilon_successor(seq: Sequence[int], p: int) -> ExponentSeq:
    """Greatest element of slice ``r + 1`` from the greatest of slice ``r``.

    Either every entry is below ``p`` and the first entry grows by one, or the
    lowest nonzero entry equals ``p``; it is then cleared and the next slot
    grows by one (``w_{i+1} - p w_i = 1``).
    """
    seq = list(normalize(seq))
    if all(x < p for x in seq):
        if not seq:
            return (1,)
        seq[0] += 1
        return tuple(seq)
    i = next(k for k, x in enumerate(seq) if x)
    seq[i] = 0
    if i + 1 == len(seq):
        seq.append(0)
    seq[i + 1] += 1
    return normalize(seq)


def ex(p: int, r: int) -> int:
    """Minimal excess over admissible words of weight ``r``."""
    return 2 * sum(greatest_in_upsilon_r(p, r))


def ex_brute(p: int, r: int) -> int:
    """Minimum of ``2|gamma(I)|`` over all admissible ``I`` with ``|I| = r``."""
    return min(2 * sum(gamma(i, p)) for i in enumerate_gamma_r_direct(p, r))


def count_k(p: int, n: int) -> int:
    """``sum_{i>=1} floor((n-1) / (2 p^i))``."""
    if n < 1:
        raise ValueError("n must be positive")
    total = 0
    q = 2 * p
    while q <= n - 1:
        total += (n - 1) // q
        q *= p
    return total


def count_k_brute(p: int, n: int) -> int:
    """Greatest ``k`` with ``n > ex(k) + 2k(p-1)``, found by scanning."""
    if n < 1:
        raise ValueError("n must be positive")
    best = 0
    # ex(k) >= 0, so no k with 2k(p-1) >= n can qualify
    k = 0
    while 2 * k * (p - 1) < n:
        if n > ex(p, k) + 2 * k * (p - 1):
            best = k
        k += 1
    return best


def enumerate_gamma_r_direct(p: int, r: int) -> list[ExponentSeq]:
    """Admissible sequences of entry sum ``r`` built directly, without ``gamma``."""
    found = []

    def rec(prefix, remaining, cap):
        if remaining == 0:
            found.append(tuple(prefix))
            return
        for x in range(min(remaining, cap), 0, -1):
            prefix.append(x)
            rec(prefix, remaining - x, x // p)
            prefix.pop()

    rec([], r, r)
    found.sort(key=right_lex_key, reverse=True)
    return found
