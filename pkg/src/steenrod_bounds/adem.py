"""Adem-relation normal form for words in reduced powers, modulo the Bockstein.

An independent route to the Cartan-Serre basis: no Milnor matrices, only the
relation

    P^a P^b = sum_t (-1)^(a+t) binom((p-1)(b-t)-1, a-pt) P^(a+b-t) P^t,  a < pb,

applied to the leftmost inadmissible pair until nothing fires.
"""

from __future__ import annotations

from .fp import binom_mod, check_prime, sign
from .milnor import admissible_combination_to_milnor, admissible_to_milnor
from .seqcomb import ExponentSeq

DEFAULT_STEP_BUDGET = 200_000


class RewriteBudgetExceeded(RuntimeError):
    pass


def adem_relation(a: int, b: int, p: int) -> dict[ExponentSeq, int]:
    """Right-hand side of the relation for ``P^a P^b`` with ``a < p b``."""
    if not 0 < a < p * b:
        raise ValueError(f"P^{a} P^{b} is already admissible at p={p}")
    out: dict[ExponentSeq, int] = {}
    for t in range(a // p + 1):
        c = binom_mod((p - 1) * (b - t) - 1, a - p * t, p)
        if c == 0:
            continue
        c = c * sign(a + t, p) % p
        word = (a + b - t, t) if t else (a + b,)
        out[word] = (out.get(word, 0) + c) % p
    return {w: c for w, c in out.items() if c}


def _first_bad_pair(word, p):
    for i in range(len(word) - 1):
        if word[i] < p * word[i + 1]:
            return i
    return None


def moment(word) -> int:
    """``sum i * a_i``; every rewrite lowers it."""
    return sum(i * a for i, a in enumerate(word, start=1))


def adem_normalize(word, p: int, budget: int = DEFAULT_STEP_BUDGET, stats: dict | None = None) -> dict[ExponentSeq, int]:
    """Rewrite ``P^{a_1} ... P^{a_n}`` into admissible words ``{I: c}``.

    Raises :class:`RewriteBudgetExceeded` after ``budget`` rewrite steps.
    If ``stats`` is given it receives the number of steps taken.
    """
    check_prime(p)
    if any(a < 0 for a in word):
        raise ValueError("letters must be nonnegative")
    start = tuple(a for a in word if a)
    pending: dict[ExponentSeq, int] = {start: 1}
    done: dict[ExponentSeq, int] = {}
    steps = 0
    while pending:
        w, c = pending.popitem()
        i = _first_bad_pair(w, p)
        if i is None:
            done[w] = (done.get(w, 0) + c) % p
            continue
        steps += 1
        if steps > budget:
            raise RewriteBudgetExceeded(f"more than {budget} rewrites for {word} at p={p}")
        for mid, k in adem_relation(w[i], w[i + 1], p).items():
            nw = w[:i] + mid + w[i + 2 :]
            assert moment(nw) < moment(w)
            pending[nw] = (pending.get(nw, 0) + c * k) % p
            if pending[nw] == 0:
                del pending[nw]
    if stats is not None:
        stats["steps"] = steps
    return {w: c for w, c in done.items() if c}


def compare_with_milnor(word, p: int) -> bool:
    """Do the Adem normal form and the plain Milnor product of the letters agree?"""
    return admissible_combination_to_milnor(adem_normalize(word, p), p) == admissible_to_milnor(word, p)


def compositions(total: int, max_letter: int | None = None):
    """All words of positive letters with the given sum."""
    if total == 0:
        yield ()
        return
    top = total if max_letter is None else min(total, max_letter)
    for first in range(1, top + 1):
        for rest in compositions(total - first, max_letter):
            yield (first,) + rest
