"""Reduced powers acting on ``F_p[i_1, ..., i_m]`` with every ``i_k`` in degree 2.

This is the mod-p cohomology of a product of ``m`` copies of ``K(Z, 2)``.
On a single generator ``P^k(i^a) = binom(a, k) i^(a + k(p-1))`` and the
Cartan formula extends it to products.  The Bockstein acts trivially here, so
the ring is a module over the Bockstein quotient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from . import seqcomb
from .fp import binom_mod, check_prime
from .milnor import MilnorElement, chi_pr, milnor_to_admissible

Multidegree = tuple[int, ...]


@dataclass(frozen=True)
class PolyClass:
    p: int
    nvars: int
    terms: Mapping[Multidegree, int] = field(default_factory=dict)

    @classmethod
    def from_terms(cls, p: int, nvars: int, terms) -> PolyClass:
        acc: dict[Multidegree, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, c in items:
            mono = tuple(mono)
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} has the wrong number of variables")
            acc[mono] = (acc.get(mono, 0) + c) % p
        return cls(p, nvars, {m: c for m, c in acc.items() if c})

    @classmethod
    def fundamental(cls, p: int, nvars: int) -> PolyClass:
        """The product ``i_1 i_2 ... i_m``."""
        return cls(p, nvars, {(1,) * nvars: 1})

    @classmethod
    def monomial(cls, p: int, exponents, coeff: int = 1) -> PolyClass:
        exponents = tuple(exponents)
        return cls.from_terms(p, len(exponents), {exponents: coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, PolyClass):
            return NotImplemented
        return (self.p, self.nvars, dict(self.terms)) == (other.p, other.nvars, dict(other.terms))

    def __hash__(self):
        return hash((self.p, self.nvars, frozenset(self.terms.items())))

    def _check(self, other):
        if (self.p, self.nvars) != (other.p, other.nvars):
            raise ValueError("incompatible polynomial classes")

    def __add__(self, other: PolyClass) -> PolyClass:
        self._check(other)
        return PolyClass.from_terms(self.p, self.nvars, list(self.terms.items()) + list(other.terms.items()))

    def scale(self, c: int) -> PolyClass:
        return PolyClass.from_terms(self.p, self.nvars, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other: PolyClass) -> PolyClass:
        self._check(other)
        acc: dict[Multidegree, int] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                acc[m] = (acc.get(m, 0) + ca * cb) % self.p
        return PolyClass(self.p, self.nvars, {m: c for m, c in acc.items() if c})

    def degrees(self) -> set[int]:
        return {2 * sum(m) for m in self.terms}

    @property
    def degree(self) -> int | None:
        degs = self.degrees()
        return degs.pop() if len(degs) == 1 else None

    def sorted_terms(self) -> list[tuple[Multidegree, int]]:
        """Terms in descending left-lex order of the exponent vectors."""
        return sorted(self.terms.items(), reverse=True)

    def leading_monomial(self) -> Multidegree | None:
        return max(self.terms) if self.terms else None

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{format_monomial(m)}" for m, c in self.sorted_terms())


def format_monomial(exponents) -> str:
    parts = []
    for k, a in enumerate(exponents, start=1):
        if a == 1:
            parts.append(f"i{k}")
        elif a:
            parts.append(f"i{k}^{a}")
    return "*".join(parts) or "1"


def pk_on_power(p: int, k: int, a: int) -> tuple[int, int]:
    """``P^k(i^a)`` as ``(coefficient, exponent)``."""
    return binom_mod(a, k, p), a + k * (p - 1)


def _pk_on_monomial(p: int, k: int, mono: Multidegree) -> dict[Multidegree, int]:
    # Cartan formula: split k as k_1 + ... + k_m over the variables
    partial: dict[tuple[Multidegree, int], int] = {((), 0): 1}
    for idx, a in enumerate(mono):
        last = idx == len(mono) - 1
        nxt: dict[tuple[Multidegree, int], int] = {}
        for (prefix, used), c in partial.items():
            left = k - used
            choices = (left,) if last else range(min(a, left) + 1)
            for ki in choices:
                b, e = pk_on_power(p, ki, a)
                if b == 0:
                    continue
                key = (prefix + (e,), used + ki)
                nxt[key] = (nxt.get(key, 0) + c * b) % p
        partial = nxt
    return {m: c for (m, _), c in partial.items() if c}


def apply_pk(p: int, k: int, f: PolyClass) -> PolyClass:
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return f
    acc: dict[Multidegree, int] = {}
    for mono, c in f.terms.items():
        for m, b in _pk_on_monomial(p, k, mono).items():
            acc[m] = (acc.get(m, 0) + c * b) % p
    return PolyClass(p, f.nvars, {m: c for m, c in acc.items() if c})


def apply_word(word, f: PolyClass) -> PolyClass:
    """Apply ``P^{a_1} ... P^{a_n}``; the rightmost letter acts first."""
    for a in reversed(tuple(word)):
        if not f:
            break
        f = apply_pk(f.p, a, f)
    return f


def apply_combination(combo: Mapping, f: PolyClass) -> PolyClass:
    out = PolyClass(f.p, f.nvars, {})
    for word, c in combo.items():
        out = out + apply_word(word, f).scale(c)
    return out


def apply_element(e: MilnorElement, f: PolyClass) -> PolyClass:
    """Act by a homogeneous algebra element through its Cartan-Serre form."""
    if e.p != f.p:
        raise ValueError("prime mismatch")
    return apply_combination(milnor_to_admissible(e), f)


def witness_for(seq, p: int) -> Multidegree:
    """``x_n`` variables raised to ``p^n``, then ``x_{n-1}`` to ``p^{n-1}``,
    down to ``x_1`` variables raised to ``p``."""
    out: list[int] = []
    for i in range(len(seq), 0, -1):
        out.extend([p**i] * seq[i - 1])
    return tuple(out)


@dataclass(frozen=True)
class WitnessReport:
    p: int
    r: int
    nvars: int
    greatest: tuple[int, ...]
    result: PolyClass
    witness_monomial: Multidegree
    witness_coefficient: int
    is_leading: bool

    @property
    def ok(self) -> bool:
        return bool(self.result) and self.witness_coefficient != 0 and self.is_leading


def chi_nontriviality_witness(p: int, r: int) -> WitnessReport:
    """Act by the antipode of ``P^r`` on ``i_1 ... i_m`` with ``m = ex(r)/2``."""
    check_prime(p)
    if r < 1:
        raise ValueError("r must be positive")
    greatest = seqcomb.greatest_in_upsilon_r(p, r)
    nvars = seqcomb.ex(p, r) // 2
    g = apply_element(chi_pr(p, r), PolyClass.fundamental(p, nvars))
    mono = witness_for(greatest, p)
    return WitnessReport(
        p=p,
        r=r,
        nvars=nvars,
        greatest=greatest,
        result=g,
        witness_monomial=mono,
        witness_coefficient=g.terms.get(mono, 0),
        is_leading=g.leading_monomial() == mono,
    )
