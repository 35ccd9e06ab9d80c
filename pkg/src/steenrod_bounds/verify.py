"""Desk-checkable claims, each a pure function of the caps it runs at."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from math import factorial, log, prod
from typing import Callable

from . import adem, bounds, milnor, polyaction, seqcomb
from .milnor import MilnorElement, milnor_product


@dataclass(frozen=True)
class Caps:
    r: int = 8
    seq: int = 30
    n: int = 500
    degree: int = 60
    triples: int = 200
    seed: int = 2024


@dataclass(frozen=True)
class ClaimResult:
    claim: str
    anchor: str
    ok: bool
    detail: str
    elapsed: float


def random_element(p: int, degree: int, rng: random.Random, max_terms: int = 3) -> MilnorElement:
    """Random nonzero homogeneous element of the given degree (or the unit at 0)."""
    weight = degree // (2 * (p - 1))
    basis = seqcomb.enumerate_upsilon_r(p, weight)
    picks = rng.sample(basis, min(len(basis), rng.randint(1, max_terms)))
    return MilnorElement.from_terms(p, {j: rng.randint(1, p - 1) for j in picks})


def random_poly(p: int, nvars: int, total: int, rng: random.Random, max_terms: int = 3) -> polyaction.PolyClass:
    """Random homogeneous class whose monomials have exponent sum ``total``."""
    terms = {}
    for _ in range(max_terms):
        cuts = sorted(rng.randint(0, total) for _ in range(nvars - 1))
        parts = [b - a for a, b in zip([0] + cuts, cuts + [total])]
        terms[tuple(parts)] = rng.randint(1, p - 1)
    return polyaction.PolyClass.from_terms(p, nvars, terms)


def _table(c: Caps):
    got = [k for _, k in bounds.paper_table()]
    want = list(bounds.PUBLISHED_KSO_TABLE)
    return got == want, f"computed {got}"


def _exact(c: Caps):
    for n in range(1, 24):
        ev = bounds.exact_values(n)
        base = factorial((n - 1) // 2)
        if n < 12 and ev["ku_exact"] != base:
            return False, f"ku_exact({n})"
        if ev["kso_exact"] != base >> ((base & -base).bit_length() - 1):
            return False, f"kso_exact({n})"
    if bounds.exact_values(24)["kso_exact"] != {155925, 467775}:
        return False, "n=24 candidates"
    return True, "n<12, n<24, n=24"


def _consistency(c: Caps):
    for n in range(1, c.n + 1):
        primes = bounds.contributing_primes(n)
        for p in primes:
            if bounds.nu_lower(p, n) > bounds.nu_upper(p, n):
                return False, f"nu_lower > nu_upper at p={p}, n={n}"
        lo, hi = bounds.ku_bounds(n)
        if prod(p ** bounds.nu_lower(p, n) for p in primes) != lo:
            return False, f"valuation product differs from factorial at n={n}"
        if hi % lo:
            return False, f"lower does not divide upper at n={n}"
    return True, f"n <= {c.n}"


def _count_k(c: Caps):
    for p in (2, 3, 5, 7):
        for n in range(1, c.n + 1):
            if seqcomb.count_k(p, n) != seqcomb.count_k_brute(p, n):
                return False, f"p={p}, n={n}"
    return True, f"p in 2,3,5,7; n <= {c.n}"


def _ex_recurrence(c: Caps):
    for p in (2, 3, 5):
        for r in range(1, c.seq + 1):
            d = seqcomb.ex(p, r) - seqcomb.ex(p, r - 1)
            if d not in (2, -2 * (p - 1)):
                return False, f"p={p}, r={r}, diff={d}"
        for r in range(0, min(c.seq, 20) + 1):
            if seqcomb.ex(p, r) != seqcomb.ex_brute(p, r):
                return False, f"brute minimum differs at p={p}, r={r}"
    return True, f"p in 2,3,5; r <= {c.seq}"


def _greatest(c: Caps):
    for p in (2, 3, 5):
        prev = ()
        for r in range(0, c.seq + 1):
            g = seqcomb.greatest_in_upsilon_r(p, r)
            all_r = seqcomb.enumerate_upsilon_r(p, r)
            if g != max(all_r, key=seqcomb.right_lex_key):
                return False, f"not the maximum at p={p}, r={r}"
            if not seqcomb.satisfies_greatest_conditions(g, p):
                return False, f"digit conditions fail at p={p}, r={r}"
            if sum(g) != min(map(sum, all_r)):
                return False, f"term sum not minimal at p={p}, r={r}"
            if r and seqcomb.upsilon_successor(prev, p) != g:
                return False, f"successor rule fails at p={p}, r={r}"
            prev = g
    return True, f"p in 2,3,5; r <= {c.seq}"


def _gamma(c: Caps):
    for p in (2, 3, 5):
        for r in range(0, min(c.seq, 16) + 1):
            words = seqcomb.enumerate_gamma_r_direct(p, r)
            images = [seqcomb.gamma(w, p) for w in words]
            if sorted(images, key=seqcomb.right_lex_key, reverse=True) != images:
                return False, f"order not preserved at p={p}, r={r}"
            if images != seqcomb.enumerate_upsilon_r(p, r):
                return False, f"not a bijection onto the slice at p={p}, r={r}"
            if any(seqcomb.gamma_inv(j, p) != w for j, w in zip(images, words)):
                return False, f"inverse fails at p={p}, r={r}"
    return True, "p in 2,3,5"


def _triangular(c: Caps):
    for p in (2, 3, 5):
        for degree in range(0, c.degree + 1, 2 * (p - 1)):
            tm = milnor.transition_matrix(p, degree)
            if not tm.is_upper_triangular():
                return False, f"not triangular at p={p}, degree={degree}"
            if any(d not in (1, p - 1) for d in tm.diagonal()):
                return False, f"diagonal not +-1 at p={p}, degree={degree}"
            for w in tm.basis:
                if milnor.milnor_to_admissible(milnor.admissible_to_milnor(w, p)) != {w: 1}:
                    return False, f"round trip fails for {w} at p={p}"
    return True, f"p in 2,3,5; degree <= {c.degree}"


def _cor4(c: Caps):
    for p in (2, 3):
        for r in range(1, c.r + 1):
            top = seqcomb.gamma_inv(seqcomb.greatest_in_upsilon_r(p, r), p)
            coeff = milnor.milnor_to_admissible(milnor.chi_pr(p, r)).get(top, 0)
            if coeff not in (1, p - 1):
                return False, f"coefficient {coeff} at p={p}, r={r}"
    return True, f"p in 2,3; r <= {c.r}"


def _antipode(c: Caps):
    for p in (2, 3, 5):
        memo: dict = {}
        for r in range(1, c.r + 1):
            chi = milnor.chi_pr(p, r)
            if chi != milnor.chi_convolution_oracle(p, r, memo):
                return False, f"oracle differs at p={p}, r={r}"
            left = MilnorElement.zero(p)
            right = MilnorElement.zero(p)
            for i in range(r + 1):
                left = left + milnor_product(MilnorElement.power(i, p), milnor.chi_pr(p, r - i))
                right = right + milnor_product(milnor.chi_pr(p, i), MilnorElement.power(r - i, p))
            if left or right:
                return False, f"convolution identity fails at p={p}, r={r}"
    return True, f"p in 2,3,5; r <= {c.r}"


def _adem(c: Caps):
    count = 0
    for p in (2, 3, 5):
        for total in range(c.r + 1):
            for w in adem.compositions(total):
                if not adem.compare_with_milnor(w, p):
                    return False, f"{w} at p={p}"
                count += 1
    return True, f"{count} compositions, letter sum <= {c.r}"


def _witness(c: Caps):
    for p, top in ((2, c.r), (3, min(c.r, 6))):
        for r in range(1, top + 1):
            rep = polyaction.chi_nontriviality_witness(p, r)
            if not rep.ok:
                return False, f"p={p}, r={r}"
    return True, f"p=2 r <= {c.r}; p=3 r <= {min(c.r, 6)}"


def _module(c: Caps, degree_cap: int = 40):
    rng = random.Random(c.seed)
    nonzero = 0
    for t in range(c.triples):
        p = (2, 3)[t % 2]
        step = 2 * (p - 1)
        total = rng.randrange(0, degree_cap // step + 1)
        wa = rng.randint(0, total)
        a = random_element(p, wa * step, rng)
        b = random_element(p, (total - wa) * step, rng)
        f = random_poly(p, rng.randint(1, 3), rng.randint(1, 5), rng)
        lhs = polyaction.apply_element(milnor_product(a, b), f)
        rhs = polyaction.apply_element(a, polyaction.apply_element(b, f))
        if lhs != rhs:
            return False, f"triple {t} at p={p}"
        nonzero += bool(lhs)
    return True, f"{c.triples} triples, {nonzero} with nonzero action"


def _ratio(c: Caps):
    _, lower, upper = bounds.nu_gap_sweep(2, c.n)
    for n in range(3, c.n + 1):
        lo, hi = int(lower[n - 1]), int(upper[n - 1])
        if hi - lo >= log((n - 1) / 2, 2) + 1:
            return False, f"gap too large at n={n}"
    return True, f"p=2, n <= {c.n}"


CLAIMS: list[tuple[str, str, Callable]] = [
    ("kso-table", "bounds.paper_table", _table),
    ("exact-small-n", "bounds.exact_values", _exact),
    ("nu-consistency", "bounds.ku_bounds", _consistency),
    ("count-k-oracle", "seqcomb.count_k", _count_k),
    ("ex-recurrence", "seqcomb.ex", _ex_recurrence),
    ("greatest-element", "seqcomb.greatest_in_upsilon_r", _greatest),
    ("gamma-bijection", "seqcomb.gamma", _gamma),
    ("pairing-triangular", "milnor.transition_matrix", _triangular),
    ("top-word-in-antipode", "milnor.milnor_to_admissible", _cor4),
    ("antipode-oracle", "milnor.chi_pr", _antipode),
    ("adem-vs-milnor", "adem.compare_with_milnor", _adem),
    ("antipode-acts-nontrivially", "polyaction.chi_nontriviality_witness", _witness),
    ("module-structure", "polyaction.apply_element", _module),
    ("log-gap", "bounds.nu_gap_sweep", _ratio),
]


def run_claims(caps: Caps = Caps(), only=None) -> list[ClaimResult]:
    results = []
    for name, anchor, fn in CLAIMS:
        if only and name not in only:
            continue
        t0 = time.perf_counter()
        try:
            ok, detail = fn(caps)
        except Exception as exc:  # a crash is a failed claim, not a crashed run
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(ClaimResult(name, anchor, bool(ok), detail, time.perf_counter() - t0))
    return results
