"""The Bockstein quotient of the mod-p Steenrod algebra in the Milnor basis.

Elements are sparse F_p combinations of Milnor basis vectors ``P(J)``, the
duals of the monomials ``xi^J``.  At ``p = 2`` the reduced power ``P^i``
stands for ``Sq^{2i}`` and ``xi_i`` for ``zeta_i^2``; with that convention the
same product formula, degrees and antipode serve every prime.
"""

from __future__ import annotations

import logging
import os
import struct
import threading
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from . import seqcomb
from .fp import check_prime, inv_mod, multinomial_mod, sign
from .seqcomb import ExponentSeq, normalize

log = logging.getLogger(__name__)

CACHE_ENV = "STEENROD_BOUNDS_CACHE"


def milnor_degree(exponents, p: int) -> int:
    """Topological degree ``sum 2 x_i (p^i - 1)`` of ``xi^J``."""
    return sum(2 * x * (p**i - 1) for i, x in enumerate(exponents, start=1))


@dataclass(frozen=True)
class MilnorElement:
    """Sparse F_p-linear combination of Milnor basis vectors.

    ``terms`` maps normalized exponent tuples to residues in ``1..p-1``.
    Construct through :meth:`from_terms` to get reduction and zero-dropping.
    """

    p: int
    terms: Mapping[ExponentSeq, int] = field(default_factory=dict)

    @classmethod
    def from_terms(cls, p: int, terms) -> MilnorElement:
        acc: dict[ExponentSeq, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, c in items:
            mono = normalize(mono)
            acc[mono] = (acc.get(mono, 0) + c) % p
        return cls(p, {m: c for m, c in acc.items() if c})

    @classmethod
    def unit(cls, p: int) -> MilnorElement:
        return cls(p, {(): 1})

    @classmethod
    def zero(cls, p: int) -> MilnorElement:
        return cls(p, {})

    @classmethod
    def monomial(cls, exponents, p: int, coeff: int = 1) -> MilnorElement:
        return cls.from_terms(p, {normalize(exponents): coeff})

    @classmethod
    def power(cls, k: int, p: int) -> MilnorElement:
        """The reduced power ``P^k`` (``Sq^{2k}`` at p=2)."""
        return cls.monomial((k,), p)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, MilnorElement):
            return NotImplemented
        return self.p == other.p and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.p, frozenset(self.terms.items())))

    def _check(self, other: MilnorElement):
        if self.p != other.p:
            raise ValueError(f"prime mismatch: {self.p} vs {other.p}")

    def __add__(self, other: MilnorElement) -> MilnorElement:
        self._check(other)
        return MilnorElement.from_terms(self.p, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self) -> MilnorElement:
        return self.scale(-1)

    def __sub__(self, other: MilnorElement) -> MilnorElement:
        return self + (-other)

    def scale(self, c: int) -> MilnorElement:
        return MilnorElement.from_terms(self.p, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return milnor_product(self, other)

    __rmul__ = scale

    def degrees(self) -> set[int]:
        return {milnor_degree(m, self.p) for m in self.terms}

    @property
    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int | None:
        """Common degree of the terms; ``None`` for zero or mixed elements."""
        degs = self.degrees()
        return degs.pop() if len(degs) == 1 else None

    def sorted_terms(self) -> list[tuple[ExponentSeq, int]]:
        """Terms in descending right-lex order of the exponents."""
        return sorted(self.terms.items(), key=lambda kv: seqcomb.right_lex_key(kv[0]), reverse=True)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{format_milnor(m)}" for m, c in self.sorted_terms())


def format_milnor(exponents) -> str:
    return "xi(" + ",".join(map(str, exponents)) + ")"


def _product_matrices(r: ExponentSeq, s: ExponentSeq, p: int) -> Iterator[dict]:
    """Yield every Milnor matrix for ``P(r) * P(s)`` as ``{(i, j): x_ij}``.

    Free cells are ``x_ij`` with ``i, j >= 1``; the rest of row ``i`` and
    column ``j`` are forced by ``x_i0 = r_i - sum_j p^j x_ij`` and
    ``x_0j = s_j - sum_i x_ij``, both of which must stay nonnegative.
    """
    rows, cols = len(r), len(s)
    row_left = list(r)
    col_left = list(s)
    cells = [(i, j) for i in range(1, rows + 1) for j in range(1, cols + 1)]
    chosen: dict = {}

    def rec(idx):
        if idx == len(cells):
            out = dict(chosen)
            for i in range(1, rows + 1):
                out[(i, 0)] = row_left[i - 1]
            for j in range(1, cols + 1):
                out[(0, j)] = col_left[j - 1]
            yield out
            return
        i, j = cells[idx]
        pj = p**j
        top = min(row_left[i - 1] // pj, col_left[j - 1])
        for x in range(top + 1):
            row_left[i - 1] -= x * pj
            col_left[j - 1] -= x
            chosen[(i, j)] = x
            yield from rec(idx + 1)
            row_left[i - 1] += x * pj
            col_left[j - 1] += x
        chosen.pop((i, j), None)

    yield from rec(0)


def _monomial_product(r: ExponentSeq, s: ExponentSeq, p: int) -> dict[ExponentSeq, int]:
    out: dict[ExponentSeq, int] = {}
    if not r:
        return {s: 1}
    if not s:
        return {r: 1}
    top = len(r) + len(s)
    for mat in _product_matrices(r, s, p):
        coeff = 1
        t = []
        for k in range(1, top + 1):
            diag = [mat.get((i, k - i), 0) for i in range(k + 1)]
            c = multinomial_mod(diag, p)
            if c == 0:
                coeff = 0
                break
            coeff = coeff * c % p
            t.append(sum(diag))
        if coeff:
            key = normalize(t)
            out[key] = (out.get(key, 0) + coeff) % p
    return {m: c for m, c in out.items() if c}


_product_cache: dict = {}


def monomial_product(r, s, p: int) -> dict[ExponentSeq, int]:
    """``P(r) * P(s)`` as a dict of exponent tuples to residues."""
    key = (normalize(r), normalize(s), p)
    hit = _product_cache.get(key)
    if hit is None:
        hit = _monomial_product(key[0], key[1], p)
        _product_cache[key] = hit
    return hit


def milnor_product(a: MilnorElement, b: MilnorElement) -> MilnorElement:
    a._check(b)
    p = a.p
    acc: dict[ExponentSeq, int] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            for m, c in monomial_product(ma, mb, p).items():
                acc[m] = (acc.get(m, 0) + ca * cb * c) % p
    return MilnorElement(p, {m: c for m, c in acc.items() if c})


def chi_pr(p: int, r: int) -> MilnorElement:
    """The antipode of ``P^r``: ``(-1)^r`` times the sum of all weight-r duals."""
    check_prime(p)
    if r < 0:
        raise ValueError("r must be nonnegative")
    s = sign(r, p)
    return MilnorElement.from_terms(p, {j: s for j in seqcomb.enumerate_upsilon_r(p, r)})


def chi_convolution_oracle(p: int, r: int, _memo=None) -> MilnorElement:
    """Antipode of ``P^r`` from ``sum_{i+j=r} P^i chi(P^j) = 0`` by recursion."""
    check_prime(p)
    memo = {} if _memo is None else _memo
    if r == 0:
        return MilnorElement.unit(p)
    if r in memo:
        return memo[r]
    total = MilnorElement.zero(p)
    for i in range(1, r + 1):
        total = total + milnor_product(MilnorElement.power(i, p), chi_convolution_oracle(p, r - i, memo))
    memo[r] = -total
    return memo[r]


def admissible_to_milnor(word, p: int) -> MilnorElement:
    """Milnor expansion of ``P^{x_1} P^{x_2} ... P^{x_n}``.

    Works for any composition, admissible or not; zero letters act as the unit.
    """
    out = MilnorElement.unit(p)
    for x in word:
        if x:
            out = milnor_product(out, MilnorElement.power(x, p))
    return out


def pairing(j, i, p: int) -> int:
    """Coefficient of the Milnor vector ``P(j)`` in the expansion of ``P^i``."""
    j, i = normalize(j), normalize(i)
    if milnor_degree(j, p) != 2 * (p - 1) * sum(i):
        return 0
    return admissible_to_milnor(i, p).terms.get(j, 0)


def excess_of_word(word, p: int) -> int:
    return 2 * sum(seqcomb.gamma(word, p))


@dataclass(frozen=True)
class TransitionMatrix:
    """Milnor coordinates of the Cartan-Serre basis in one degree.

    ``rows[a][b]`` is the coefficient of ``P(gamma(basis[b]))`` in
    ``P^{basis[a]}``; ``basis`` lists the admissible sequences of the degree in
    descending right-lex order, so the matrix is upper triangular.
    """

    p: int
    weight: int
    basis: tuple[ExponentSeq, ...]
    rows: tuple[tuple[int, ...], ...]

    @property
    def degree(self) -> int:
        return 2 * (self.p - 1) * self.weight

    @property
    def columns(self) -> tuple[ExponentSeq, ...]:
        return tuple(seqcomb.gamma(i, self.p) for i in self.basis)

    def is_upper_triangular(self) -> bool:
        n = len(self.basis)
        return all(self.rows[a][b] == 0 for a in range(n) for b in range(a))

    def diagonal(self) -> list[int]:
        return [self.rows[a][a] for a in range(len(self.basis))]


def _build_transition(p: int, weight: int) -> TransitionMatrix:
    basis = tuple(seqcomb.enumerate_gamma_r(p, weight))
    cols = [seqcomb.gamma(i, p) for i in basis]
    rows = []
    for word in basis:
        terms = admissible_to_milnor(word, p).terms
        rows.append(tuple(terms.get(j, 0) for j in cols))
    return TransitionMatrix(p, weight, basis, tuple(rows))


def _cache_path(p: int, weight: int) -> str | None:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    return os.path.join(root, f"transition_p{p}_d{2 * (p - 1) * weight}.bin")


_MAGIC = b"STMX"
_HEADER = struct.Struct("<4sIII")


def dump_transition(tm: TransitionMatrix) -> bytes:
    """Binary form: header (magic, prime, degree, size), then the upper
    triangle row by row as little-endian uint32 residues."""
    n = len(tm.basis)
    body = [tm.rows[a][b] for a in range(n) for b in range(a, n)]
    return _HEADER.pack(_MAGIC, tm.p, tm.degree, n) + struct.pack(f"<{len(body)}I", *body)


def load_transition(data: bytes) -> TransitionMatrix:
    magic, p, degree, n = _HEADER.unpack_from(data)
    if magic != _MAGIC:
        raise ValueError("not a transition matrix file")
    if degree % (2 * (p - 1)):
        raise ValueError(f"degree {degree} is not a multiple of {2 * (p - 1)}")
    weight = degree // (2 * (p - 1))
    basis = tuple(seqcomb.enumerate_gamma_r(p, weight))
    if len(basis) != n:
        raise ValueError(f"size {n} does not match basis size {len(basis)}")
    body = struct.unpack_from(f"<{n * (n + 1) // 2}I", data, _HEADER.size)
    rows = []
    it = iter(body)
    for a in range(n):
        rows.append(tuple([0] * a + [next(it) for _ in range(a, n)]))
    return TransitionMatrix(p, weight, basis, tuple(rows))


class _TransitionMemo:
    """Per-(p, weight) memo; each entry is computed at most once even when
    several threads ask for it concurrently."""

    def __init__(self):
        self._data: dict = {}
        self._locks: dict = {}
        self._guard = threading.Lock()

    def get(self, p: int, weight: int) -> TransitionMatrix:
        key = (p, weight)
        hit = self._data.get(key)
        if hit is not None:
            return hit
        with self._guard:
            lock = self._locks.setdefault(key, threading.Lock())
        with lock:
            hit = self._data.get(key)
            if hit is None:
                hit = self._compute(p, weight)
                self._data[key] = hit
        return hit

    def _compute(self, p, weight):
        path = _cache_path(p, weight)
        if path and os.path.exists(path):
            with open(path, "rb") as fh:
                tm = load_transition(fh.read())
            log.debug("loaded transition matrix from %s", path)
            return tm
        tm = _build_transition(p, weight)
        if not tm.is_upper_triangular():
            # the back-substitution below depends on this shape
            raise ArithmeticError(f"transition matrix p={p} weight={weight} is not triangular")
        if path:
            os.makedirs(os.path.dirname(path), exist_ok=True)
            tmp = f"{path}.{os.getpid()}.{threading.get_ident()}.tmp"
            with open(tmp, "wb") as fh:
                fh.write(dump_transition(tm))
            os.replace(tmp, path)
        return tm

    def clear(self):
        with self._guard:
            self._data.clear()
            self._locks.clear()


_transitions = _TransitionMemo()


def transition_matrix(p: int, degree: int) -> TransitionMatrix:
    """Transition matrix for topological ``degree`` (a multiple of 2(p-1))."""
    check_prime(p)
    if degree < 0 or degree % (2 * (p - 1)):
        raise ValueError(f"no reduced powers in degree {degree} at p={p}")
    return _transitions.get(p, degree // (2 * (p - 1)))


def milnor_to_admissible(e: MilnorElement) -> dict[ExponentSeq, int]:
    """Cartan-Serre coordinates ``{I: c}`` of a homogeneous element."""
    if not e.terms:
        return {}
    degree = e.degree
    if degree is None:
        raise ValueError("milnor_to_admissible needs a homogeneous element")
    p = e.p
    tm = transition_matrix(p, degree)
    cols = tm.columns
    target = [e.terms.get(j, 0) for j in cols]
    n = len(cols)
    coords = [0] * n
    # solve coords . rows = target; rows is upper triangular
    for b in range(n):
        acc = target[b]
        for a in range(b):
            if coords[a]:
                acc -= coords[a] * tm.rows[a][b]
        coords[b] = acc * inv_mod(tm.rows[b][b], p) % p
    return {tm.basis[a]: c for a, c in enumerate(coords) if c}


def admissible_combination_to_milnor(combo: Mapping, p: int) -> MilnorElement:
    """Milnor expansion of ``sum c * P^I`` over a dict ``{I: c}``."""
    out = MilnorElement.zero(p)
    for word, c in combo.items():
        out = out + admissible_to_milnor(word, p).scale(c)
    return out
