import random

import pytest

from steenrod_bounds import milnor, seqcomb
from steenrod_bounds.milnor import MilnorElement
from steenrod_bounds.polyaction import (
    PolyClass,
    apply_element,
    apply_pk,
    apply_word,
    chi_nontriviality_witness,
    format_monomial,
    pk_on_power,
    witness_for,
)


def total_power(f, p, kmax):
    """sum_k P^k f for k <= kmax."""
    out = PolyClass(p, f.nvars, {})
    for k in range(kmax + 1):
        out = out + apply_pk(p, k, f)
    return out


def test_pk_on_power_examples():
    assert pk_on_power(3, 1, 1) == (1, 3)
    assert pk_on_power(5, 0, 7) == (1, 7)
    assert pk_on_power(2, 2, 2) == (1, 4)
    assert pk_on_power(3, 2, 1)[0] == 0


def test_apply_pk_examples():
    f = PolyClass.fundamental(2, 2)
    assert apply_pk(2, 0, f) == f
    assert apply_pk(2, 2, f) == PolyClass.monomial(2, (2, 2))
    assert apply_pk(3, 1, PolyClass.monomial(3, (2,))) == PolyClass.monomial(3, (4,), 2)


def test_power_on_single_variable_by_frobenius():
    # the total power is a ring map with i -> i + i^p, so P(i^a) = (i + i^p)^a
    p = 3
    for a in range(8):
        got = total_power(PolyClass.monomial(p, (a,)), p, a)
        want = PolyClass.monomial(p, (0,))
        base = PolyClass.from_terms(p, 1, {(1,): 1, (p,): 1})
        for _ in range(a):
            want = want * base
        assert got == want


def _rand_poly(p, nvars, rng):
    deg = rng.randrange(1, 4)
    terms = {}
    for _ in range(rng.randrange(1, 4)):
        cuts = sorted(rng.randrange(deg + 1) for _ in range(nvars - 1))
        terms[tuple(b - a for a, b in zip([0] + cuts, cuts + [deg]))] = rng.randrange(1, p)
    return PolyClass.from_terms(p, nvars, terms)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_cartan_formula(p):
    rng = random.Random(p)
    for _ in range(25):
        f, g = _rand_poly(p, 2, rng), _rand_poly(p, 2, rng)
        for k in range(6):
            rhs = PolyClass(p, 2, {})
            for i in range(k + 1):
                rhs = rhs + apply_pk(p, i, f) * apply_pk(p, k - i, g)
            lhs = apply_pk(p, k, f * g)
            assert lhs == rhs
            if lhs:
                assert lhs.degree == f.degree + g.degree + 2 * k * (p - 1)


def test_apply_word_order():
    f = PolyClass.fundamental(2, 2)
    assert apply_word((), f) == f
    # P^1 first (i1 i2 -> i1^2 i2 + i1 i2^2), then P^2
    assert apply_word((2, 1), f) == apply_pk(2, 2, apply_pk(2, 1, f))
    # cross terms carry binom(2, 1) = 0 mod 2
    assert apply_word((2, 1), f) == PolyClass.from_terms(2, 2, {(4, 1): 1, (1, 4): 1})


@pytest.mark.parametrize("p", [2, 3])
def test_excess_kills_fundamental_class(p):
    for r in range(1, 10):
        for w in seqcomb.enumerate_gamma_r_direct(p, r):
            e = milnor.excess_of_word(w, p)
            for m in range(1, 4):
                if e > 2 * m:
                    assert not apply_word(w, PolyClass.fundamental(p, m))


def test_apply_element_examples():
    f = PolyClass.monomial(2, (1,))
    assert apply_element(MilnorElement.unit(2), f) == f
    assert apply_element(milnor.chi_pr(2, 1), f) == PolyClass.monomial(2, (2,))


@pytest.mark.parametrize("p", [2, 3])
def test_module_structure_small(p):
    rng = random.Random(7 * p)
    for _ in range(30):
        a = MilnorElement.monomial(rng.choice(seqcomb.enumerate_upsilon_r(p, rng.randrange(4))), p)
        b = MilnorElement.monomial(rng.choice(seqcomb.enumerate_upsilon_r(p, rng.randrange(4))), p)
        f = _rand_poly(p, 3, rng)
        assert apply_element(a * b, f) == apply_element(a, apply_element(b, f))


def test_witness_examples():
    rep = chi_nontriviality_witness(2, 1)
    assert rep.ok and rep.result == PolyClass.monomial(2, (2,)) and rep.witness_monomial == (2,)
    rep = chi_nontriviality_witness(2, 2)
    assert rep.ok and rep.witness_monomial == (2, 2) and rep.result.terms[(2, 2)]
    rep = chi_nontriviality_witness(2, 3)
    assert rep.ok and rep.nvars == 1 and rep.witness_monomial == (4,)


def test_witness_pattern():
    assert witness_for((1, 0, 2), 3) == (27, 27, 3)
    assert witness_for((), 5) == ()


@pytest.mark.parametrize("p, rmax", [(2, 10), (3, 8), (5, 5)])
def test_leading_monomial_of_each_minimal_word(p, rmax):
    # every J of minimal term sum: M_J has coefficient 1 and leads in left-lex order
    for r in range(1, rmax + 1):
        m = seqcomb.ex(p, r) // 2
        for j in seqcomb.enumerate_upsilon_r(p, r):
            if 2 * sum(j) != seqcomb.ex(p, r):
                continue
            g = apply_word(seqcomb.gamma_inv(j, p), PolyClass.fundamental(p, m))
            mono = witness_for(j, p)
            assert g.terms.get(mono) == 1
            assert g.leading_monomial() == mono


def test_format_monomial():
    assert format_monomial((2, 2)) == "i1^2*i2^2"
    assert format_monomial((0, 1)) == "i2"
    assert format_monomial((0, 0)) == "1"
