import random
import threading

import pytest

from steenrod_bounds import milnor, seqcomb
from steenrod_bounds.milnor import MilnorElement, milnor_product

P = MilnorElement.power


# --- independent oracle: the product is dual to the coproduct on F_p[xi_1, xi_2, ...]


def _tensor_mul(a, b, p):
    out = {}
    for (l1, r1), c1 in a.items():
        for (l2, r2), c2 in b.items():
            n = max(len(l1), len(l2))
            l = tuple(x + y for x, y in zip(l1 + (0,) * (n - len(l1)), l2 + (0,) * (n - len(l2))))
            n = max(len(r1), len(r2))
            r = tuple(x + y for x, y in zip(r1 + (0,) * (n - len(r1)), r2 + (0,) * (n - len(r2))))
            key = (seqcomb.normalize(l), seqcomb.normalize(r))
            out[key] = (out.get(key, 0) + c1 * c2) % p
    return {k: v for k, v in out.items() if v}


def _unit_vec(k, power=1):
    return tuple([0] * (k - 1) + [power]) if k else ()


def coproduct(t, p):
    """psi(xi^T) with psi(xi_k) = sum_i xi_{k-i}^{p^i} (x) xi_i."""
    result = {((), ()): 1}
    for k, tk in enumerate(t, start=1):
        psi_k = {}
        for i in range(k + 1):
            key = (_unit_vec(k - i, p**i), _unit_vec(i))
            psi_k[key] = (psi_k.get(key, 0) + 1) % p
        for _ in range(tk):
            result = _tensor_mul(result, psi_k, p)
    return result


def product_by_coproduct(r, s, p):
    degree = milnor.milnor_degree(r, p) + milnor.milnor_degree(s, p)
    out = {}
    for t in seqcomb.enumerate_upsilon_r(p, degree // (2 * (p - 1))):
        c = coproduct(t, p).get((seqcomb.normalize(r), seqcomb.normalize(s)), 0)
        if c:
            out[t] = c
    return MilnorElement.from_terms(p, out)


@pytest.mark.parametrize("p, cap", [(2, 7), (3, 4), (5, 3)])
def test_product_matches_coproduct_oracle(p, cap):
    seqs = [j for r in range(cap + 1) for j in seqcomb.enumerate_upsilon_r(p, r)]
    for r in seqs:
        for s in seqs:
            if seqcomb.upsilon_degree(r, p) + seqcomb.upsilon_degree(s, p) > cap + 2:
                continue
            assert milnor_product(MilnorElement.monomial(r, p), MilnorElement.monomial(s, p)) == \
                product_by_coproduct(r, s, p), (r, s)


# --- examples


def test_degrees():
    assert milnor.milnor_degree((1,), 2) == 2
    assert milnor.milnor_degree((), 7) == 0
    assert milnor.milnor_degree((0, 1), 3) == 16


def test_product_examples():
    assert P(1, 3) * MilnorElement.unit(3) == P(1, 3)
    assert P(1, 3) * P(1, 3) == MilnorElement.monomial((2,), 3, 2)
    assert not (P(1, 2) * P(1, 2))


def test_prime_mismatch():
    with pytest.raises(ValueError):
        P(1, 2) * P(1, 3)


def test_chi_examples():
    assert milnor.chi_pr(3, 1) == MilnorElement.monomial((1,), 3, 2)
    assert milnor.chi_pr(5, 0) == MilnorElement.unit(5)
    assert milnor.chi_pr(2, 3) == MilnorElement.from_terms(2, {(3,): 1, (0, 1): 1})
    assert milnor.chi_pr(3, 2).degree == 8


def test_convolution_oracle_examples():
    assert milnor.chi_convolution_oracle(3, 1) == MilnorElement.monomial((1,), 3, 2)
    assert milnor.chi_convolution_oracle(2, 2) == MilnorElement.monomial((2,), 2)
    assert milnor.chi_convolution_oracle(2, 3) == milnor.chi_pr(2, 3)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_convolution_identity(p):
    for r in range(1, 9):
        left = MilnorElement.zero(p)
        right = MilnorElement.zero(p)
        for i in range(r + 1):
            left = left + P(i, p) * milnor.chi_pr(p, r - i)
            right = right + milnor.chi_pr(p, i) * P(r - i, p)
        assert not left and not right


def test_admissible_to_milnor_examples():
    assert milnor.admissible_to_milnor((5,), 3) == P(5, 3)
    assert milnor.admissible_to_milnor((), 3) == MilnorElement.unit(3)
    assert milnor.admissible_to_milnor((2, 1), 2).terms[(0, 1)] == 1


def test_pairing_examples():
    assert milnor.pairing((0, 1), (2, 1), 2) == 1
    # degree mismatch pairs to zero
    assert milnor.pairing((1,), (2, 1), 2) == 0


@pytest.mark.parametrize("p, cap", [(2, 14), (3, 8), (5, 5)])
def test_pairing_triangular(p, cap):
    for r in range(cap + 1):
        words = seqcomb.enumerate_gamma_r(p, r)
        for i in words:
            assert milnor.pairing(seqcomb.gamma(i, p), i, p) in (1, p - 1)
            for i2 in words:
                if seqcomb.right_lex_cmp(i, i2) < 0:
                    assert milnor.pairing(seqcomb.gamma(i2, p), i, p) == 0


def test_p2_diagonal_is_one():
    for d in range(0, 41, 2):
        assert set(milnor.transition_matrix(2, d).diagonal()) == {1}


def test_milnor_to_admissible_examples():
    assert milnor.milnor_to_admissible(P(4, 3)) == {(4,): 1}
    assert milnor.milnor_to_admissible(milnor.chi_pr(2, 2)) == {(2,): 1}
    assert milnor.milnor_to_admissible(MilnorElement.zero(2)) == {}
    with pytest.raises(ValueError):
        milnor.milnor_to_admissible(P(1, 2) + P(2, 2))


@pytest.mark.parametrize("p, rmax", [(2, 10), (3, 8), (5, 6)])
def test_top_word_of_antipode(p, rmax):
    for r in range(1, rmax + 1):
        top = seqcomb.gamma_inv(seqcomb.greatest_in_upsilon_r(p, r), p)
        assert milnor.milnor_to_admissible(milnor.chi_pr(p, r))[top] in (1, p - 1)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_roundtrip_random_elements(p):
    rng = random.Random(p)
    for _ in range(30):
        w = rng.randrange(0, 12)
        basis = seqcomb.enumerate_upsilon_r(p, w)
        e = MilnorElement.from_terms(p, {j: rng.randrange(p) for j in basis})
        combo = milnor.milnor_to_admissible(e)
        assert milnor.admissible_combination_to_milnor(combo, p) == e


def _rand(p, rng, wmax=5):
    w = rng.randrange(0, wmax + 1)
    basis = seqcomb.enumerate_upsilon_r(p, w)
    return MilnorElement.from_terms(p, {j: rng.randrange(1, p) for j in rng.sample(basis, min(2, len(basis)))})


@pytest.mark.parametrize("p", [2, 3, 5])
def test_algebra_axioms(p):
    rng = random.Random(10 + p)
    one = MilnorElement.unit(p)
    for _ in range(40):
        a, b, c = _rand(p, rng), _rand(p, rng), _rand(p, rng)
        assert (a * b) * c == a * (b * c)
        assert a * one == a == one * a
        assert a * (b + c) == a * b + a * c
        assert (a.scale(2) * b) == (a * b).scale(2)
        ab = a * b
        if ab:
            assert ab.degree == a.degree + b.degree


def test_element_bookkeeping():
    e = MilnorElement.from_terms(3, {(1,): 3, (2,): 4})
    assert e.terms == {(2,): 1}
    assert (P(1, 3) + P(2, 3)).degree is None
    assert not (P(1, 3) + P(1, 3).scale(2))
    assert (P(1, 3) - P(1, 3)) == MilnorElement.zero(3)


def test_transition_cache_roundtrip(tmp_path, monkeypatch):
    tm = milnor.transition_matrix(3, 32)
    blob = milnor.dump_transition(tm)
    assert blob[:4] == b"STMX"
    assert int.from_bytes(blob[4:8], "little") == 3
    assert int.from_bytes(blob[8:12], "little") == 32
    assert milnor.load_transition(blob) == tm

    monkeypatch.setenv(milnor.CACHE_ENV, str(tmp_path))
    memo = milnor._TransitionMemo()
    monkeypatch.setattr(milnor, "_transitions", memo)
    first = milnor.transition_matrix(2, 24)
    files = list(tmp_path.iterdir())
    assert [f.name for f in files] == ["transition_p2_d24.bin"]

    calls = []
    monkeypatch.setattr(milnor, "_build_transition", lambda *a: calls.append(a))
    memo.clear()
    assert milnor.transition_matrix(2, 24) == first
    assert calls == []  # served from disk


def test_load_transition_rejects_garbage():
    with pytest.raises(ValueError):
        milnor.load_transition(b"XXXX" + bytes(12))


def test_transition_memo_computes_once_under_threads(monkeypatch):
    memo = milnor._TransitionMemo()
    monkeypatch.setattr(milnor, "_transitions", memo)
    monkeypatch.delenv(milnor.CACHE_ENV, raising=False)
    real = milnor._build_transition
    calls = []
    gate = threading.Event()

    def slow_build(p, w):
        calls.append((p, w))
        gate.wait(1)
        return real(p, w)

    monkeypatch.setattr(milnor, "_build_transition", slow_build)
    out = []
    threads = [threading.Thread(target=lambda: out.append(milnor.transition_matrix(3, 40))) for _ in range(8)]
    for t in threads:
        t.start()
    gate.set()
    for t in threads:
        t.join()
    assert calls == [(3, 10)]
    assert len(out) == 8 and all(o is out[0] for o in out)


def test_excess_of_word():
    assert milnor.excess_of_word((6,), 3) == 12
    assert milnor.excess_of_word((2, 1), 2) == 2
    for p in (2, 3):
        for r in range(1, 12):
            assert min(milnor.excess_of_word(w, p) for w in seqcomb.enumerate_gamma_r_direct(p, r)) == seqcomb.ex(p, r)
