import random
from collections import Counter

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from oracles import choice_function_signs, explicit_choice_functions, sympy_rank, transfer_oracle_sympy, transfer_value_at
from leavitt_lab import (
    QQ,
    ZZ,
    BivariatePolynomial,
    Zmod,
    adjoint,
    commutator,
    evaluate_transfer,
    find_relation,
    monomial,
    one,
    relation_search,
    to_unitary,
    transfer_factorization,
    transfer_polynomial,
    u_plus,
)
from leavitt_lab.algebra import power
from leavitt_lab.errors import InfeasibleDegree, NotCommuting, NotUnitary, UnsupportedRing
from leavitt_lab.relations import evaluate, normalize_for_transfer
from leavitt_lab.sampling import commuting_pair
from leavitt_lab.thompson import SWAP, X0

swap = to_unitary(SWAP)
P = BivariatePolynomial.parse


def test_commutator_examples():
    a = monomial(ZZ, "a")
    assert not commutator(a, a)
    u = to_unitary(X0)
    assert not commutator(u, power(u, 2))
    aa = monomial(ZZ, "a", "a")
    assert commutator(swap, aa) == monomial(ZZ, "b", "a") - monomial(ZZ, "a", "b")


def test_find_relation_examples():
    u = to_unitary(X0)
    assert find_relation(u, u, 1) == P("w - z")
    assert find_relation(u, adjoint(u), 1) == P("w z - 1")
    q = find_relation(swap, power(swap, 2), 2)
    assert q is not None and not evaluate(q, swap, power(swap, 2))


def test_relation_errors():
    a = monomial(ZZ, "a")
    with pytest.raises(NotCommuting):
        find_relation(swap, monomial(ZZ, "a", "a") - monomial(ZZ, "b", "b"), 1)
    with pytest.raises(NotUnitary):
        find_relation(a, a, 1)
    with pytest.raises(UnsupportedRing):
        find_relation(one(Zmod(6)), one(Zmod(6)), 1)
    with pytest.raises(ValueError):
        find_relation(swap, swap, 0)


def test_relation_report_shape():
    u = to_unitary(X0)
    rep = relation_search(u, u, 2)
    assert rep.columns == 9 and rep.kernel_dimension == rep.columns - rep.rank
    assert rep.verified


@pytest.mark.parametrize("ring", [ZZ, QQ, Zmod(3)])
@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 10**9))
def test_relation_rank_matches_sympy(ring, seed):
    u, v, _ = commuting_pair(random.Random(seed), ring, signed=True)
    d = 2
    rep = relation_search(u, v, d)
    cols = [(power(u, i) * power(v, j)).terms for i in range(d + 1) for j in range(d + 1)]
    assert rep.rank == sympy_rank(cols, ring.modulus or None)
    if rep.polynomial is not None:
        assert not evaluate(rep.polynomial, u, v)


def test_choice_function_counts_n1_explicit():
    cells, funcs = explicit_choice_functions(1)
    assert cells == [(1, 1)] and len(funcs) == 4
    signs = Counter(tuple(-1 if (w.count("g") + w.count("t")) % 2 else 1 for w in f) for f in funcs)
    assert signs == choice_function_signs(1) == Counter({(1,): 2, (-1,): 2})


@pytest.mark.parametrize("k", [1, 2, 3, -2])
def test_transfer_of_k_wz(k):
    qt = transfer_polynomial(BivariatePolynomial(ZZ, {(1, 1): k}))
    assert qt == BivariatePolynomial(ZZ, {(4, 4): k**4})
    w, z = sympy.symbols("w z")
    assert transfer_oracle_sympy({(1, 1): k}, 1) == sympy.Poly(k**4 * w**4 * z**4, w, z)


def test_factorization_matches_choice_function_enumeration():
    for text in ["w - z", "w z - w - z + 1", "w z - 1", "2 w^2 z + 3 w z"]:
        fac = transfer_factorization(P(text))
        shifted = fac.shifted.coeffs
        cells = [(i, j) for i in range(1, fac.n + 1) for j in range(1, fac.n + 1)]
        oracle = Counter()
        for signs, mult in choice_function_signs(fac.n).items():
            oracle[BivariatePolynomial(ZZ, {c: s * shifted.get(c, 0) for s, c in zip(signs, cells)})] += mult
        assert oracle == Counter({t: fac.multiplicity for t in fac.twists})
        assert fac.choice_count == sum(choice_function_signs(fac.n).values())


@pytest.mark.parametrize("text", ["w - z", "z - 1", "w z - 1"])
def test_expanded_transfer_matches_pointwise_oracle(text):
    q = P(text)
    shifted, n = normalize_for_transfer(q)
    qt = transfer_polynomial(q)
    for w0, z0 in [(2, 3), (-1, 2), (3, -2), (1, 1)]:
        val = sum(c * w0**i * z0**j for (i, j), c in qt.coeffs.items())
        assert val == transfer_value_at(shifted.coeffs, n, w0, z0)
    lead, c = transfer_factorization(q).leading_term()
    assert qt.coeffs[lead] == c


def test_transfer_rejects_high_degree():
    with pytest.raises(InfeasibleDegree):
        transfer_polynomial(P("w^3 - 1"))


def test_expanded_transfer_annihilates_diagonal_pair():
    # ab* - ba* squares to -1, so the powers in q~ stay small
    u = monomial(ZZ, "a", "b") - monomial(ZZ, "b", "a")
    assert u_plus(u) == swap
    q = P("w - z")
    assert not evaluate(q, u_plus(u), u_plus(u))
    assert not evaluate(transfer_polynomial(q), u, u)


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 10**9))
def test_commutator_lemma(seed):
    u, v, _ = commuting_pair(random.Random(seed), ZZ, signed=True)
    assert not commutator(u, v)
    assert not commutator(u_plus(u), u_plus(v))


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 10**9))
def test_transfer_annihilates_signed_pairs(seed):
    u, v, _ = commuting_pair(random.Random(seed), ZZ, signed=True)
    q = find_relation(u_plus(u), u_plus(v), 1)
    if q is None:
        return
    assert not evaluate_transfer(q, u, v)


def test_polynomial_text_round_trip():
    for text in ["w - z", "-w^2 + z^3", "3 w^2 z - 1"]:
        assert str(P(text)) == text
    q = P("w^-1 z + 2")
    assert str(q) == "2 + w^-1 z" and P(str(q)) == q
