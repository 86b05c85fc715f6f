"""Polynomial relations between commuting unitaries.

``find_relation`` searches for a nonzero ``q(w, z)`` with ``q(u, v) = 0`` by
computing an exact kernel of the coordinate matrix of the products
``u^i v^j``.  ``transfer_polynomial`` turns a relation for the sign-stripped
pair ``(u_plus(u), u_plus(v))`` into one for ``(u, v)`` by multiplying all
sign-twisted copies of ``q`` together.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod

from . import linalg
from .algebra import AlgebraElement, _order, is_unitary, mul, one, power, zero
from .errors import InfeasibleDegree, NotCommuting, NotUnitary
from .polynomials import BivariatePolynomial
from .rings import Ring

# max |a| * |b| term pairs for a single polynomial product inside the transfer
TRANSFER_WORK_LIMIT = 20_000_000


def commutator(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return mul(x, y) - mul(y, x)


def evaluate(q: BivariatePolynomial, u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    """``q(u, v)`` with ``w -> u`` and ``z -> v``; negative exponents use adjoints.

    Monomials are ordered ``u^i v^j``, which is the evaluation map only when
    ``u`` and ``v`` commute.
    """
    u.ring.require_same(v.ring)
    q.ring.require_same(u.ring)
    upow, vpow = {}, {}
    acc = zero(u.ring)
    for (i, j), c in q.coeffs.items():
        if i not in upow:
            upow[i] = power(u, i)
        if j not in vpow:
            vpow[j] = power(v, j)
        acc = acc + mul(upow[i], vpow[j]).scale(c)
    return acc


@dataclass(frozen=True)
class RelationReport:
    polynomial: BivariatePolynomial | None
    degree: int
    rows: int
    columns: int
    rank: int
    verified: bool

    @property
    def kernel_dimension(self) -> int:
        return self.columns - self.rank


def _exponents(d: int) -> list[tuple[int, int]]:
    return sorted(((i, j) for i in range(d + 1) for j in range(d + 1)), key=lambda e: (e[0] + e[1], e[0]))


def relation_search(u: AlgebraElement, v: AlgebraElement, d: int) -> RelationReport:
    if d < 1:
        raise ValueError("degree bound must be positive")
    u.ring.require_same(v.ring)
    ring = u.ring
    ring.require_kernel_support()
    if commutator(u, v):
        raise NotCommuting("u and v do not commute")
    if not (is_unitary(u) and is_unitary(v)):
        raise NotUnitary("find_relation expects unitaries")
    upow = [one(ring)]
    vpow = [one(ring)]
    for _ in range(d):
        upow.append(mul(upow[-1], u))
        vpow.append(mul(vpow[-1], v))
    exps = _exponents(d)
    cols = [mul(upow[i], vpow[j]).terms for i, j in exps]
    rank, basis = linalg.kernel(cols, ring, order=_order)
    rows = len({k for c in cols for k in c})
    if not basis:
        return RelationReport(None, d, rows, len(cols), rank, False)
    q = BivariatePolynomial(ring, {e: c for e, c in zip(exps, basis[0]) if c != 0})
    verified = not evaluate(q, u, v)
    if not verified:  # kernel vectors annihilate by construction
        raise AssertionError(f"kernel vector {q} does not annihilate (u, v)")
    return RelationReport(q, d, rows, len(cols), rank, verified)


def find_relation(u: AlgebraElement, v: AlgebraElement, d: int) -> BivariatePolynomial | None:
    """A nonzero ``q`` with exponents in ``[0, d]`` and ``q(u, v) = 0``, or None."""
    return relation_search(u, v, d).polynomial


# -- choice-function transfer -------------------------------------------------


@dataclass(frozen=True)
class TransferFactorization:
    """``q_tilde = base ** multiplicity``.

    ``base`` is the product of the distinct sign-twisted polynomials; each
    appears ``multiplicity`` times among the choice functions.
    """

    shifted: BivariatePolynomial
    n: int
    choice_count: int
    twists: tuple
    multiplicity: int

    @property
    def base(self) -> BivariatePolynomial:
        return _guarded_product(self.twists, self.shifted.ring)

    def leading_term(self) -> tuple[tuple[int, int], object]:
        """The term the nonvanishing argument singles out."""
        k = self.shifted.coeffs
        i0 = max(i for i, _ in k)
        j0 = max(j for i, j in k if i == i0)
        # every word of Omega^{i0,j0} is picked by |C| / 2^(i0+j0) choice functions and
        # the words carry (i0+j0) 2^(i0+j0-1) letters from {g, t} in total
        flips = self.choice_count * (i0 + j0) // 2
        sign = -1 if flips % 2 else 1
        c = k[(i0, j0)] ** self.choice_count
        return (i0 * self.choice_count, j0 * self.choice_count), sign * c


def normalize_for_transfer(q: BivariatePolynomial) -> tuple[BivariatePolynomial, int]:
    """Multiply by a power of ``wz`` so every exponent is at least 1."""
    if not q:
        raise ValueError("the zero polynomial has no transfer")
    if q.is_laurent():
        raise ValueError("transfer needs nonnegative exponents")
    mi, mj = q.min_exponents()
    s = max(0, 1 - min(mi, mj))
    shifted = q.shift(s, s)
    return shifted, max(max(shifted.max_exponents()), 1)


def transfer_factorization(q: BivariatePolynomial, max_n: int = 2) -> TransferFactorization:
    shifted, n = normalize_for_transfer(q)
    if n > max_n:
        raise InfeasibleDegree(f"transfer needs n <= {max_n}, got n = {n}")
    # |C| = prod over 1 <= i, j <= n of |Omega^{i,j}| = 2^(i+j)
    choice_count = prod(2 ** (i + j) for i in range(1, n + 1) for j in range(1, n + 1))
    terms = sorted(shifted.coeffs.items())
    ring = shifted.ring
    twists = []
    for signs in itertools.product((1, -1), repeat=len(terms)):
        twists.append(
            BivariatePolynomial(ring, {e: (c if s == 1 else ring.neg(c)) for (e, c), s in zip(terms, signs)})
        )
    # within each Omega^{i,j} exactly half the words have an odd number of g/t letters
    multiplicity = choice_count // 2 ** len(terms)
    return TransferFactorization(shifted, n, choice_count, tuple(twists), multiplicity)


def _guarded_product(factors, ring: Ring) -> BivariatePolynomial:
    acc = BivariatePolynomial(ring, {(0, 0): 1})
    for f in factors:
        _check_work(acc, f)
        acc = acc * f
    return acc


def _check_work(a: BivariatePolynomial, b: BivariatePolynomial):
    if len(a) * len(b) > TRANSFER_WORK_LIMIT:
        raise InfeasibleDegree(
            f"expanding the transferred polynomial needs {len(a)} x {len(b)} term products; "
            "use transfer_factorization() and evaluate_transfer() instead"
        )


def _guarded_power(p: BivariatePolynomial, n: int) -> BivariatePolynomial:
    result = BivariatePolynomial(p.ring, {(0, 0): 1})
    base = p
    while n:
        if n & 1:
            _check_work(result, base)
            result = result * base
        n >>= 1
        if n:
            _check_work(base, base)
            base = base * base
    return result


def transfer_polynomial(q: BivariatePolynomial) -> BivariatePolynomial:
    """The product over all choice functions of the sign-twisted copies of ``q``.

    ``q`` is first multiplied by a power of ``wz`` so that its exponents lie in
    ``[1, n]``; only ``n <= 2`` is accepted.  Raises
    :class:`InfeasibleDegree` when the expanded result would be too large to
    build term by term.
    """
    fac = transfer_factorization(q)
    return _guarded_power(fac.base, fac.multiplicity)


def evaluate_transfer(q: BivariatePolynomial, u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    """``base(u, v) ** multiplicity``, computed without expanding ``q_tilde``.

    When ``base(u, v)`` vanishes the result is zero without raising it to the
    (large) multiplicity.
    """
    fac = transfer_factorization(q)
    acc = one(u.ring)
    for t in fac.twists:
        acc = mul(acc, evaluate(t, u, v))
        if not acc:
            return acc
    return acc ** fac.multiplicity
