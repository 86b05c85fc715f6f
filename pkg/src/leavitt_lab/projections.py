"""Projections over ZZ: standard forms, equivalence to the unit, corner twisting."""

from __future__ import annotations

from typing import Sequence

from .algebra import AlgebraElement, adjoint, canonicalize, mul, one, uniform_beta_expand
from .errors import CornerConditionViolated, NotProjection, NotStandardizable, ZeroProjection
from .words import PrefixCode, merge_siblings


def is_projection(x: AlgebraElement) -> bool:
    return x == adjoint(x) and mul(x, x) == x


def projection_standard_form(p: AlgebraElement) -> PrefixCode:
    """The antichain ``B`` with ``p = sum_{beta in B} beta beta*``.

    Every canonical term must be balanced (``|alpha| = |beta|``); the level-m
    expansion must then be diagonal with 0/1 entries.  Anything else raises
    :class:`NotStandardizable`.
    """
    if not is_projection(p):
        raise NotProjection(f"{p} is not a projection")
    for _, alpha, beta in p:
        if len(alpha) != len(beta):
            raise NotStandardizable(f"term {alpha or 'e'}({beta or 'e'})* is not balanced")
    m = p.max_beta_length()
    support = []
    for c, alpha, beta in uniform_beta_expand(p, m):
        if alpha != beta:
            raise NotStandardizable(f"off-diagonal entry at level {m}: ({alpha}, {beta})")
        if c != p.ring.one:
            raise NotStandardizable(f"diagonal entry {c} at {beta} is not 0 or 1")
        support.append(beta)
    return merge_siblings(support)


def reassemble_projection(ring, code) -> AlgebraElement:
    return canonicalize(ring, [(1, w, w) for w in code])


def unit_code(n: int) -> PrefixCode:
    """The complete code {a, ba, bba, ..., b^(n-2) a, b^(n-1)}; {e} for n = 1."""
    if n < 1:
        raise ValueError("code size must be positive")
    if n == 1:
        return PrefixCode([""])
    return PrefixCode(["b" * i + "a" for i in range(n - 1)] + ["b" * (n - 1)])


def unit_equivalence(p: AlgebraElement) -> AlgebraElement:
    """An isometry ``t`` with ``t* t = 1`` and ``t t* = p``."""
    if not p:
        raise ZeroProjection("the zero projection is not equivalent to the unit")
    betas = projection_standard_form(p)
    alphas = unit_code(len(betas))
    return canonicalize(p.ring, [(1, beta, alpha) for beta, alpha in zip(betas, alphas)])


def twist_to_unital(images: Sequence[AlgebraElement], p: AlgebraElement) -> list[AlgebraElement]:
    """Conjugate corner elements ``x = p x p`` by the isometry onto ``p``.

    The map ``x -> t* x t`` sends ``p`` to 1 and is multiplicative and
    adjoint-preserving on the corner.
    """
    for x in images:
        if mul(mul(p, x), p) != x:
            raise CornerConditionViolated(f"{x} does not lie in the corner of {p}")
    t = unit_equivalence(p)
    ts = adjoint(t)
    return [mul(mul(ts, x), t) for x in images]


def is_isometry_onto(t: AlgebraElement, p: AlgebraElement) -> bool:
    ts = adjoint(t)
    return mul(ts, t) == one(t.ring) and mul(t, ts) == p
