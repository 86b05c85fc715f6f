"""The tensor square L_{2,R} (x) L_{2,R} and the Laurent polynomial embedding."""

from __future__ import annotations

from typing import Iterable

from . import linalg
from .algebra import AlgebraElement, _accumulate, _mono_mul, _order, is_unitary, one, power
from .errors import NotUnitary
from .polynomials import BivariatePolynomial
from .rings import Ring
from .words import format_word


def _tensor_order(key):
    left, right = key
    return _order(left), _order(right)


class TensorElement:
    """Coordinates in the product of the two canonical bases.

    ``terms`` maps ``((alpha1, beta1), (alpha2, beta2))`` to a nonzero
    coefficient.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict | None = None):
        self.ring = ring
        items = sorted(((k, v) for k, v in (terms or {}).items() if v != 0), key=lambda kv: _tensor_order(kv[0]))
        self.terms = dict(items)

    def __eq__(self, other):
        if isinstance(other, TensorElement):
            return self.ring == other.ring and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "TensorElement") -> "TensorElement":
        if not isinstance(other, TensorElement):
            return NotImplemented
        self.ring.require_same(other.ring)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = self.ring.add(out.get(k, self.ring.zero), v)
        return TensorElement(self.ring, out)

    def __neg__(self):
        return TensorElement(self.ring, {k: self.ring.neg(v) for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return tensor_mul(self, other)
        if isinstance(other, int) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "TensorElement":
        c = self.ring(c)
        return TensorElement(self.ring, {k: self.ring.mul(c, v) for k, v in self.terms.items()})

    def adjoint(self) -> "TensorElement":
        return tensor_adjoint(self)

    def __str__(self):
        from .algebra import format_coefficient_terms, format_monomial

        if not self.terms:
            return "(0) ox (0)"  # plain "0" would re-parse as an algebra element
        return format_coefficient_terms(
            ((c, f"({format_monomial(*l)}) ox ({format_monomial(*r)})") for (l, r), c in self.terms.items()),
            self.ring,
        )

    def __repr__(self):
        return f"TensorElement({self.ring}, {self!s})"

    def to_json(self) -> dict:
        return {
            "ring": str(self.ring),
            "terms": [
                {
                    "c": str(c),
                    "left": {"alpha": format_word(l[0]), "beta": format_word(l[1])},
                    "right": {"alpha": format_word(r[0]), "beta": format_word(r[1])},
                }
                for (l, r), c in self.terms.items()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "TensorElement":
        ring = Ring.parse(data["ring"])
        out = TensorElement(ring)
        for t in data["terms"]:
            left = AlgebraElement.from_json({"ring": data["ring"], "terms": [{"c": "1", **t["left"]}]})
            right = AlgebraElement.from_json({"ring": data["ring"], "terms": [{"c": "1", **t["right"]}]})
            out = out + tensor(left, right).scale(ring(t["c"]))
        return out


def tensor(x: AlgebraElement, y: AlgebraElement) -> TensorElement:
    x.ring.require_same(y.ring)
    ring = x.ring
    return TensorElement(ring, {(kx, ky): ring.mul(cx, cy) for kx, cx in x.terms.items() for ky, cy in y.terms.items()})


def tensor_one(ring: Ring) -> TensorElement:
    return tensor(one(ring), one(ring))


def _mono_product(m1, m2, ring) -> dict:
    acc: dict = {}
    p = _mono_mul(m1[0], m1[1], m2[0], m2[1])
    if p is not None:
        _accumulate(ring, acc, ring.one, p[0], p[1])
    return acc


def tensor_mul(x: TensorElement, y: TensorElement) -> TensorElement:
    x.ring.require_same(y.ring)
    ring = x.ring
    out: dict = {}
    cache: dict = {}
    for (l1, r1), c1 in x.terms.items():
        for (l2, r2), c2 in y.terms.items():
            lk, rk = (l1, l2), (r1, r2)
            if lk not in cache:
                cache[lk] = _mono_product(l1, l2, ring)
            if rk not in cache:
                cache[rk] = _mono_product(r1, r2, ring)
            left, right = cache[lk], cache[rk]
            if not left or not right:
                continue
            c = ring.mul(c1, c2)
            for kl, vl in left.items():
                for kr, vr in right.items():
                    key = (kl, kr)
                    out[key] = ring.add(out.get(key, ring.zero), ring.mul(c, ring.mul(vl, vr)))
    return TensorElement(ring, out)


def tensor_adjoint(x: TensorElement) -> TensorElement:
    return TensorElement(x.ring, {((l[1], l[0]), (r[1], r[0])): c for (l, r), c in x.terms.items()})


def laurent_image(p: BivariatePolynomial, u: AlgebraElement, v: AlgebraElement) -> TensorElement:
    """Evaluate ``p`` at ``w -> u (x) 1`` and ``z -> 1 (x) v``."""
    u.ring.require_same(v.ring)
    ring = u.ring
    p.ring.require_same(ring)
    if p.is_laurent():
        if any(i < 0 for i, _ in p.coeffs) and not is_unitary(u):
            raise NotUnitary("negative powers of w need a unitary u")
        if any(j < 0 for _, j in p.coeffs) and not is_unitary(v):
            raise NotUnitary("negative powers of z need a unitary v")
    upow, vpow = {}, {}
    out = TensorElement(ring)
    for (i, j), c in p.coeffs.items():
        if i not in upow:
            upow[i] = power(u, i)
        if j not in vpow:
            vpow[j] = power(v, j)
        out = out + tensor(upow[i], vpow[j]).scale(c)
    return out


def independent_up_to(u: AlgebraElement, v: AlgebraElement, d: int) -> bool:
    """True iff the elements ``u^i (x) v^j`` with ``|i|, |j| <= d`` are linearly independent."""
    return independence_report(u, v, d)[0]


def independence_report(u: AlgebraElement, v: AlgebraElement, d: int) -> tuple[bool, int, int, int]:
    """``(independent, rows, columns, rank)`` of the tensor coordinate matrix."""
    if d < 1:
        raise ValueError("degree bound must be positive")
    u.ring.require_same(v.ring)
    u.ring.require_kernel_support()
    if not (is_unitary(u) and is_unitary(v)):
        raise NotUnitary("independent_up_to needs unitaries (negative powers use adjoints)")
    upow = {i: power(u, i) for i in range(-d, d + 1)}
    vpow = {j: power(v, j) for j in range(-d, d + 1)}
    cols = [tensor(upow[i], vpow[j]).terms for i in range(-d, d + 1) for j in range(-d, d + 1)]
    rank, basis = linalg.kernel(cols, u.ring, order=_tensor_order)
    rows = len({k for c in cols for k in c})
    return not basis, rows, len(cols), rank


def leg_left(x: AlgebraElement) -> TensorElement:
    return tensor(x, one(x.ring))


def leg_right(y: AlgebraElement) -> TensorElement:
    return tensor(one(y.ring), y)


def sum_tensors(ring: Ring, items: Iterable[TensorElement]) -> TensorElement:
    out = TensorElement(ring)
    for t in items:
        out = out + t
    return out

