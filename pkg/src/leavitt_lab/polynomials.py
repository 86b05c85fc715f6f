"""Sparse bivariate Laurent polynomials over an exact ring."""

from __future__ import annotations

import re
from typing import Iterable, Iterator

from .rings import ZZ, Ring


class BivariatePolynomial:
    """Map from exponent pairs ``(i, j)`` to nonzero coefficients.

    Exponents may be negative.  Arithmetic is exact; the zero polynomial is
    the empty map.
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs: dict | None = None):
        self.ring = ring
        self.coeffs = {}
        for e, c in (coeffs or {}).items():
            c = ring(c)
            if c != 0:
                self.coeffs[(int(e[0]), int(e[1]))] = c

    @classmethod
    def monomial(cls, ring: Ring, i: int, j: int, c=1) -> "BivariatePolynomial":
        return cls(ring, {(i, j): c})

    @classmethod
    def w(cls, ring: Ring = ZZ) -> "BivariatePolynomial":
        return cls.monomial(ring, 1, 0)

    @classmethod
    def z(cls, ring: Ring = ZZ) -> "BivariatePolynomial":
        return cls.monomial(ring, 0, 1)

    def __iter__(self) -> Iterator[tuple[tuple[int, int], object]]:
        return iter(sorted(self.coeffs.items(), reverse=True))

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, BivariatePolynomial):
            return self.ring == other.ring and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.coeffs.items())))

    def _lift(self, other):
        if isinstance(other, BivariatePolynomial):
            self.ring.require_same(other.ring)
            return other
        return BivariatePolynomial(self.ring, {(0, 0): other})

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = self.ring.add(out.get(e, self.ring.zero), c)
        return BivariatePolynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial(self.ring, {e: self.ring.neg(c) for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        ring = self.ring
        out: dict = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                e = (i1 + i2, j1 + j2)
                out[e] = ring.add(out.get(e, ring.zero), ring.mul(c1, c2))
        return BivariatePolynomial(ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.coeffs) == 1:
                ((i, j), c), = self.coeffs.items()
                if c in (1, -1):
                    return BivariatePolynomial(self.ring, {(i * n, j * n): c ** (-n)})
            raise ValueError("only unit monomials have negative powers")
        result = BivariatePolynomial(self.ring, {(0, 0): 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, di: int, dj: int) -> "BivariatePolynomial":
        return BivariatePolynomial(self.ring, {(i + di, j + dj): c for (i, j), c in self.coeffs.items()})

    def min_exponents(self) -> tuple[int, int]:
        return min(i for i, _ in self.coeffs), min(j for _, j in self.coeffs)

    def max_exponents(self) -> tuple[int, int]:
        return max(i for i, _ in self.coeffs), max(j for _, j in self.coeffs)

    def total_degree(self) -> int:
        return max(i + j for i, j in self.coeffs)

    def is_laurent(self) -> bool:
        return any(i < 0 or j < 0 for i, j in self.coeffs)

    def format(self, variables: tuple[str, str] = ("w", "z")) -> str:
        return format_polynomial(self.coeffs, self.ring, variables)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"BivariatePolynomial({self.ring}, {self.format()!r})"

    @classmethod
    def parse(cls, text: str, ring: Ring = ZZ, variables: tuple[str, str] = ("w", "z")) -> "BivariatePolynomial":
        return parse_polynomial(text, ring, variables)


def _body(i: int, j: int, variables) -> str:
    parts = []
    for v, e in zip(variables, (i, j)):
        if e == 1:
            parts.append(v)
        elif e != 0:
            parts.append(f"{v}^{e}")
    return " ".join(parts) if parts else "1"


def format_polynomial(coeffs: dict, ring: Ring, variables=("w", "z")) -> str:
    from .algebra import format_coefficient_terms

    items = sorted(coeffs.items(), reverse=True)
    return format_coefficient_terms(((c, _body(i, j, variables)) for (i, j), c in items), ring)


_TERM = re.compile(r"\s*([+-])?\s*([0-9]+(?:/[0-9]+)?)?\s*((?:[a-z]\s*(?:\^\s*-?[0-9]+)?\s*)*)")


def parse_polynomial(text: str, ring: Ring = ZZ, variables=("w", "z")) -> BivariatePolynomial:
    """Parse ``"k w^i z^j"`` terms joined by ``+``/``-``."""
    src = text.strip()
    if not src:
        raise ValueError("empty polynomial")
    pos = 0
    out = BivariatePolynomial(ring)
    first = True
    factor_re = re.compile(r"([a-z])\s*(?:\^\s*(-?[0-9]+))?\s*")
    while pos < len(src):
        m = _TERM.match(src, pos)
        sign, num, body = m.group(1), m.group(2), m.group(3)
        if m.end() == pos or (not num and not body.strip()):
            raise ValueError(f"cannot parse polynomial at column {pos + 1}: {src!r}")
        if not first and sign is None:
            raise ValueError(f"expected + or - at column {pos + 1}: {src!r}")
        first = False
        c = ring(num) if num else ring.one
        if sign == "-":
            c = ring.neg(c)
        i = j = 0
        for fm in factor_re.finditer(body.strip()):
            var, exp = fm.group(1), int(fm.group(2)) if fm.group(2) else 1
            if var == variables[0]:
                i += exp
            elif var == variables[1]:
                j += exp
            else:
                raise ValueError(f"unknown variable {var!r} in polynomial")
        out = out + BivariatePolynomial(ring, {(i, j): c})
        pos = m.end()
    return out


def univariate(coeffs: Iterable, ring: Ring = ZZ) -> BivariatePolynomial:
    """Coefficient list (index = degree) as a polynomial in the first variable."""
    return BivariatePolynomial(ring, {(i, 0): c for i, c in enumerate(coeffs)})
