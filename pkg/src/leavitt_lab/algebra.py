"""Elements of the Leavitt algebra L_{2,R} in canonical basis coordinates.

An element is a finite linear combination of monomials ``alpha beta*`` with
``alpha``, ``beta`` words over {a, b}.  The canonical basis consists of the
monomials whose two words do not both end in ``b``; every other monomial is
rewritten with ``b b* = 1 - a a*``.  Coordinates in this basis are unique, so
equality of elements is equality of coefficient maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import linalg
from .errors import NotReducible, NotUnitary, UnsupportedRing
from .rings import QQ, ZZ, Ring
from .words import format_word, is_complete_code, parse_word, words_of_length

Monomial = tuple  # (alpha, beta)
RawTerm = tuple  # (coefficient, alpha, beta)


def is_admissible(alpha: str, beta: str) -> bool:
    return not (alpha.endswith("b") and beta.endswith("b"))


def _order(key):
    alpha, beta = key
    return (beta, alpha)


def _accumulate(ring: Ring, acc: dict, c, alpha: str, beta: str):
    # alpha b^k (beta b^k)* = alpha beta* - sum_{i<k} alpha b^i a (beta b^i a)*
    k = 0
    while k < len(alpha) and k < len(beta) and alpha[-1 - k] == "b" and beta[-1 - k] == "b":
        k += 1
    if k == 0:
        acc[(alpha, beta)] = ring.add(acc.get((alpha, beta), ring.zero), c)
        return
    a0, b0 = alpha[: len(alpha) - k], beta[: len(beta) - k]
    acc[(a0, b0)] = ring.add(acc.get((a0, b0), ring.zero), c)
    nc = ring.neg(c)
    for i in range(k):
        key = (a0 + "b" * i + "a", b0 + "b" * i + "a")
        acc[key] = ring.add(acc.get(key, ring.zero), nc)


def _mono_mul(a1: str, b1: str, a2: str, b2: str):
    """(a1 b1*)(a2 b2*) as a single monomial, or None when it vanishes."""
    if a2.startswith(b1):
        return a1 + a2[len(b1):], b2
    if b1.startswith(a2):
        return a1, b2 + b1[len(a2):]
    return None


class AlgebraElement:
    """Immutable element of L_{2,R}.

    ``terms`` maps ``(alpha, beta)`` to a nonzero coefficient and is ordered
    by ``(beta, alpha)``.  Construct elements with :func:`canonicalize`,
    :func:`monomial` or the arithmetic operators.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    @classmethod
    def _from_acc(cls, ring: Ring, acc: dict) -> "AlgebraElement":
        items = sorted(((k, v) for k, v in acc.items() if v != 0), key=lambda kv: _order(kv[0]))
        return cls(ring, dict(items))

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            self.ring.require_same(other.ring)
            return other
        if isinstance(other, (int,)) or hasattr(other, "denominator"):
            return scalar(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = self.ring.add(acc.get(k, self.ring.zero), v)
        return AlgebraElement._from_acc(self.ring, acc)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.ring, {k: self.ring.neg(v) for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return mul(self, other)
        if isinstance(other, int) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers need adjoint(); use power() on unitaries")
        result, base = one(self.ring), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "AlgebraElement":
        c = self.ring(c)
        acc = {k: self.ring.mul(c, v) for k, v in self.terms.items()}
        return AlgebraElement._from_acc(self.ring, acc)

    def adjoint(self) -> "AlgebraElement":
        return adjoint(self)

    @property
    def star(self) -> "AlgebraElement":
        return adjoint(self)

    # -- comparisons ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, int) or hasattr(other, "denominator"):
            return self == scalar(self.ring, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[RawTerm]:
        for (alpha, beta), c in self.terms.items():
            yield c, alpha, beta

    # -- inspection -------------------------------------------------------

    def max_beta_length(self) -> int:
        return max((len(b) for _, b in self.terms), default=0)

    def max_word_length(self) -> int:
        return max((max(len(a), len(b)) for a, b in self.terms), default=0)

    def coordinates(self) -> dict:
        return dict(self.terms)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"AlgebraElement({self.ring}, {format_element(self)!r})"

    def to_json(self) -> dict:
        return {
            "ring": str(self.ring),
            "terms": [
                {"c": str(c), "alpha": format_word(a), "beta": format_word(b)}
                for (a, b), c in self.terms.items()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "AlgebraElement":
        ring = Ring.parse(data["ring"])
        raw = [(ring(t["c"]), parse_word(t["alpha"]), parse_word(t["beta"])) for t in data["terms"]]
        return canonicalize(ring, raw)


# -- construction -----------------------------------------------------------


def canonicalize(ring: Ring, raw: Iterable[RawTerm]) -> AlgebraElement:
    """Collect an arbitrary list of ``(c, alpha, beta)`` into canonical form."""
    acc: dict = {}
    for c, alpha, beta in raw:
        c = ring(c)
        if c != 0:
            _accumulate(ring, acc, c, alpha, beta)
    return AlgebraElement._from_acc(ring, acc)


def monomial(ring: Ring, alpha: str = "", beta: str = "", c=1) -> AlgebraElement:
    return canonicalize(ring, [(c, alpha, beta)])


def scalar(ring: Ring, c) -> AlgebraElement:
    return canonicalize(ring, [(c, "", "")])


def zero(ring: Ring) -> AlgebraElement:
    return AlgebraElement(ring, {})


def one(ring: Ring) -> AlgebraElement:
    return AlgebraElement(ring, {("", ""): ring.one})


def generators(ring: Ring) -> tuple[AlgebraElement, AlgebraElement]:
    """The generators ``a`` and ``b``; their adjoints are ``a*`` and ``b*``."""
    return monomial(ring, "a", ""), monomial(ring, "b", "")


# -- core operations --------------------------------------------------------


def mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    x.ring.require_same(y.ring)
    ring = x.ring
    acc: dict = {}
    for (a1, b1), c1 in x.terms.items():
        for (a2, b2), c2 in y.terms.items():
            m = _mono_mul(a1, b1, a2, b2)
            if m is not None:
                _accumulate(ring, acc, ring.mul(c1, c2), m[0], m[1])
    return AlgebraElement._from_acc(ring, acc)


def adjoint(x: AlgebraElement) -> AlgebraElement:
    # swapping alpha and beta preserves admissibility, so no rewriting is needed
    acc = {(b, a): c for (a, b), c in x.terms.items()}
    return AlgebraElement._from_acc(x.ring, acc)


def power(u: AlgebraElement, n: int) -> AlgebraElement:
    """``u**n``; negative exponents use the adjoint (meaningful for unitaries)."""
    return u ** n if n >= 0 else adjoint(u) ** (-n)


def is_unitary(x: AlgebraElement) -> bool:
    xs = adjoint(x)
    e = one(x.ring)
    return mul(xs, x) == e and mul(x, xs) == e


def uniform_beta_expand(x: AlgebraElement, m: int) -> list[RawTerm]:
    """Rewrite ``x`` so that every beta has length exactly ``m``.

    Uses ``1 = sum_{|g| = k} g g*``; the returned raw terms are collected by
    the pair ``(alpha, beta)`` and sorted by ``(beta, alpha)``.
    """
    longest = x.max_beta_length()
    if m < longest:
        raise ValueError(f"level {m} is below the longest beta length {longest}")
    ring = x.ring
    acc: dict = {}
    for (alpha, beta), c in x.terms.items():
        for g in words_of_length(m - len(beta)):
            key = (alpha + g, beta + g)
            acc[key] = ring.add(acc.get(key, ring.zero), c)
    return [(c, a, b) for (a, b), c in sorted(acc.items(), key=lambda kv: _order(kv[0])) if c != 0]


def is_coefficient_free_at_level(x: AlgebraElement, m: int) -> bool:
    return all(c == x.ring.one for c, _, _ in uniform_beta_expand(x, m))


# -- reduced forms ------------------------------------------------------------


@dataclass(frozen=True)
class UnitaryReducedForm:
    """``sum sign_i alpha_i beta_i*`` with both word lists complete prefix codes.

    ``triples`` holds ``(sign, alpha, beta)`` sorted by ``beta``.  Over ZZ every
    sign is +1 or -1.
    """

    ring: Ring
    triples: tuple

    @property
    def alphas(self) -> list[str]:
        return [a for _, a, _ in self.triples]

    @property
    def betas(self) -> list[str]:
        return [b for _, _, b in self.triples]

    @property
    def signs(self) -> list:
        return [s for s, _, _ in self.triples]

    def reassemble(self) -> AlgebraElement:
        return canonicalize(self.ring, self.triples)

    def __len__(self):
        return len(self.triples)

    def __str__(self):
        return "[" + ", ".join(
            f"({'+1' if s == 1 else '-1' if s == -1 else s}, {format_word(a)}, {format_word(b)})"
            for s, a, b in self.triples
        ) + "]"


def _merge_triples(triples: Sequence[RawTerm]) -> list[RawTerm]:
    by_beta = {b: (s, a) for s, a, b in triples}
    if not by_beta:
        return []
    for n in range(max(len(b) for b in by_beta), 0, -1):
        for beta in sorted(b for b in by_beta if len(b) == n and b[-1] == "a"):
            sib = beta[:-1] + "b"
            if sib not in by_beta or beta not in by_beta:
                continue
            (s1, a1), (s2, a2) = by_beta[beta], by_beta[sib]
            if s1 == s2 and a1.endswith("a") and a2 == a1[:-1] + "b":
                del by_beta[beta], by_beta[sib]
                by_beta[beta[:-1]] = (s1, a1[:-1])
    return [(s, a, b) for b, (s, a) in sorted(by_beta.items())]


def reduced_form(u: AlgebraElement, merge: bool = True) -> UnitaryReducedForm:
    ring = u.ring
    if ring not in (ZZ, QQ):
        raise UnsupportedRing(f"reduced forms are only computed over z and q, not {ring}")
    if not is_unitary(u):
        raise NotUnitary(f"{u} is not unitary")
    expanded = uniform_beta_expand(u, u.max_beta_length())
    betas = [b for _, _, b in expanded]
    if len(set(betas)) != len(betas):
        raise NotReducible("duplicate beta after uniform expansion")
    for c, _, _ in expanded:
        if not ring.is_unit(c):
            raise NotReducible(f"non-unit coefficient {c}")
    alphas = [a for _, a, _ in expanded]
    if not is_complete_code(alphas):
        raise NotReducible("alphas do not form a complete prefix code")
    if not is_complete_code(betas):
        raise NotReducible("betas do not form a complete prefix code")
    triples = [(int(c) if c in (1, -1) else c, a, b) for c, a, b in expanded]
    if merge:
        triples = _merge_triples(triples)
    return UnitaryReducedForm(ring, tuple(triples))


def u_plus(u: AlgebraElement) -> AlgebraElement:
    rf = reduced_form(u)
    return canonicalize(u.ring, [(1, a, b) for _, a, b in rf.triples])


def sign_split(u: AlgebraElement) -> tuple[AlgebraElement, AlgebraElement]:
    """Return ``(u_pp, u_pm)`` with ``u = u_pp - u_pm`` and ``u_plus(u) = u_pp + u_pm``."""
    rf = reduced_form(u)
    pos = canonicalize(u.ring, [(1, a, b) for s, a, b in rf.triples if s == 1])
    neg = canonicalize(u.ring, [(1, a, b) for s, a, b in rf.triples if s != 1])
    return pos, neg


def diagonal_unitary(ring: Ring, code: Iterable[str], signs: Iterable[int]) -> AlgebraElement:
    """``sum s_i g_i g_i*`` over a complete prefix code."""
    return canonicalize(ring, [(s, g, g) for g, s in zip(code, signs)])


def embed_matrix(ring: Ring, code: Sequence[str], matrix: Sequence[Sequence]) -> AlgebraElement:
    """``sum M[i][j] c_i c_j*``: the unital copy of M_n(R) spanned by a complete code."""
    if len(matrix) != len(code) or any(len(row) != len(code) for row in matrix):
        raise ValueError("matrix size must match the code size")
    return canonicalize(ring, [(m, ci, cj) for ci, row in zip(code, matrix) for cj, m in zip(code, row)])


# -- spectrum ------------------------------------------------------------------


@dataclass(frozen=True)
class SpectrumReport:
    ring: Ring
    full: bool
    degree: int
    rank: int
    witness: tuple | None = None  # coefficients of q, index = degree

    def witness_polynomial(self):
        from .polynomials import univariate

        return None if self.witness is None else univariate(self.witness, self.ring)

    def witness_text(self, var: str = "x") -> str:
        q = self.witness_polynomial()
        return "" if q is None else q.format(variables=(var, "y"))

    def __bool__(self):
        return self.full


def full_spectrum_up_to(u: AlgebraElement, d: int) -> SpectrumReport:
    """Check that 1, u, ..., u^d are linearly independent.

    On failure the report carries a nonzero polynomial ``q`` of smallest
    possible degree with ``q(u) = 0``.
    """
    if d < 1:
        raise ValueError("degree bound must be positive")
    u.ring.require_kernel_support()
    powers = [one(u.ring)]
    for _ in range(d):
        powers.append(powers[-1] * u)
    rank, basis = linalg.kernel([p.terms for p in powers], u.ring, order=_order)
    if not basis:
        return SpectrumReport(u.ring, True, d, rank)
    q = basis[0]
    while len(q) > 1 and q[-1] == 0:
        q = q[:-1]
    return SpectrumReport(u.ring, False, d, rank, tuple(q))


def evaluate_univariate(coeffs: Sequence, u: AlgebraElement) -> AlgebraElement:
    acc = zero(u.ring)
    p = one(u.ring)
    for i, c in enumerate(coeffs):
        if i:
            p = p * u
        if c != 0:
            acc = acc + p.scale(c)
    return acc


# -- text ------------------------------------------------------------------------


def format_monomial(alpha: str, beta: str) -> str:
    if not alpha and not beta:
        return "1"
    if not beta:
        return alpha
    if len(beta) == 1:
        return f"{alpha}{beta}'"
    return f"{alpha}({beta})'"


def format_coefficient_terms(pairs: Iterable[tuple], ring: Ring) -> str:
    """Join ``(coefficient, body)`` pairs; a body of ``"1"`` is the unit."""
    out = []
    for c, body in pairs:
        neg = ring.kind != "zmod" and c < 0
        mag = -c if neg else c
        if body == "1":
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag} {body}"
        if not out:
            out.append(f"-{text}" if neg else text)
        else:
            out.append(f" - {text}" if neg else f" + {text}")
    return "".join(out) if out else "0"


def format_element(x: AlgebraElement) -> str:
    return format_coefficient_terms(((c, format_monomial(a, b)) for (a, b), c in x.terms.items()), x.ring)
