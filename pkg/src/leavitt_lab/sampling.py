"""Seeded random generators for codes, tables, unitaries, paths and commuting pairs."""

from __future__ import annotations

import random
from typing import Iterator

from .algebra import AlgebraElement, canonicalize, diagonal_unitary, monomial, mul, one, adjoint, power
from .rep import EventuallyPeriodicPath, _primitive_root
from .rings import Ring, ZZ
from .thompson import Table, to_unitary
from .words import PrefixCode


def random_word(rng: random.Random, max_len: int, min_len: int = 0) -> str:
    return "".join(rng.choice("ab") for _ in range(rng.randint(min_len, max_len)))


def random_complete_code(rng: random.Random, size: int | None = None, max_size: int = 6, max_depth: int = 4) -> PrefixCode:
    """Split random leaves of the one-word code until it has ``size`` words."""
    if size is None:
        size = rng.randint(1, max_size)
    leaves = [""]
    while len(leaves) < size:
        splittable = [w for w in leaves if len(w) < max_depth]
        if not splittable:
            break
        w = rng.choice(splittable)
        leaves.remove(w)
        leaves += [w + "a", w + "b"]
    return PrefixCode(leaves)


def random_table(rng: random.Random, max_size: int = 6, max_depth: int = 4, min_size: int = 1) -> Table:
    n = rng.randint(min_size, max_size)
    dom = list(random_complete_code(rng, n, max_depth=max_depth))
    ran = list(random_complete_code(rng, len(dom), max_depth=max_depth))
    n = min(len(dom), len(ran))
    if len(dom) != len(ran):  # depth cap hit; retry with the shorter size
        dom = list(random_complete_code(rng, n, max_depth=max_depth))
        ran = list(random_complete_code(rng, n, max_depth=max_depth))
    rng.shuffle(ran)
    return Table(zip(ran, dom))


def random_signs(rng: random.Random, n: int) -> list[int]:
    return [rng.choice((1, -1)) for _ in range(n)]


def random_diagonal(rng: random.Random, ring: Ring = ZZ, max_size: int = 4, max_depth: int = 3) -> AlgebraElement:
    code = random_complete_code(rng, max_size=max_size, max_depth=max_depth)
    return diagonal_unitary(ring, code, random_signs(rng, len(code)))


def random_signed_unitary(rng: random.Random, ring: Ring = ZZ, max_size: int = 4, max_depth: int = 3) -> AlgebraElement:
    """``t1 d t2`` for random tables ``t1``, ``t2`` and a random ±1 diagonal ``d``."""
    t1 = to_unitary(random_table(rng, max_size, max_depth), ring)
    t2 = to_unitary(random_table(rng, max_size, max_depth), ring)
    return mul(mul(t1, random_diagonal(rng, ring, max_size, max_depth)), t2)


def random_element(rng: random.Random, ring: Ring, max_terms: int = 3, max_len: int = 3, max_coeff: int = 3) -> AlgebraElement:
    raw = []
    for _ in range(rng.randint(1, max_terms)):
        c = rng.choice([k for k in range(-max_coeff, max_coeff + 1) if k])
        raw.append((c, random_word(rng, max_len), random_word(rng, max_len)))
    return canonicalize(ring, raw)


def random_antichain(rng: random.Random, max_size: int = 6, max_depth: int = 4) -> PrefixCode:
    """A nonempty subset of a random complete code."""
    code = list(random_complete_code(rng, max_size=max_size, max_depth=max_depth))
    k = rng.randint(1, len(code))
    return PrefixCode(rng.sample(code, k))


def random_cycle(rng: random.Random, length: int) -> str:
    while True:
        c = random_word(rng, length, length)
        if _primitive_root(c) == c:
            return c


def random_path(rng: random.Random, min_cycle: int = 7, max_cycle: int = 10, max_prefix: int = 3) -> EventuallyPeriodicPath:
    return EventuallyPeriodicPath(random_word(rng, max_prefix), random_cycle(rng, rng.randint(min_cycle, max_cycle)))


# -- commuting pairs ----------------------------------------------------------------


def block_sum(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """``a x a* + b y b*``."""
    ring = x.ring
    a, b = monomial(ring, "a"), monomial(ring, "b")
    return mul(mul(a, x), adjoint(a)) + mul(mul(b, y), adjoint(b))


def commuting_pair(rng: random.Random, ring: Ring = ZZ, signed: bool = True, kind: str | None = None):
    """A random pair of commuting unitaries and the recipe that built it.

    Kinds: ``powers`` (u^i, u^j), ``blocks`` (a g a* + s bb*, t aa* + b h b*),
    ``conjugate`` (c x c*, c y c* for a blocks pair), ``twist`` (+-u^i, +-u^j).
    With ``signed=False`` only tables are used, so both lie in U_V.
    """
    kind = kind or rng.choice(["powers", "blocks", "conjugate", "twist"])

    def unit():
        while True:
            if signed:
                x = random_signed_unitary(rng, ring, 4, 3)
            else:
                x = to_unitary(random_table(rng, 5, 3, min_size=2), ring)
            if x != 1:
                return x

    if kind == "powers" or (kind == "twist" and not signed):
        u = unit()
        return power(u, rng.randint(1, 3)), power(u, rng.randint(1, 3)), "powers"
    if kind == "twist":
        u = unit()
        s, t = random_signs(rng, 2)
        return power(u, rng.randint(1, 2)).scale(s), power(u, rng.randint(1, 2)).scale(t), "twist"
    s, t = random_signs(rng, 2) if signed else (1, 1)
    u = block_sum(unit(), one(ring).scale(s))
    v = block_sum(one(ring).scale(t), unit())
    if kind == "blocks":
        return u, v, "blocks"
    c = unit()
    cs = adjoint(c)
    return mul(mul(c, u), cs), mul(mul(c, v), cs), "conjugate"


def commuting_pairs(rng: random.Random, count: int, ring: Ring = ZZ, signed: bool = True) -> Iterator[tuple]:
    kinds = ["powers", "blocks", "conjugate", "twist"]
    for i in range(count):
        yield commuting_pair(rng, ring, signed, kinds[i % len(kinds)])
