"""The path representation on eventually periodic infinite words.

Monomials act on infinite paths by ``alpha beta* . xi = alpha xi'`` when
``xi = beta xi'`` and by zero otherwise.  Only eventually periodic paths
``prefix cycle cycle ...`` are modelled; they are closed under this action
and enough to cross-check the algebra kernel.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .algebra import AlgebraElement
from .rings import Ring
from .words import check_word, format_word, parse_word


def _primitive_root(w: str) -> str:
    n = len(w)
    for p in range(1, n + 1):
        if n % p == 0 and w[:p] * (n // p) == w:
            return w[:p]
    return w


@dataclass(frozen=True, order=True)
class EventuallyPeriodicPath:
    """The infinite word ``prefix cycle cycle ...`` in canonical form.

    Canonical means: ``cycle`` is primitive and ``prefix`` is as short as
    possible.  With the shortest prefix the cycle is fixed as the period
    starting right after it, so equal paths have equal fields.
    """

    prefix: str
    cycle: str

    def __post_init__(self):
        canon = canonical_path(self.prefix, self.cycle)
        object.__setattr__(self, "prefix", canon[0])
        object.__setattr__(self, "cycle", canon[1])

    def letter(self, i: int) -> str:
        if i < len(self.prefix):
            return self.prefix[i]
        return self.cycle[(i - len(self.prefix)) % len(self.cycle)]

    def head(self, n: int) -> str:
        return "".join(self.letter(i) for i in range(n))

    def startswith(self, w: str) -> bool:
        return self.head(len(w)) == w

    def drop(self, n: int) -> "EventuallyPeriodicPath":
        if n <= len(self.prefix):
            return EventuallyPeriodicPath(self.prefix[n:], self.cycle)
        r = (n - len(self.prefix)) % len(self.cycle)
        return EventuallyPeriodicPath("", self.cycle[r:] + self.cycle[:r])

    def prepend(self, w: str) -> "EventuallyPeriodicPath":
        return EventuallyPeriodicPath(w + self.prefix, self.cycle)

    def __str__(self):
        return f"{format_word(self.prefix)}({self.cycle})^w"

    @classmethod
    def parse(cls, text: str) -> "EventuallyPeriodicPath":
        t = text.strip()
        if not t.endswith(")^w") or "(" not in t:
            raise ValueError(f"bad path {text!r}; expected prefix(cycle)^w")
        head, cyc = t[:-3].split("(", 1)
        return cls(parse_word(head) if head else "", check_word(cyc))


def canonical_path(prefix: str, cycle: str) -> tuple[str, str]:
    check_word(prefix)
    check_word(cycle)
    if not cycle:
        raise ValueError("cycle must be nonempty")
    cycle = _primitive_root(cycle)
    # absorb trailing prefix letters into the cycle by rotating it right
    while prefix and prefix[-1] == cycle[-1]:
        prefix = prefix[:-1]
        cycle = cycle[-1] + cycle[:-1]
    return prefix, cycle


def path(prefix: str, cycle: str) -> EventuallyPeriodicPath:
    return EventuallyPeriodicPath(prefix, cycle)


class PathVector:
    """Finitely supported vector in the free module on infinite paths."""

    __slots__ = ("ring", "entries")

    def __init__(self, ring: Ring, entries: dict | None = None):
        self.ring = ring
        self.entries = {}
        for p, c in sorted((entries or {}).items()):
            c = ring(c)
            if c != 0:
                self.entries[p] = c

    @classmethod
    def basis(cls, ring: Ring, p: EventuallyPeriodicPath) -> "PathVector":
        return cls(ring, {p: 1})

    def __eq__(self, other):
        if isinstance(other, PathVector):
            return self.ring == other.ring and self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.entries.items())))

    def __add__(self, other: "PathVector") -> "PathVector":
        self.ring.require_same(other.ring)
        out = dict(self.entries)
        for p, c in other.entries.items():
            out[p] = self.ring.add(out.get(p, self.ring.zero), c)
        return PathVector(self.ring, out)

    def __neg__(self):
        return PathVector(self.ring, {p: self.ring.neg(c) for p, c in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def __iter__(self) -> Iterator:
        return iter(self.entries.items())

    def __len__(self):
        return len(self.entries)

    def __bool__(self):
        return bool(self.entries)

    def __str__(self):
        from .algebra import format_coefficient_terms

        return format_coefficient_terms(((c, str(p)) for p, c in self.entries.items()), self.ring)

    def __repr__(self):
        return f"PathVector({self.ring}, {self})"


def apply_element(x: AlgebraElement, v: PathVector) -> PathVector:
    x.ring.require_same(v.ring)
    ring = x.ring
    out: dict = {}
    for xi, cv in v.entries.items():
        for (alpha, beta), cx in x.terms.items():
            if xi.startswith(beta):
                eta = xi.drop(len(beta)).prepend(alpha)
                out[eta] = ring.add(out.get(eta, ring.zero), ring.mul(cx, cv))
    return PathVector(ring, out)


def apply_to_path(x: AlgebraElement, p: EventuallyPeriodicPath) -> PathVector:
    return apply_element(x, PathVector.basis(x.ring, p))


def sample_paths(words: Iterable[str], cycle: str) -> list[EventuallyPeriodicPath]:
    return [EventuallyPeriodicPath(w, cycle) for w in words]
