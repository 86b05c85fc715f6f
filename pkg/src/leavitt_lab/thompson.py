"""Thompson's group V as tables of complete prefix codes.

A table pairs a domain code {beta_i} with a range code {alpha_i} and maps
``beta_i xi`` to ``alpha_i xi``.  Tables are stored reduced-on-demand; two
tables are equal iff their reduced forms agree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .algebra import (
    AlgebraElement,
    canonicalize,
    reduced_form,
    uniform_beta_expand,
    is_unitary,
)
from .errors import NotInUV, NotReducible, NotUnitary
from .rep import EventuallyPeriodicPath
from .rings import QQ, ZZ, Ring
from .words import PrefixCode, format_word, is_complete_code, parse_word


@dataclass(frozen=True)
class Table:
    """``pairs`` holds ``(range_word, domain_word)`` sorted by domain word."""

    pairs: tuple

    def __init__(self, pairs: Iterable[tuple[str, str]]):
        ps = tuple(sorted(((r, d) for r, d in pairs), key=lambda p: p[1]))
        domains = [d for _, d in ps]
        ranges = [r for r, _ in ps]
        if len(set(domains)) != len(domains):
            raise ValueError("two pairs share a domain word")
        if not is_complete_code(domains):
            raise ValueError("domain words are not a complete prefix code")
        if not is_complete_code(ranges):
            raise ValueError("range words are not a complete prefix code")
        object.__setattr__(self, "pairs", ps)

    @classmethod
    def from_mapping(cls, mapping: dict[str, str]) -> "Table":
        """Build from ``{domain: range}``."""
        return cls((r, d) for d, r in mapping.items())

    @classmethod
    def identity(cls) -> "Table":
        return cls([("", "")])

    @property
    def domain(self) -> PrefixCode:
        return PrefixCode(d for _, d in self.pairs)

    @property
    def range(self) -> PrefixCode:
        return PrefixCode(r for r, _ in self.pairs)

    def mapping(self) -> dict[str, str]:
        return {d: r for r, d in self.pairs}

    def __len__(self):
        return len(self.pairs)

    def __eq__(self, other):
        if not isinstance(other, Table):
            return NotImplemented
        return table_reduce(self).pairs == table_reduce(other).pairs

    def __hash__(self):
        return hash(table_reduce(self).pairs)

    def __mul__(self, other: "Table") -> "Table":
        return table_compose(self, other)

    def __pow__(self, n: int) -> "Table":
        if n < 0:
            return table_inverse(self) ** (-n)
        result, base = Table.identity(), self
        while n:
            if n & 1:
                result = table_compose(result, base)
            n >>= 1
            if n:
                base = table_compose(base, base)
        return table_reduce(result)

    def __str__(self):
        return "{" + "; ".join(f"{format_word(d)} -> {format_word(r)}" for r, d in self.pairs) + "}"

    def __repr__(self):
        return f"Table({self})"

    def to_json(self) -> dict:
        return {"pairs": [{"domain": format_word(d), "range": format_word(r)} for r, d in self.pairs]}

    @classmethod
    def from_json(cls, data: dict) -> "Table":
        return cls((parse_word(p["range"]), parse_word(p["domain"])) for p in data["pairs"])

    @classmethod
    def parse(cls, text: str) -> "Table":
        t = text.strip()
        if not (t.startswith("{") and t.endswith("}")):
            raise ValueError(f"bad table {text!r}; expected {{beta -> alpha; ...}}")
        body = t[1:-1].strip()
        pairs = []
        for item in filter(None, (s.strip() for s in body.split(";"))):
            m = re.fullmatch(r"([abe]*)\s*->\s*([abe]*)", item)
            if not m:
                raise ValueError(f"bad table entry {item!r}")
            pairs.append((parse_word(m.group(2)), parse_word(m.group(1))))
        return cls(pairs)


def table_compose(g: Table, h: Table) -> Table:
    """The table of ``g`` after ``h``."""
    out = []
    for rh, dh in h.pairs:
        for rg, dg in g.pairs:
            if rh.startswith(dg):
                out.append((rg + rh[len(dg):], dh))
            elif dg.startswith(rh):
                ext = dg[len(rh):]
                out.append((rg, dh + ext))
    return table_reduce(Table(out))


def table_inverse(g: Table) -> Table:
    return Table((d, r) for r, d in g.pairs)


def table_reduce(g: Table) -> Table:
    by_dom = {d: r for r, d in g.pairs}
    for n in range(max(len(d) for d in by_dom), 0, -1):
        for d in sorted(x for x in by_dom if len(x) == n and x[-1] == "a"):
            sib = d[:-1] + "b"
            if sib not in by_dom or d not in by_dom:
                continue
            r1, r2 = by_dom[d], by_dom[sib]
            if r1.endswith("a") and r2 == r1[:-1] + "b":
                del by_dom[d], by_dom[sib]
                by_dom[d[:-1]] = r1[:-1]
    if len(by_dom) == len(g.pairs):
        return g
    return Table((r, d) for d, r in by_dom.items())


def to_unitary(g: Table, ring: Ring = ZZ) -> AlgebraElement:
    return canonicalize(ring, [(1, r, d) for r, d in g.pairs])


def from_unitary(x: AlgebraElement) -> Table:
    """Recover the table of an element of U_V, or raise :class:`NotInUV`."""
    ring = x.ring
    if ring in (ZZ, QQ):
        try:
            rf = reduced_form(x)
        except NotUnitary:
            raise NotInUV("not unitary") from None
        except NotReducible as exc:
            raise NotInUV("not reducible", str(exc)) from None
        bad = [s for s in rf.signs if s != 1]
        if bad:
            raise NotInUV("negative sign" if all(s == -1 for s in bad) else "non-unit coefficient")
        return table_reduce(Table((a, b) for _, a, b in rf.triples))

    # no reduced-form theorem here: check the uniform expansion is literally a table
    expanded = uniform_beta_expand(x, x.max_beta_length())
    betas = [b for _, _, b in expanded]
    alphas = [a for _, a, _ in expanded]
    if len(set(betas)) != len(betas):
        raise NotInUV("duplicate beta")
    if any(c != ring.one for c, _, _ in expanded):
        raise NotInUV("non-unit coefficient")
    if not is_complete_code(betas) or not is_complete_code(alphas):
        raise NotInUV("incomplete code")
    t = table_reduce(Table(zip(alphas, betas)))
    if not is_unitary(x):  # a table image is always unitary; guard against misuse
        raise NotInUV("not unitary")
    return t


def act(g: Table, xi: EventuallyPeriodicPath) -> EventuallyPeriodicPath:
    for r, d in g.pairs:
        if xi.startswith(d):
            return xi.drop(len(d)).prepend(r)
    raise AssertionError("domain code is complete, some pair must apply")


@dataclass(frozen=True)
class FixedPointSet:
    cylinders: PrefixCode
    points: frozenset

    def contains(self, xi: EventuallyPeriodicPath) -> bool:
        return xi in self.points or any(xi.startswith(w) for w in self.cylinders)

    def __str__(self):
        cyl = ", ".join(format_word(w) for w in self.cylinders)
        pts = ", ".join(str(p) for p in sorted(self.points))
        return f"cylinders {{{cyl}}}; points {{{pts}}}"


def fixed_points(g: Table) -> FixedPointSet:
    g = table_reduce(g)
    cylinders, points = [], set()
    for r, d in g.pairs:
        if r == d:
            cylinders.append(d)
        elif d.startswith(r):
            # d = r delta: the fixed point is r delta^inf
            points.add(EventuallyPeriodicPath(r, d[len(r):]))
        elif r.startswith(d):
            points.add(EventuallyPeriodicPath(d, r[len(d):]))
    return FixedPointSet(PrefixCode(cylinders), frozenset(points))


def finite_orbit_search(g: Table, bound: int) -> dict[int, FixedPointSet]:
    """Fixed-point sets of ``g^k`` for ``1 <= k <= bound``.

    A point has a finite orbit whose length divides ``k`` exactly when it is
    fixed by ``g^k``.  Nothing is certified beyond ``bound``.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    report = {}
    gk = Table.identity()
    for k in range(1, bound + 1):
        gk = table_compose(g, gk)
        report[k] = fixed_points(gk)
    return report


# named elements used in tests and the CLI
SWAP = Table([("b", "a"), ("a", "b")])
X0 = Table.from_mapping({"a": "aa", "ba": "ab", "bb": "b"})
