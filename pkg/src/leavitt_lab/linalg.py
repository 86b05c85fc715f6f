"""Exact kernels of sparse coordinate matrices.

Columns are sparse vectors (dicts from an orderable coordinate key to a ring
coefficient).  Over ZZ and QQ the elimination is fraction-free on integers
and kernel vectors come back primitive; over a prime field Z/p they come back
monic in their last nonzero entry.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Callable, Hashable, Sequence

from .rings import Ring


def _content(*vecs: dict) -> int:
    g = 0
    for v in vecs:
        for x in v.values():
            g = gcd(g, x)
            if g == 1:
                return 1
    return g


def _integer_columns(columns, ring):
    scaled, scales = [], []
    for col in columns:
        if ring.kind == "q":
            s = lcm(*(Fraction(x).denominator for x in col.values())) if col else 1
            scaled.append({k: int(Fraction(x) * s) for k, x in col.items()})
        else:
            s = 1
            scaled.append({k: int(x) for k, x in col.items()})
        scales.append(s)
    return scaled, scales


def _eliminate_integer(cols: list[dict[int, int]]):
    pivots: dict[int, tuple[dict, dict]] = {}
    relations = []
    for j, col in enumerate(cols):
        vec, combo = dict(col), {j: 1}
        while vec:
            piv = min(vec)
            if piv not in pivots:
                pivots[piv] = (vec, combo)
                break
            pvec, pcombo = pivots[piv]
            x, p = vec[piv], pvec[piv]
            g = gcd(x, p)
            fp, fx = p // g, x // g
            vec = _axpy(fp, vec, -fx, pvec)
            combo = _axpy(fp, combo, -fx, pcombo)
            c = _content(vec, combo)
            if c > 1:
                vec = {k: v // c for k, v in vec.items()}
                combo = {k: v // c for k, v in combo.items()}
        else:
            relations.append(combo)
    return len(pivots), relations


def _eliminate_modp(cols, p: int):
    pivots: dict[int, tuple[dict, dict]] = {}
    relations = []
    for j, col in enumerate(cols):
        vec, combo = {k: x % p for k, x in col.items() if x % p}, {j: 1}
        while vec:
            piv = min(vec)
            if piv not in pivots:
                inv = pow(vec[piv], -1, p)
                vec = {k: v * inv % p for k, v in vec.items()}
                combo = {k: v * inv % p for k, v in combo.items()}
                pivots[piv] = (vec, combo)
                break
            pvec, pcombo = pivots[piv]
            x = vec[piv]
            vec = _axpy(1, vec, -x, pvec, p)
            combo = _axpy(1, combo, -x, pcombo, p)
        else:
            relations.append(combo)
    return len(pivots), relations


def _axpy(a, x: dict, b, y: dict, p: int = 0) -> dict:
    out = {k: a * v for k, v in x.items()}
    for k, v in y.items():
        out[k] = out.get(k, 0) + b * v
    if p:
        return {k: v % p for k, v in out.items() if v % p}
    return {k: v for k, v in out.items() if v}


def kernel(
    columns: Sequence[dict],
    ring: Ring,
    order: Callable[[Hashable], object] | None = None,
) -> tuple[int, list[list]]:
    """Return ``(rank, basis)`` for the right kernel of the column matrix.

    Coordinates are indexed by sorting the union of the column keys with
    ``order``; pivots are always taken at the smallest remaining index.  One
    kernel vector is produced for every column that depends on the earlier
    ones, so the basis is triangular and the first vector is the dependency
    with the smallest possible last column.
    """
    ring.require_kernel_support()
    keys = sorted({k for col in columns for k in col}, key=order)
    index = {k: i for i, k in enumerate(keys)}
    indexed = [{index[k]: v for k, v in col.items()} for col in columns]
    n = len(columns)

    if ring.kind == "zmod":
        p = ring.modulus
        rank, rels = _eliminate_modp(indexed, p)
        basis = []
        for combo in rels:
            last = max(combo)
            inv = pow(combo[last], -1, p)
            basis.append([combo.get(j, 0) * inv % p for j in range(n)])
        return rank, basis

    cols, scales = _integer_columns(indexed, ring)
    rank, rels = _eliminate_integer(cols)
    basis = []
    for combo in rels:
        vec = {j: c * scales[j] for j, c in combo.items()}
        g = _content(vec)
        vec = {j: c // g for j, c in vec.items()}
        if vec[max(vec)] < 0:
            vec = {j: -c for j, c in vec.items()}
        basis.append([ring(vec.get(j, 0)) for j in range(n)])
    return rank, basis
