"""Independent reference computations used to check the library.

Nothing here calls the library's multiplication, rewriting or elimination
code; each oracle recomputes its answer from first principles.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction

import sympy

# -- letter-by-letter algebra ------------------------------------------------------


def letter_product(m1, m2):
    """(alpha1 beta1*)(alpha2 beta2*) by cancelling beta1* against alpha2 one letter at a time."""
    a1, b1 = m1
    a2, b2 = m2
    # beta1* alpha2 = (reverse letters of beta1 starred) then alpha2
    left = list(b1)
    right = list(a2)
    while left and right:
        x, y = left.pop(0), right.pop(0)  # x* y with x the first letter of beta1
        if x != y:
            return None
    # remaining: either b1 tail starred (left) or a2 tail (right)
    if right:
        return a1 + "".join(right), b2
    return a1, b2 + "".join(left)


def rewrite(raw):
    """Normal form by repeated single-step rewriting of b b* = 1 - a a* at the tail."""
    todo = list(raw)
    out: dict = {}
    while todo:
        c, alpha, beta = todo.pop()
        if alpha.endswith("b") and beta.endswith("b"):
            a0, b0 = alpha[:-1], beta[:-1]
            todo.append((c, a0, b0))
            todo.append((-c, a0 + "a", b0 + "a"))
        else:
            out[(alpha, beta)] = out.get((alpha, beta), 0) + c
    return out


def normalize_coeffs(d: dict, modulus: int | None):
    if modulus:
        return {k: v % modulus for k, v in d.items() if v % modulus}
    return {k: v for k, v in d.items() if v != 0}


def oracle_mul(x_terms: dict, y_terms: dict, modulus: int | None = None) -> dict:
    raw = []
    for m1, c1 in x_terms.items():
        for m2, c2 in y_terms.items():
            p = letter_product(m1, m2)
            if p is not None:
                raw.append((c1 * c2, p[0], p[1]))
    return normalize_coeffs(rewrite(raw), modulus)


# -- paths ----------------------------------------------------------------------------


def path_prefix(prefix: str, cycle: str, n: int) -> str:
    s = prefix
    while len(s) < n:
        s += cycle
    return s[:n]


def path_action(terms: dict, prefix: str, cycle: str, depth: int = 64) -> Counter:
    """Apply an element to a path, recording images by their first ``depth`` letters."""
    out: Counter = Counter()
    for (alpha, beta), c in terms.items():
        head = path_prefix(prefix, cycle, len(beta) + depth)
        if head.startswith(beta):
            out[(alpha + head[len(beta):])[:depth]] += c
    return Counter({k: v for k, v in out.items() if v})


def standard_form_by_paths(p_terms: dict, level: int) -> set[str]:
    """Words w of length ``level`` whose cylinder is fixed by p (checked on w(ab)^inf)."""
    support = set()
    for bits in itertools.product("ab", repeat=level):
        w = "".join(bits)
        img = path_action(p_terms, w, "ab" * 4 + "b", 40)
        key = path_prefix(w, "ab" * 4 + "b", 40)
        if img == Counter({key: 1}):
            support.add(w)
        elif img:
            raise AssertionError(f"p moves the cylinder of {w}: {img}")
    return support


# -- exact rank -------------------------------------------------------------------------


def sympy_rank(columns, modulus: int | None = None) -> int:
    keys = sorted({k for c in columns for k in c})
    if not keys:
        return 0
    mat = sympy.Matrix(len(keys), len(columns), lambda i, j: sympy.Rational(Fraction(columns[j].get(keys[i], 0))))
    return _rank_mod_p(mat, modulus) if modulus else mat.rank()


def _rank_mod_p(mat, p: int) -> int:
    from sympy.polys.matrices import DomainMatrix
    from sympy import GF

    dm = DomainMatrix.from_Matrix(mat).convert_to(GF(p))
    return dm.rank()


# -- choice functions ---------------------------------------------------------------------


def omega_parities(i: int, j: int) -> list[int]:
    """Parity of the number of g/t letters for each word of Omega^{i,j}."""
    return [sum(bits) % 2 for bits in itertools.product((0, 1), repeat=i + j)]


def choice_function_signs(n: int) -> Counter:
    """Counter over sign vectors (indexed by (i, j) in sorted order) of all choice functions."""
    cells = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    counts: Counter = Counter({(): 1})
    for cell in cells:
        par = Counter(omega_parities(*cell))
        nxt: Counter = Counter()
        for vec, c in counts.items():
            for bit, m in par.items():
                nxt[vec + (-1 if bit else 1,)] += c * m
        counts = nxt
    return counts


def transfer_oracle_sympy(coeffs: dict[tuple[int, int], int], n: int):
    """Product over choice functions as a sympy Poly; ``coeffs`` already shifted into [1, n]."""
    w, z = sympy.symbols("w z")
    cells = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    result = sympy.Poly(1, w, z)
    for signs, mult in choice_function_signs(n).items():
        q = sum(s * coeffs.get(cell, 0) * w ** cell[0] * z ** cell[1] for s, cell in zip(signs, cells))
        result *= sympy.Poly(q, w, z) ** mult
    return result


def explicit_choice_functions(n: int):
    """Every choice function as a tuple of words (one per Omega^{i,j}); n = 1 only (4 of them)."""
    cells = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    pools = []
    for i, j in cells:
        pools.append([f + s for f in map("".join, itertools.product("fg", repeat=i)) for s in map("".join, itertools.product("st", repeat=j))])
    return cells, list(itertools.product(*pools))


def transfer_value_at(coeffs: dict[tuple[int, int], int], n: int, w: int, z: int) -> int:
    """The product over all choice functions of q_phi(w, z), as an exact integer."""
    cells = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    total = 1
    for signs, mult in choice_function_signs(n).items():
        val = sum(s * coeffs.get(cell, 0) * w ** cell[0] * z ** cell[1] for s, cell in zip(signs, cells))
        total *= val**mult
    return total
