import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import z2_example
from leavitt_lab import (
    QQ,
    ZZ,
    EventuallyPeriodicPath,
    NotInUV,
    PathVector,
    Table,
    act,
    apply_to_path,
    finite_orbit_search,
    fixed_points,
    from_unitary,
    monomial,
    mul,
    table_compose,
    table_inverse,
    table_reduce,
    to_unitary,
)
from leavitt_lab.sampling import random_path, random_table
from leavitt_lab.thompson import SWAP, X0

IDENTITY = Table.identity()
G3 = Table([("b", "aa"), ("aa", "ab"), ("ab", "b")])


def test_compose_examples():
    assert table_compose(SWAP, SWAP) == IDENTITY
    assert table_reduce(table_compose(X0, table_inverse(X0))).pairs == (("", ""),)
    assert table_inverse(SWAP) == SWAP
    assert table_inverse(IDENTITY) == IDENTITY


def test_reduce_examples():
    assert table_reduce(Table([("aa", "aa"), ("ab", "ab"), ("b", "b")])).pairs == (("", ""),)
    t = Table([("a", "a"), ("ba", "bb"), ("bb", "ba")])
    assert table_reduce(t).pairs == t.pairs


def test_to_unitary_examples():
    assert to_unitary(IDENTITY) == 1
    assert to_unitary(SWAP) == monomial(ZZ, "a", "b") + monomial(ZZ, "b", "a")


def test_from_unitary_examples():
    assert from_unitary(monomial(ZZ, "a", "b") + monomial(ZZ, "b", "a")) == SWAP
    with pytest.raises(NotInUV) as exc:
        from_unitary(monomial(ZZ, "a", "a") - monomial(ZZ, "b", "b"))
    assert exc.value.reason == "negative sign"
    with pytest.raises(NotInUV) as exc:
        from_unitary(monomial(ZZ, "a"))
    assert exc.value.reason == "not unitary"


def test_z2_example_not_in_uv():
    with pytest.raises(NotInUV) as exc:
        from_unitary(z2_example())
    assert exc.value.reason == "duplicate beta"


def test_table_validation():
    with pytest.raises(ValueError):
        Table([("a", "a"), ("b", "a")])
    with pytest.raises(ValueError):
        Table([("a", "a"), ("b", "ba")])


def test_text_and_json_round_trip():
    assert str(SWAP) == "{a -> b; b -> a}"
    assert Table.parse(str(X0)).pairs == X0.pairs
    assert Table.from_json(G3.to_json()).pairs == G3.pairs


def test_act_example():
    assert act(SWAP, EventuallyPeriodicPath("a", "b")) == EventuallyPeriodicPath("", "b")
    p = EventuallyPeriodicPath("ab", "aab")
    assert act(IDENTITY, p) == p


def test_fixed_point_examples():
    fp = fixed_points(IDENTITY)
    assert fp.cylinders == ("",) and not fp.points
    fp = fixed_points(SWAP)
    assert not fp.cylinders and not fp.points
    g = Table([("a", "ab"), ("ba", "aa"), ("bb", "b")])
    fp = fixed_points(g)
    assert EventuallyPeriodicPath("a", "b") in fp.points
    assert act(g, EventuallyPeriodicPath("a", "b")) == EventuallyPeriodicPath("a", "b")


def test_orbit_search_examples():
    rep = finite_orbit_search(SWAP, 2)
    assert rep[2].cylinders == ("",)
    assert finite_orbit_search(IDENTITY, 1)[1].cylinders == ("",)


def orbit_length(g, xi, cutoff):
    cur = xi
    for k in range(1, cutoff + 1):
        cur = act(g, cur)
        if cur == xi:
            return k
    return None


def test_orbit_search_matches_orbit_enumeration():
    rng = random.Random(7)
    rep = finite_orbit_search(G3, 6)
    samples = {p for fp in rep.values() for p in fp.points}
    samples |= {EventuallyPeriodicPath(w, "ab") for fp in rep.values() for w in fp.cylinders}
    while len(samples) < 20:
        samples.add(random_path(rng, 1, 4, 4))
    assert len(samples) >= 20
    for xi in samples:
        n = orbit_length(G3, xi, 6)
        for k, fp in rep.items():
            assert fp.contains(xi) == (n is not None and k % n == 0), (xi, k, n)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10**9))
def test_to_unitary_is_homomorphism(seed):
    rng = random.Random(seed)
    g, h = random_table(rng), random_table(rng)
    assert to_unitary(table_compose(g, h)) == mul(to_unitary(g), to_unitary(h))
    assert to_unitary(g, QQ) == to_unitary(g).__class__.from_json({**to_unitary(g).to_json(), "ring": "q"})


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10**9))
def test_group_laws(seed):
    rng = random.Random(seed)
    g, h, k = random_table(rng), random_table(rng), random_table(rng)
    assert table_compose(g, table_inverse(g)) == IDENTITY
    assert table_compose(table_compose(g, h), k) == table_compose(g, table_compose(h, k))
    assert from_unitary(to_unitary(g)) == table_reduce(g)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10**9))
def test_act_agrees_with_apply_and_composition(seed):
    rng = random.Random(seed)
    g, h = random_table(rng), random_table(rng)
    xi = random_path(rng)
    assert apply_to_path(to_unitary(g), xi) == PathVector.basis(ZZ, act(g, xi))
    assert act(table_compose(g, h), xi) == act(g, act(h, xi))


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10**9))
def test_fixed_points_are_fixed(seed):
    rng = random.Random(seed)
    g = random_table(rng)
    fp = fixed_points(g)
    for p in fp.points:
        assert act(g, p) == p
    for w in fp.cylinders:
        xi = EventuallyPeriodicPath(w, "aab")
        assert act(g, xi) == xi
    # a random path outside the fixed set moves
    xi = random_path(rng)
    assert (act(g, xi) == xi) == fp.contains(xi)
