import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from conftest import z2_example
from oracles import path_action, path_prefix
from leavitt_lab import ZZ, Zmod, EventuallyPeriodicPath, PathVector, apply_element, apply_to_path, canonical_path, monomial, mul
from leavitt_lab.sampling import random_element, random_path, random_word

Z2 = Zmod(2)


def unroll(p: EventuallyPeriodicPath, n=24):
    return path_prefix(p.prefix, p.cycle, n)


def test_canonical_path_examples():
    assert canonical_path("", "aa") == ("", "a")
    assert canonical_path("ab", "b") == ("a", "b")
    assert canonical_path("a", "abab") == ("a", "ab")


def test_listed_value_for_a_abab_is_a_different_path():
    # a(abab)^w = a ab ab ab ... while (aab)^w = aab aab ...; they differ at the fifth letter
    assert path_prefix("a", "abab", 12) != path_prefix("", "aab", 12)
    assert path_prefix("a", "abab", 12) == path_prefix("a", "ab", 12)


def test_empty_cycle_rejected():
    with pytest.raises(ValueError):
        canonical_path("a", "")


@settings(max_examples=200)
@given(st.text("ab", max_size=5), st.text("ab", min_size=1, max_size=6))
def test_canonical_form_is_unique_and_faithful(prefix, cycle):
    p = EventuallyPeriodicPath(prefix, cycle)
    assert unroll(p, 40) == path_prefix(prefix, cycle, 40)
    # shortest prefix: the last prefix letter never matches the cycle's last letter
    assert not p.prefix or p.prefix[-1] != p.cycle[-1]
    # rotating and repeating the presentation yields the same object
    assert EventuallyPeriodicPath(prefix + cycle, cycle + cycle) == p


def test_path_text_round_trip():
    p = EventuallyPeriodicPath("ba", "aab")
    assert str(p) == "ba(aab)^w"
    assert EventuallyPeriodicPath.parse(str(p)) == p
    assert str(EventuallyPeriodicPath("", "ab")) == "e(ab)^w"


def test_apply_examples():
    xi = EventuallyPeriodicPath("", "ab")
    a = monomial(ZZ, "a")
    assert apply_to_path(a, xi) == PathVector.basis(ZZ, xi.prepend("a"))
    astar = monomial(ZZ, "", "a")
    assert not apply_to_path(astar, xi.prepend("b"))


def test_z2_example_on_aa_xi():
    xi = EventuallyPeriodicPath("", "ab")
    got = apply_to_path(z2_example(), xi.prepend("aa"))
    expected = PathVector(Z2, {xi.prepend(w): 1 for w in ("ab", "ba", "bb")})
    assert got == expected


def _as_counter(v: PathVector, depth=64):
    return Counter({path_prefix(p.prefix, p.cycle, depth): c for p, c in v})


@pytest.mark.parametrize("ring", [ZZ, Z2])
@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10**9))
def test_action_matches_truncated_oracle(ring, seed):
    rng = random.Random(seed)
    x = random_element(rng, ring, max_terms=4)
    p = random_path(rng)
    got = _as_counter(apply_to_path(x, p))
    expected = path_action(dict(x.terms), p.prefix, p.cycle)
    if ring.modulus:
        expected = Counter({k: v % ring.modulus for k, v in expected.items() if v % ring.modulus})
    assert got == expected


@pytest.mark.parametrize("ring", [ZZ, Z2])
@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10**9))
def test_representation_is_multiplicative(ring, seed):
    rng = random.Random(seed)
    x, y = random_element(rng, ring), random_element(rng, ring)
    v = PathVector(ring, {random_path(rng): 1 for _ in range(3)})
    assert apply_element(mul(x, y), v) == apply_element(x, apply_element(y, v))


def test_path_letters():
    p = EventuallyPeriodicPath(random_word(random.Random(1), 3), "aab")
    assert p.head(10) == unroll(p, 10)
    assert p.drop(5).head(6) == unroll(p, 11)[5:]
