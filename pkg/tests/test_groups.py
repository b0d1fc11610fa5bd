"""Group parsing, primary decomposition, element arithmetic, and order costs."""

from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zerosum import (
    InputError,
    add_elements,
    element_from_index,
    element_index,
    element_order,
    group_spec,
    identity,
    order_cost,
    parse_group_spec,
    primary_decomposition,
    to_primary_coordinates,
)
from zerosum.groups import MAX_GROUP_ORDER

small_orders = st.lists(st.integers(min_value=1, max_value=12), min_size=1, max_size=3)


def _dec(text: str):
    return primary_decomposition(parse_group_spec(text))


def test_parse_group_spec_basic():
    spec = parse_group_spec("9,3,3,25,5")
    assert spec.cyclic_orders == (9, 3, 3, 25, 5)
    assert spec.group_order == 9 * 3 * 3 * 25 * 5


@pytest.mark.parametrize("bad", ["", " ", "4,", "a", "2,-3", "0", "3;4"])
def test_parse_group_spec_rejects_junk(bad):
    with pytest.raises(InputError):
        parse_group_spec(bad)


def test_group_order_bound():
    with pytest.raises(InputError):
        group_spec([MAX_GROUP_ORDER + 1])


def test_exponent_is_lcm_of_factors():
    # N must be the lcm of the factor orders; cross-checked independently.
    for text in ("9,3,3,25,5", "4", "2,2", "6", "12,18", "8,12,30"):
        spec = parse_group_spec(text)
        dec = primary_decomposition(spec)
        assert dec.exponent == math.lcm(*spec.cyclic_orders)
    assert _dec("9,3,3,25,5").exponent == 225


def test_decomposition_rows_sorted_and_sized():
    dec = _dec("12,18")
    assert dec.primes == (2, 3)
    # 12*18 = 2^3 3^3; components 4,2 and 9,3.
    assert dec.exponents == ((2, 1), (2, 1))
    assert dec.group_order == 216
    for row in dec.exponents:
        assert all(a >= b for a, b in zip(row, row[1:]))
        assert all(e >= 1 for e in row)


def test_decomposition_ignores_factor_order():
    a = _dec("3,9")
    b = _dec("9,3")
    assert a.primes == b.primes
    assert a.exponents == b.exponents
    assert a.exponent == b.exponent == 9


def test_trivial_group():
    dec = _dec("1")
    assert dec.group_order == 1
    assert dec.exponent == 1
    assert dec.num_primes == 0
    assert identity(dec).coords == ()
    assert element_order(identity(dec)) == 1
    assert order_cost(identity(dec)) == 1


def test_component_moduli_product_is_group_order():
    for text in ("4", "2,2", "6", "12", "9,3", "8,12,30"):
        dec = _dec(text)
        product = 1
        for row in dec.moduli:
            for m in row:
                product *= m
        assert product == dec.group_order


def test_crt_splitting_z6():
    dec = _dec("6")
    g = to_primary_coordinates((5,), dec)
    # 5 mod 2 = 1, 5 mod 3 = 2.
    assert g.coords == ((1,), (2,))
    assert element_order(g) == 6


def test_to_primary_coordinates_validates():
    dec = _dec("2,2")
    with pytest.raises(InputError):
        to_primary_coordinates((1,), dec)
    with pytest.raises(InputError):
        to_primary_coordinates((1, 0, 0), dec)
    with pytest.raises(InputError):
        to_primary_coordinates((1.5, 0), dec)


def test_negative_residues_reduce():
    dec = _dec("12")
    assert to_primary_coordinates((-1,), dec) == to_primary_coordinates((11,), dec)


def test_element_orders_z12():
    dec = _dec("12")
    got = [element_order(to_primary_coordinates((a,), dec)) for a in range(12)]
    assert got == [1, 12, 6, 4, 3, 12, 2, 12, 3, 4, 6, 12]


def test_order_cost_is_gcd_for_cyclic():
    for n in (2, 3, 4, 6, 9, 12, 36):
        dec = _dec(str(n))
        for a in range(n):
            g = to_primary_coordinates((a,), dec)
            assert order_cost(g) == math.gcd(a, n)


def test_add_elements_rejects_mixed_groups():
    a = identity(_dec("4"))
    b = identity(_dec("2,2"))
    with pytest.raises(InputError):
        add_elements(a, b)


@given(small_orders, st.integers(min_value=0, max_value=10**6))
@settings(max_examples=120)
def test_element_order_by_repeated_addition(orders, raw_seed):
    spec = group_spec(orders)
    dec = primary_decomposition(spec)
    g = element_from_index(dec, raw_seed % dec.group_order)
    k = element_order(g)
    assert 1 <= k <= dec.exponent
    assert dec.exponent % k == 0
    acc = identity(dec)
    for step in range(1, k + 1):
        acc = add_elements(acc, g)
        if step < k:
            assert acc != identity(dec)
    assert acc == identity(dec)


@given(small_orders, st.integers(min_value=0, max_value=10**9))
@settings(max_examples=120)
def test_element_index_roundtrip(orders, raw):
    dec = primary_decomposition(group_spec(orders))
    idx = raw % dec.group_order
    g = element_from_index(dec, idx)
    assert element_index(g) == idx


@given(small_orders)
@settings(max_examples=60)
def test_index_zero_is_identity(orders):
    dec = primary_decomposition(group_spec(orders))
    assert element_from_index(dec, 0) == identity(dec)
    assert element_index(identity(dec)) == 0


def test_element_from_index_bounds():
    dec = _dec("6")
    with pytest.raises(InputError):
        element_from_index(dec, 6)
    with pytest.raises(InputError):
        element_from_index(dec, -1)


@given(small_orders, st.data())
@settings(max_examples=100)
def test_user_coordinates_are_homomorphic(orders, data):
    spec = group_spec(orders)
    dec = primary_decomposition(spec)
    xs = tuple(data.draw(st.integers(-50, 50)) for _ in orders)
    ys = tuple(data.draw(st.integers(-50, 50)) for _ in orders)
    zs = tuple(x + y for x, y in zip(xs, ys))
    lhs = add_elements(to_primary_coordinates(xs, dec), to_primary_coordinates(ys, dec))
    assert lhs == to_primary_coordinates(zs, dec)
