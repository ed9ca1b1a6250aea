"""Cayley-table groups and element orders."""

from collections import Counter
from math import lcm

import pytest

from finring import (
    CapExceededError,
    cyclic,
    dihedral,
    element_order,
    group_product,
    p_group_prime,
    quaternion8,
    symmetric,
)

ALL_SMALL = [
    cyclic(1), cyclic(2), cyclic(3), cyclic(6),
    dihedral(3), dihedral(4),
    symmetric(3), symmetric(4),
    quaternion8(),
    group_product(cyclic(2), cyclic(2)),
]


@pytest.mark.parametrize("G", ALL_SMALL, ids=lambda g: g.label)
def test_group_laws(G):
    assert G.is_associative()
    for g in range(G.order):
        assert G.op(G.identity, g) == g
        assert G.op(g, G.inverse[g]) == G.identity


@pytest.mark.parametrize("G", ALL_SMALL, ids=lambda g: g.label)
def test_element_orders_minimal(G):
    for g in range(G.order):
        k = G.element_orders[g]
        acc = g
        for i in range(1, k):
            assert acc != G.identity
            acc = G.op(acc, g)
        assert acc == G.identity
        assert G.order % k == 0  # Lagrange


def test_cyclic_orders():
    assert sorted(cyclic(3).element_orders) == [1, 3, 3]
    assert element_order(cyclic(6), 1) == 6


def test_symmetric3_orders():
    G = symmetric(3)
    assert G.order == 6
    assert Counter(G.element_orders) == Counter({1: 1, 2: 3, 3: 2})


def test_symmetric_cap():
    with pytest.raises(ValueError):
        symmetric(5)


def test_quaternion_orders():
    G = quaternion8()
    assert Counter(G.element_orders) == Counter({1: 1, 2: 1, 4: 6})


def test_dihedral_orders():
    G = dihedral(4)
    assert G.order == 8
    assert Counter(G.element_orders) == Counter({1: 1, 2: 5, 4: 2})


def test_identity_order():
    for G in ALL_SMALL:
        assert element_order(G, G.identity) == 1


def test_product_orders_are_lcms():
    G, H = cyclic(4), symmetric(3)
    P = group_product(G, H)
    for g in range(G.order):
        for h in range(H.order):
            assert (
                P.element_orders[g * H.order + h]
                == lcm(G.element_orders[g], H.element_orders[h])
            )


def test_group_cap():
    with pytest.raises(CapExceededError):
        cyclic(65)
    with pytest.raises(CapExceededError):
        group_product(cyclic(10), cyclic(10))


def test_p_group_detection():
    assert p_group_prime(quaternion8()) == 2
    assert p_group_prime(cyclic(9)) == 3
    assert p_group_prime(group_product(cyclic(2), cyclic(4))) == 2
    assert p_group_prime(symmetric(3)) is None
    assert p_group_prime(cyclic(6)) is None
