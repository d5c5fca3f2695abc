import math
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from finabel.grouptype import (
    GroupType,
    TRIVIAL_GROUP,
    canonicalize,
    cyclic,
    dim_p,
    from_primary,
    is_elementary,
    min_generators,
    parse_group_spec,
    primary,
    primary_parts,
    product,
    types_of_order,
    types_up_to,
)

moduli_lists = st.lists(st.integers(min_value=1, max_value=60), max_size=5)


def brute_order_profile(moduli):
    """Element-order profile of a product of cyclic groups, computed from
    scratch (no library calls)."""
    import itertools

    counts = Counter()
    for g in itertools.product(*(range(m) for m in moduli)):
        counts[math.lcm(*(m // math.gcd(m, c) for c, m in zip(g, moduli)))] += 1
    if not moduli:
        counts[1] = 1
    return counts


def test_canonicalize_examples():
    assert canonicalize([6, 4]).invariant_factors == (2, 12)
    assert canonicalize([1, 1]) == TRIVIAL_GROUP
    assert canonicalize([2, 2, 4]).invariant_factors == (2, 2, 4)


def test_canonicalize_preserves_order_profile():
    # same isomorphism type iff same element-order profile
    assert brute_order_profile([6, 4]) == brute_order_profile([2, 12])
    assert brute_order_profile([2, 3]) == brute_order_profile([6])


@given(moduli_lists)
def test_canonicalize_idempotent(moduli):
    T = canonicalize(moduli)
    assert canonicalize(T.invariant_factors) == T
    assert T.order == math.prod(moduli)


@given(moduli_lists)
def test_canonicalize_chain(moduli):
    fs = canonicalize(moduli).invariant_factors
    assert all(d >= 2 for d in fs)
    assert all(b % a == 0 for a, b in zip(fs, fs[1:]))


@given(st.integers(min_value=1, max_value=1000), st.integers(min_value=1, max_value=1000))
def test_canonicalize_crt(m, n):
    if math.gcd(m, n) == 1:
        assert canonicalize([m, n]) == canonicalize([m * n])


def test_invalid_types_rejected():
    with pytest.raises(ValueError):
        GroupType((2, 3))  # not a chain
    with pytest.raises(ValueError):
        GroupType((1, 2))
    with pytest.raises(ValueError):
        canonicalize([0])
    with pytest.raises(ValueError):
        canonicalize([-3])


def test_order():
    assert TRIVIAL_GROUP.order == 1
    assert canonicalize([2, 4]).order == 8
    assert canonicalize([2, 2, 4]).order == 16


def test_product():
    assert product(cyclic(2), cyclic(3)) == cyclic(6)
    assert product(cyclic(2), cyclic(2)) == canonicalize([2, 2])
    A = canonicalize([2, 12])
    assert product(A, TRIVIAL_GROUP) == A


@given(moduli_lists, moduli_lists)
@settings(max_examples=60)
def test_product_order_multiplicative(ms, ns):
    A, B = canonicalize(ms), canonicalize(ns)
    assert product(A, B).order == A.order * B.order


def test_primary_examples():
    assert primary(canonicalize([2, 12])).as_dict() == {2: (2, 1), 3: (1,)}
    assert primary(TRIVIAL_GROUP).as_dict() == {}
    assert primary(canonicalize([2, 2])).as_dict() == {2: (1, 1)}


def test_primary_roundtrip_up_to_10000():
    for n in range(1, 10001):
        for T in types_of_order(n):
            assert from_primary(primary(T)) == T


def test_primary_parts():
    assert primary_parts(canonicalize([2, 12])) == (
        canonicalize([2, 4]),
        cyclic(3),
    )
    assert primary_parts(TRIVIAL_GROUP) == ()


def test_elementary_and_dim_p():
    assert is_elementary(canonicalize([2, 2]))
    assert not is_elementary(cyclic(4))
    assert is_elementary(cyclic(6))
    assert dim_p(canonicalize([2, 2]), 2) == 2
    assert dim_p(cyclic(6), 2) == 1
    assert dim_p(cyclic(6), 3) == 1
    assert dim_p(cyclic(6), 5) == 0
    with pytest.raises(ValueError):
        dim_p(cyclic(6), 4)


def test_min_generators():
    assert min_generators(TRIVIAL_GROUP) == 0
    assert min_generators(canonicalize([2, 2, 4])) == 3
    assert min_generators(cyclic(12)) == 1


def test_min_generators_monotone_on_subgroups():
    # subgroups never need more generators than the ambient group
    from finabel.lattice import ConcreteGroup, all_subgroups

    for G in types_up_to(64):
        bound = min_generators(G)
        for H in all_subgroups(ConcreteGroup.from_type(G)):
            assert min_generators(H.abstract_type) <= bound


def test_types_of_order():
    assert types_of_order(1) == [TRIVIAL_GROUP]
    assert [t.invariant_factors for t in types_of_order(8)] == [
        (2, 2, 2),
        (2, 4),
        (8,),
    ]
    assert len(types_of_order(16)) == 5
    assert len(list(types_up_to(8))) == 11


def test_parse_group_spec():
    assert parse_group_spec("2,2,4").invariant_factors == (2, 2, 4)
    assert parse_group_spec("1") == TRIVIAL_GROUP
    assert parse_group_spec("6,4") == canonicalize([2, 12])
    with pytest.raises(ValueError):
        parse_group_spec("2,x")
    with pytest.raises(ValueError):
        parse_group_spec("0")
    with pytest.raises(ValueError):
        parse_group_spec("")


def test_str_roundtrip():
    for T in types_up_to(24):
        assert parse_group_spec(str(T)) == T
