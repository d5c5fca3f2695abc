from math import factorial

import pytest

from finabel.errors import BoundExceededError
from finabel.functions import n_t
from finabel.grouptype import types_up_to
from finabel.lattice import ConcreteGroup, all_subgroups, generated_subgroup
from finabel.counting import epi_count, hom_count, mono_count
from finabel.oracle import (
    count_free_functions,
    count_functions_with_stabilizer,
    count_generating_subsets,
    enumerate_homs,
    enumerate_isometries,
    permutation_closure,
)
from finabel.symgen import Permutation, isometry_group_order

Z4 = ConcreteGroup((4,))


def test_count_generating_subsets_examples():
    assert count_generating_subsets(ConcreteGroup((2,))) == 2
    assert count_generating_subsets(ConcreteGroup(())) == 2
    assert count_generating_subsets(ConcreteGroup((2, 2))) == 8
    with pytest.raises(BoundExceededError, match="20"):
        count_generating_subsets(ConcreteGroup((21,)))


def test_count_generating_subsets_matches_formula():
    for T in types_up_to(12):
        G = ConcreteGroup.from_type(T)
        assert count_generating_subsets(G) == n_t(2)(T), T


def test_count_free_functions_examples():
    assert count_free_functions(ConcreteGroup((2,)), 2) == 2
    assert count_free_functions(ConcreteGroup((3,)), 2) == 6
    assert count_free_functions(ConcreteGroup(()), 3) == 3
    with pytest.raises(BoundExceededError, match="10000000"):
        count_free_functions(ConcreteGroup((5, 5)), 3)
    with pytest.raises(ValueError):
        count_free_functions(Z4, 0)


def test_count_free_functions_matches_formula_small():
    for T in types_up_to(9):
        G = ConcreteGroup.from_type(T)
        for t in (1, 2, 3):
            if t**T.order <= 10**7:
                assert count_free_functions(G, t) == n_t(t)(T), (T, t)


def test_count_functions_with_stabilizer_examples():
    H = generated_subgroup(Z4, [(2,)])
    assert count_functions_with_stabilizer(Z4, H, 2) == 2
    full = generated_subgroup(Z4, [(1,)])
    assert count_functions_with_stabilizer(Z4, full, 2) == 2  # the constants
    Z2 = ConcreteGroup((2,))
    triv = generated_subgroup(Z2, [])
    assert count_functions_with_stabilizer(Z2, triv, 2) == count_free_functions(Z2, 2)


def test_stabilizer_counts_partition_function_space():
    for moduli, t in (((4,), 2), ((6,), 2), ((2, 2), 3), ((8,), 2), ((3, 3), 2)):
        G = ConcreteGroup(moduli)
        total = sum(
            count_functions_with_stabilizer(G, H, t) for H in all_subgroups(G)
        )
        assert total == t**G.order


def test_stabilizer_count_equals_free_count_of_quotient():
    # functions with stabilizer exactly H correspond to free functions on G/H
    from finabel.lattice import quotient_type

    for moduli in ((4,), (2, 2), (6,), (2, 4)):
        G = ConcreteGroup(moduli)
        for H in all_subgroups(G):
            Q = ConcreteGroup.from_type(quotient_type(G, H))
            assert count_functions_with_stabilizer(G, H, 2) == count_free_functions(Q, 2)


def test_enumerate_homs_examples():
    assert enumerate_homs(ConcreteGroup((2,)), Z4) == (2, 1, 0)
    assert enumerate_homs(ConcreteGroup((2,)), ConcreteGroup((2,))) == (2, 1, 1)
    assert enumerate_homs(ConcreteGroup((2, 2)), ConcreteGroup((2,))) == (4, 0, 3)
    big = ConcreteGroup((2,) * 10)
    with pytest.raises(BoundExceededError, match="1000000"):
        enumerate_homs(big, big)


def test_enumerate_homs_matches_formulas_small():
    types = list(types_up_to(9))
    for A in types:
        CA = ConcreteGroup.from_type(A)
        for B in types:
            got = enumerate_homs(CA, ConcreteGroup.from_type(B))
            assert got == (hom_count(A, B), mono_count(A, B), epi_count(A, B))


def test_permutation_closure_examples():
    Z3 = ConcreteGroup((3,))
    trans = Permutation.translation(Z3, (1,))
    swap = Permutation.transposition(Z3, (0,), (1,))
    assert permutation_closure(Z3, [trans, swap]) == 6
    assert permutation_closure(Z4, [Permutation.translation(Z4, (1,))]) == 4
    assert permutation_closure(
        Z4,
        [Permutation.translation(Z4, (1,)), Permutation.transposition(Z4, (0,), (2,))],
    ) == 8
    assert permutation_closure(Z4, []) == 1


def test_enumerate_isometries_examples():
    H = generated_subgroup(Z4, [(2,)])
    assert enumerate_isometries(Z4, H) == 8
    assert enumerate_isometries(Z4, generated_subgroup(Z4, [])) == 4
    assert enumerate_isometries(Z4, generated_subgroup(Z4, [(1,)])) == factorial(4)
    with pytest.raises(BoundExceededError, match="7"):
        G8 = ConcreteGroup((8,))
        enumerate_isometries(G8, generated_subgroup(G8, []))


def test_enumerate_isometries_matches_formula():
    for T in types_up_to(5):
        G = ConcreteGroup.from_type(T)
        for H in all_subgroups(G):
            assert enumerate_isometries(G, H) == isometry_group_order(G.order, H.order)
