import threading
from fractions import Fraction

import pytest

from _classical import divisors, mobius_up_to, totient_up_to
from finabel.errors import BoundExceededError, NonInvertibleError
from finabel.functions import (
    AbelianFunction,
    add,
    binom_card,
    builtin_function,
    card,
    card_pow_t,
    check_multiplicative,
    convolve,
    delta,
    generating_subsets_of_size,
    generating_tuples,
    inverse,
    mu,
    mu_closed,
    n_t,
    one,
    phi,
    pointwise,
    restrict_to_cyclic,
    scale,
    subgroup_count,
    t_pow_card,
)
from finabel.grouptype import (
    TRIVIAL_GROUP,
    canonicalize,
    cyclic,
    types_of_order,
    types_up_to,
)

T22 = canonicalize([2, 2])
T24 = canonicalize([2, 4])


def test_eval_examples():
    assert one(T22) == 1
    assert card(T24) == 8
    assert delta(TRIVIAL_GROUP) == 1
    assert delta(T22) == 0
    with pytest.raises(TypeError):
        one([2, 2])


def test_eval_memoized_and_exact():
    f = convolve(phi, one)
    first = f(T22)
    assert first == 4 and f(T22) is first
    assert isinstance(first, Fraction)


def test_convolve_examples():
    assert convolve(phi, one)(T22) == 4
    assert subgroup_count(T22) == 5
    for name in ("delta", "one", "card", "mu", "phi", "nsub"):
        f = builtin_function(name)
        df = convolve(delta, f)
        for G in types_up_to(16):
            assert df(G) == f(G)


def test_pointwise_add_scale():
    assert pointwise(card, card)(cyclic(2)) == 4
    assert add(delta, delta)(TRIVIAL_GROUP) == 2
    assert scale(3, one)(cyclic(2)) == 3
    assert scale(Fraction(1, 2), card)(cyclic(3)) == Fraction(3, 2)


def test_inverse_examples():
    inv_one = inverse(one)
    assert inv_one(T22) == 2
    assert inv_one(cyclic(4)) == 0
    inv_delta = inverse(delta)
    for G in types_up_to(12):
        assert inv_delta(G) == delta(G)
    with pytest.raises(NonInvertibleError):
        inverse(scale(0, one))


def test_inverse_is_two_sided():
    for f in (one, card, phi, mu):
        g = inverse(f)
        conv = convolve(f, g)
        for G in types_up_to(24):
            assert conv(G) == delta(G)


def test_unhinted_inverse_matches_mu_on_composite_lattices():
    # an inverse built from an unflagged copy of `one` cannot decompose by
    # p-parts: the recursion runs on the full composite lattice every time
    one_plain = AbelianFunction("one_plain", lambda G: 1)
    inv_plain = inverse(one_plain)
    for order in (36, 72, 100, 144, 200):
        for T in types_of_order(order):
            assert inv_plain(T) == mu_closed(T), T
    assert not inv_plain.multiplicative


def test_mu_closed_examples():
    assert mu_closed(T22) == 2
    assert mu_closed(cyclic(6)) == 1
    assert mu_closed(canonicalize([2, 2, 2])) == -8
    assert mu_closed(cyclic(4)) == 0
    assert mu_closed(canonicalize([3, 3])) == 3
    assert mu_closed(TRIVIAL_GROUP) == 1


def test_phi_examples():
    assert phi(T22) == 0
    assert phi(cyclic(12)) == 4
    # generating 1-tuples are exactly the generators
    g1 = generating_tuples(1)
    for G in types_up_to(16):
        assert g1(G) == phi(G)


def test_n_t_examples():
    assert n_t(1)(T24) == 0
    for G in types_up_to(16):
        assert n_t(1)(G) == delta(G)
    assert n_t(2)(T22) == 8
    assert n_t(2)(T24) == 216


def test_generating_subsets_by_size_sum_to_total():
    for G in types_up_to(12):
        total = sum(
            generating_subsets_of_size(d)(G) for d in range(G.order + 1)
        )
        assert total == n_t(2)(G)


def test_gensubsets_small_cases():
    # Z_2 x Z_2 needs at least 2 elements to generate
    assert generating_subsets_of_size(0)(T22) == 0
    assert generating_subsets_of_size(1)(T22) == 0
    assert generating_subsets_of_size(2)(T22) == 3  # 3 two-element generating sets
    assert generating_subsets_of_size(0)(TRIVIAL_GROUP) == 1  # empty set generates


def test_restrict_examples():
    assert restrict_to_cyclic(mu)(12) == 0
    assert restrict_to_cyclic(phi)(10) == 4
    assert restrict_to_cyclic(delta)(1) == 1
    with pytest.raises(ValueError):
        restrict_to_cyclic(delta)(0)


def test_restriction_is_classical_on_cyclics():
    rmu = restrict_to_cyclic(mu)
    rphi = restrict_to_cyclic(phi)
    mob = mobius_up_to(120)
    tot = totient_up_to(120)
    for n in range(1, 121):
        assert rmu(n) == mob[n]
        assert rphi(n) == tot[n]


def test_dirichlet_compatibility():
    # restriction turns lattice convolution into Dirichlet convolution
    pairs = [(one, mu), (one, card), (mu, card), (one, one)]
    for f, g in pairs:
        rf, rg = restrict_to_cyclic(f), restrict_to_cyclic(g)
        rfg = restrict_to_cyclic(convolve(f, g))
        for n in range(1, 201):
            assert rfg(n) == sum(rf(d) * rg(n // d) for d in divisors(n))


def test_check_multiplicative():
    assert check_multiplicative(mu, 100)
    assert check_multiplicative(card, 100)
    assert not check_multiplicative(t_pow_card(2), 36)
    assert check_multiplicative(card_pow_t(2), 60)
    assert not check_multiplicative(scale(2, one), 20)  # f(1) != 1
    assert not check_multiplicative(n_t(2), 36)


def test_multiplicative_hints_are_true():
    # every function carrying the fast-path flag really is multiplicative
    flagged = [delta, one, card, mu, phi, subgroup_count, generating_tuples(2),
               card_pow_t(3), t_pow_card(1), inverse(card), pointwise(mu, card)]
    for f in flagged:
        assert f.multiplicative
        assert check_multiplicative(f, 60), f.name


def test_fast_path_matches_rule():
    for f in (mu, phi, subgroup_count, generating_tuples(2)):
        for G in types_up_to(36):
            assert f(G) == f.eval_by_rule(G), (f.name, G)


def test_builtin_registry():
    assert builtin_function("mu") is mu
    assert builtin_function("nsub") is subgroup_count
    assert builtin_function("nt:2") is n_t(2)
    assert builtin_function("gentuples:3") is generating_tuples(3)
    assert builtin_function("gensubsets:2") is generating_subsets_of_size(2)
    assert builtin_function("tpow:2") is t_pow_card(2)
    for bad in ("nope", "nt:x", "nt:", "tpow:1.5", "nt"):
        with pytest.raises(ValueError):
            builtin_function(bad)
    with pytest.raises(ValueError):
        n_t(0)
    with pytest.raises(ValueError):
        binom_card(-1)


def test_lattice_bound_propagates():
    with pytest.raises(BoundExceededError):
        subgroup_count(cyclic(1024))  # a single 2-part above the bound
    fresh = convolve(mu, t_pow_card(2))  # unmemoized; needs the full lattice
    with pytest.raises(BoundExceededError):
        fresh(cyclic(600))
    # multiplicative functions decompose: large squarefree-ish orders are fine
    assert subgroup_count(cyclic(1000)) == 16


def test_huge_exponent_values_are_exact():
    # t^|G| at order 64 has ~45 digits; exactness matters for divisibility
    v = t_pow_card(5)(canonicalize([8, 8]))
    assert v == 5**64


def test_concurrent_memo_reads_and_writes():
    f = convolve(mu, convolve(one, card))
    types = list(types_up_to(30))
    results: list[dict] = [dict() for _ in range(8)]

    def worker(slot):
        for G in types:
            results[slot][G] = f(G)

    threads = [threading.Thread(target=worker, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for slot in range(1, 8):
        assert results[slot] == results[0]


def test_value_strings_roundtrip():
    for G in types_up_to(16):
        for f in (mu, phi, subgroup_count):
            s = str(f(G))
            assert Fraction(s) == f(G)
