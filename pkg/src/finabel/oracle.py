"""Brute-force reference computations used only for cross-validation.

Everything here counts by direct enumeration, deliberately avoiding the
convolution/Moebius formula code paths; only the raw element arithmetic of
:class:`ConcreteGroup` (index tables, element orders) is shared.  Bounds are
explicit constants and violations raise :class:`BoundExceededError` naming
the bound, so a failing sweep is interpretable.
"""

from __future__ import annotations

import itertools
from typing import Sequence

import numpy as np

from .errors import BoundExceededError
from .grouptype import is_prime
from .lattice import ConcreteGroup, Subgroup
from .symgen import Permutation

__all__ = [
    "GENERATING_SUBSET_MAX_ORDER",
    "FUNCTION_SPACE_BOUND",
    "HOM_ENUMERATION_BOUND",
    "CLOSURE_BOUND",
    "ISOMETRY_MAX_ORDER",
    "count_generating_subsets",
    "count_free_functions",
    "count_functions_with_stabilizer",
    "enumerate_homs",
    "permutation_closure",
    "enumerate_isometries",
]

GENERATING_SUBSET_MAX_ORDER = 20
FUNCTION_SPACE_BOUND = 10**7
HOM_ENUMERATION_BOUND = 10**6
CLOSURE_BOUND = 10**6
ISOMETRY_MAX_ORDER = 7


def count_generating_subsets(G: ConcreteGroup) -> int:
    """Sweep all 2^|G| subsets and count those whose closure is all of G."""
    n = G.order
    if n > GENERATING_SUBSET_MAX_ORDER:
        raise BoundExceededError(
            f"group order {n} exceeds the generating-subset sweep bound"
            f" {GENERATING_SUBSET_MAX_ORDER}"
        )
    rows = [G.add_row(i) for i in range(n)]
    full = (1 << n) - 1
    count = 0
    for subset in range(1 << n):
        closed = 1  # the identity
        todo = subset
        while todo:
            low = todo & -todo
            todo ^= low
            x = low.bit_length() - 1
            if (closed >> x) & 1:
                continue
            # close <closed, x>: union of translates by multiples of x
            row = rows[x]
            coset = 0
            m = closed
            while m:
                b = m & -m
                coset |= 1 << row[b.bit_length() - 1]
                m ^= b
            new = closed | coset
            cur = row[x]
            while not (closed >> cur) & 1:
                shifted = 0
                m = coset
                while m:
                    b = m & -m
                    shifted |= 1 << row[b.bit_length() - 1]
                    m ^= b
                coset = shifted
                new |= coset
                cur = row[cur]
            closed = new
            if closed == full:
                break
        if closed == full:
            count += 1
    return count


def _minimal_subgroup_generators(G: ConcreteGroup) -> list[int]:
    """One prime-order element per minimal subgroup (indices)."""
    orders = G.element_orders()
    seen: set[frozenset[int]] = set()
    reps = []
    for i in range(1, G.order):
        if not is_prime(orders[i]):
            continue
        row = G.add_row(i)
        members = [0]
        cur = i
        while cur:
            members.append(cur)
            cur = row[cur]
        key = frozenset(members)
        if key not in seen:
            seen.add(key)
            reps.append(i)
    return reps


def count_free_functions(G: ConcreteGroup, t: int) -> int:
    """Number of functions G -> {1..t} with trivial stabilizer under the
    regular translation action.

    Enumerates all t^|G| functions (as base-t digit strings, vectorized in
    chunks) and tests each individually.  A nontrivial stabilizer contains an
    element of prime order, so one generator per minimal subgroup suffices
    for the triviality test.
    """
    if not isinstance(t, int) or t < 1:
        raise ValueError(f"t must be an integer >= 1, got {t!r}")
    n = G.order
    if t**n > FUNCTION_SPACE_BOUND:
        raise BoundExceededError(
            f"t^|G| = {t}^{n} exceeds the function-space bound {FUNCTION_SPACE_BOUND}"
        )
    if n == 1:
        return t  # every function on the trivial group is free
    perms = [np.array(G.add_row(i), dtype=np.intp) for i in _minimal_subgroup_generators(G)]
    total_functions = t**n
    dtype = np.uint8 if t <= 255 else np.uint16
    chunk = 1 << 19
    free_total = 0
    for lo in range(0, total_functions, chunk):
        hi = min(total_functions, lo + chunk)
        rem = np.arange(lo, hi, dtype=np.int64)
        digits = np.empty((hi - lo, n), dtype=dtype)
        for pos in range(n - 1, -1, -1):
            digits[:, pos] = rem % t
            rem //= t
        free = np.ones(hi - lo, dtype=bool)
        for perm in perms:
            free &= (digits != digits[:, perm]).any(axis=1)
        free_total += int(free.sum())
    return free_total


def count_functions_with_stabilizer(G: ConcreteGroup, H: Subgroup, t: int) -> int:
    """Number of functions G -> {1..t} whose stabilizer is exactly H.

    Such functions are constant on H-cosets; each candidate labelling of the
    cosets is tested against one representative of every other coset.
    """
    if H.parent != G:
        raise ValueError("subgroup does not belong to the given group")
    if not isinstance(t, int) or t < 1:
        raise ValueError(f"t must be an integer >= 1, got {t!r}")
    n = G.order
    if t**n > FUNCTION_SPACE_BOUND:
        raise BoundExceededError(
            f"t^|G| = {t}^{n} exceeds the function-space bound {FUNCTION_SPACE_BOUND}"
        )
    members = sorted(G.index_of(g) for g in H.elements)
    member_set = set(members)
    coset_of = [-1] * n
    reps = []
    for i in range(n):
        if coset_of[i] >= 0:
            continue
        row = G.add_row(i)
        for h in members:
            coset_of[row[h]] = len(reps)
        reps.append(i)
    # stabilizer membership is constant on cosets: test one g per coset != H
    outside = [g for g in reps if g not in member_set]
    shifted = {g: [coset_of[G.add_row(g)[r]] for r in reps] for g in outside}
    count = 0
    for labels in itertools.product(range(t), repeat=len(reps)):
        for g in outside:
            mapped = shifted[g]
            if all(labels[mapped[j]] == labels[j] for j in range(len(reps))):
                break  # stabilizer strictly larger than H
        else:
            count += 1
    return count


def enumerate_homs(A: ConcreteGroup, B: ConcreteGroup) -> tuple[int, int, int]:
    """(hom, mono, epi) counts by enumerating all candidate generator images.

    A homomorphism from the product group is any assignment sending the i-th
    canonical generator to an element of order dividing m_i; each map is
    materialized on all of A to test injectivity and surjectivity.
    """
    orders_b = B.element_orders()
    candidates = [
        [j for j in range(B.order) if m % orders_b[j] == 0] for m in A.moduli
    ]
    total = 1
    for c in candidates:
        total *= len(c)
    if total > HOM_ENUMERATION_BOUND:
        raise BoundExceededError(
            f"|Hom| = {total} exceeds the enumeration bound {HOM_ENUMERATION_BOUND}"
        )
    order_b = B.order
    hom = mono = epi = 0
    for choice in itertools.product(*candidates):
        # materialize the map on all of A: values of sum_j k_j * image_j
        values = [0]
        for j, m in zip(choice, A.moduli):
            row_j = B.add_row(j)
            new_values = []
            shift = 0  # index of k * e_j
            for _ in range(m):
                if shift:
                    row_s = B.add_row(shift)
                    new_values.extend(row_s[v] for v in values)
                else:
                    new_values.extend(values)
                shift = row_j[shift]
            values = new_values
        hom += 1
        if values.count(0) == 1:
            mono += 1
        if len(set(values)) == order_b:
            epi += 1
    assert hom == total
    return hom, mono, epi


def permutation_closure(G: ConcreteGroup, gens: Sequence[Permutation]) -> int:
    """Size of the subgroup of Sym(G) generated by ``gens`` (BFS closure)."""
    for p in gens:
        if p.group != G:
            raise ValueError("generators act on different groups")
    identity = tuple(range(G.order))
    gen_images = [p.images for p in gens]
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gen_images:
                prod = tuple(h[i] for i in g)
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
                    if len(seen) > CLOSURE_BOUND:
                        raise BoundExceededError(
                            f"permutation closure exceeds {CLOSURE_BOUND} elements"
                        )
        frontier = nxt
    return len(seen)


def enumerate_isometries(G: ConcreteGroup, H: Subgroup) -> int:
    """Count permutations sigma with sigma(x) - sigma(y) = x - y mod H for
    all pairs x, y, by filtering all |G|! permutations against the defining
    relation directly."""
    if H.parent != G:
        raise ValueError("subgroup does not belong to the given group")
    n = G.order
    if n > ISOMETRY_MAX_ORDER:
        raise BoundExceededError(
            f"group order {n} exceeds the isometry sweep bound {ISOMETRY_MAX_ORDER}"
        )
    ar = G._arith
    neg = ar.neg
    sub = [ar.row(neg[j]) for j in range(n)]  # sub[j][i] = e_i - e_j
    members = frozenset(ar.index[g] for g in H.elements)
    count = 0
    for perm in itertools.permutations(range(n)):
        ok = True
        for a in range(n):
            pa = perm[a]
            for b in range(a + 1, n):
                lhs = sub[perm[b]][pa]  # sigma(a) - sigma(b)
                rhs = sub[b][a]  # a - b
                if sub[rhs][lhs] not in members:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count
