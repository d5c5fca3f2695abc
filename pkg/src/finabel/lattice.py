"""Explicit products of cyclic groups with full subgroup-lattice enumeration.

Elements of ``Z_m1 x ... x Z_mk`` are k-tuples in lexicographic order.
Subgroups are enumerated by breadth-first search on the lattice: each known
subgroup is extended by one element outside it (one representative per coset
suffices, since ``<H, x+h> = <H, x>`` for h in H) and closed, deduplicating
by element set.  Internally subgroups are bitmasks over the element list.

Two independent routes compute the abstract type of a subgroup: greedy
reconstruction from the element-order profile, and a Smith-normal-form
computation on generator matrices; tests cross-check them.
"""

from __future__ import annotations

import itertools
from collections import Counter
from functools import lru_cache
from math import gcd, lcm, prod
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import BoundExceededError
from .grouptype import GroupType, TRIVIAL_GROUP, canonicalize, factorize

__all__ = [
    "ConcreteGroup",
    "Subgroup",
    "IntMatrix",
    "DEFAULT_MAX_LATTICE_ORDER",
    "get_max_lattice_order",
    "set_max_lattice_order",
    "element_order",
    "generated_subgroup",
    "all_subgroups",
    "smith_normal_form",
    "quotient_type",
    "subgroup_type",
    "subgroup_type_via_snf",
    "type_from_order_statistics",
    "subgroup_quotient_pairs",
]

# Rows x cols matrix of Python ints (arbitrary precision).
IntMatrix = Sequence[Sequence[int]]

DEFAULT_MAX_LATTICE_ORDER = 512
_max_lattice_order = DEFAULT_MAX_LATTICE_ORDER


def get_max_lattice_order() -> int:
    return _max_lattice_order


def set_max_lattice_order(n: int) -> None:
    """Raise or lower the global subgroup-enumeration bound (default 512)."""
    global _max_lattice_order
    if n < 1:
        raise ValueError(f"lattice bound must be >= 1, got {n}")
    _max_lattice_order = n


def _check_lattice_bound(order: int, max_order: int | None) -> None:
    bound = _max_lattice_order if max_order is None else max_order
    if order > bound:
        raise BoundExceededError(
            f"group order {order} exceeds the subgroup-lattice bound {bound}"
        )


class _Arith:
    """Shared index arithmetic for one moduli tuple.

    Elements are indexed 0..n-1 in lexicographic tuple order, so index 0 is
    the identity.  Addition rows are built lazily and cached.
    """

    def __init__(self, moduli: tuple[int, ...]):
        self.moduli = moduli
        self.k = len(moduli)
        self.n = prod(moduli)
        self.elements: list[tuple[int, ...]] = list(
            itertools.product(*(range(m) for m in moduli))
        )
        self.index: dict[tuple[int, ...], int] = {
            g: i for i, g in enumerate(self.elements)
        }
        if self.k:
            self._digits = np.array(self.elements, dtype=np.int64)
            self._mods = np.array(moduli, dtype=np.int64)
            strides = [1] * self.k
            for c in range(self.k - 2, -1, -1):
                strides[c] = strides[c + 1] * moduli[c + 1]
            self._strides = np.array(strides, dtype=np.int64)
            self.orders: list[int] = (
                np.lcm.reduce(self._mods // np.gcd(self._digits, self._mods), axis=1)
                .tolist()
            )
            self.neg: list[int] = (
                ((self._mods - self._digits) % self._mods) @ self._strides
            ).tolist()
        else:
            self.orders = [1]
            self.neg = [0]
        self._rows: dict[int, list[int]] = {}

    def row(self, x: int) -> list[int]:
        """Translation row: ``row(x)[i]`` is the index of ``e_i + e_x``."""
        row = self._rows.get(x)
        if row is None:
            if self.k:
                row = (
                    ((self._digits + self._digits[x]) % self._mods) @ self._strides
                ).tolist()
            else:
                row = [0]
            self._rows[x] = row
        return row


@lru_cache(maxsize=None)
def _arith(moduli: tuple[int, ...]) -> _Arith:
    return _Arith(moduli)


class ConcreteGroup:
    """The ambient product ``Z_m1 x ... x Z_mk`` with tuple elements.

    The empty moduli tuple is the trivial group (single element ``()``).
    """

    __slots__ = ("moduli",)

    def __init__(self, moduli: Iterable[int] = ()):
        ms = tuple(moduli)
        for m in ms:
            if not isinstance(m, int) or m < 2:
                raise ValueError(f"modulus {m!r} is not an integer >= 2")
        self.moduli = ms

    @classmethod
    def from_type(cls, G: GroupType) -> "ConcreteGroup":
        return cls(G.invariant_factors)

    @property
    def order(self) -> int:
        return prod(self.moduli)

    @property
    def zero(self) -> tuple[int, ...]:
        return (0,) * len(self.moduli)

    def elements(self) -> list[tuple[int, ...]]:
        return list(self._arith.elements)

    @property
    def _arith(self) -> _Arith:
        return _arith(self.moduli)

    def contains(self, g: tuple[int, ...]) -> bool:
        return (
            isinstance(g, tuple)
            and len(g) == len(self.moduli)
            and all(isinstance(c, int) and 0 <= c < m for c, m in zip(g, self.moduli))
        )

    def _require(self, g: tuple[int, ...]) -> None:
        if not self.contains(g):
            raise ValueError(f"{g!r} is not an element of Z_{self.moduli}")

    def add(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        self._require(a)
        self._require(b)
        return tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))

    def neg(self, a: tuple[int, ...]) -> tuple[int, ...]:
        self._require(a)
        return tuple((-x) % m for x, m in zip(a, self.moduli))

    def sub(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        return self.add(a, self.neg(b))

    # Index-level primitives (used by the oracle module as raw material).
    def index_of(self, g: tuple[int, ...]) -> int:
        self._require(g)
        return self._arith.index[g]

    def element_at(self, i: int) -> tuple[int, ...]:
        return self._arith.elements[i]

    def add_row(self, i: int) -> list[int]:
        """Indices of ``e_j + e_i`` for all j."""
        return self._arith.row(i)

    def element_orders(self) -> list[int]:
        return list(self._arith.orders)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ConcreteGroup) and self.moduli == other.moduli

    def __hash__(self) -> int:
        return hash(("ConcreteGroup", self.moduli))

    def __repr__(self) -> str:
        return f"ConcreteGroup({list(self.moduli)!r})"


class Subgroup:
    """A subgroup of a :class:`ConcreteGroup` as a closed element set.

    ``elements`` is the sorted tuple of member tuples and is the identity of
    the subgroup (equality, hashing, deduplication all key on it).
    """

    __slots__ = ("parent", "elements", "generators", "_set", "_type")

    def __init__(
        self,
        parent: ConcreteGroup,
        elements: Sequence[tuple[int, ...]],
        generators: Sequence[tuple[int, ...]] = (),
    ):
        self.parent = parent
        self.elements = tuple(sorted(elements))
        self.generators = tuple(generators)
        self._set: frozenset | None = None
        self._type: GroupType | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def element_set(self) -> frozenset:
        if self._set is None:
            self._set = frozenset(self.elements)
        return self._set

    def __contains__(self, g: tuple[int, ...]) -> bool:
        return g in self.element_set

    @property
    def abstract_type(self) -> GroupType:
        if self._type is None:
            self._type = subgroup_type(self)
        return self._type

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subgroup)
            and self.parent == other.parent
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return hash((self.parent.moduli, self.elements))

    def __repr__(self) -> str:
        return f"<Subgroup of Z_{self.parent.moduli}, order {self.order}>"


def element_order(G: ConcreteGroup, g: tuple[int, ...]) -> int:
    """Order of ``g``: lcm over coordinates of ``m_i / gcd(m_i, g_i)``."""
    G._require(g)
    return lcm(*(m // gcd(m, c) for c, m in zip(g, G.moduli))) if G.moduli else 1


def _translate(mask: int, row: list[int]) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << row[low.bit_length() - 1]
        mask ^= low
    return out


def _orbit_mask(ar: _Arith, x: int) -> int:
    """Bitmask of the cyclic subgroup generated by element ``x``."""
    multiples = (
        np.arange(ar.orders[x], dtype=np.int64)[:, None] * ar._digits[x]
    ) % ar._mods
    flags = np.zeros(ar.n, dtype=np.uint8)
    flags[multiples @ ar._strides] = 1
    return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")


def _close_mask(ar: _Arith, mask: int, x: int) -> int:
    """Close ``mask`` (a subgroup) under the extra generator ``x``:
    the union of the cosets mask + j*x."""
    if (mask >> x) & 1:
        return mask
    if mask == 1:
        return _orbit_mask(ar, x)
    rowx = ar.row(x)
    coset = _translate(mask, rowx)
    closed = mask | coset
    cur = rowx[x]  # 2x
    while not (mask >> cur) & 1:
        coset = _translate(coset, rowx)
        closed |= coset
        cur = rowx[cur]
    return closed


def _mask_indices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@lru_cache(maxsize=None)
def _lattice(moduli: tuple[int, ...]) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All subgroups of the product group, as (element indices, generator
    indices), sorted by (order, element index list)."""
    ar = _arith(moduli)
    n = ar.n
    found: dict[int, tuple[int, ...]] = {1: ()}
    queue = [1]
    head = 0
    while head < len(queue):
        mask = queue[head]
        head += 1
        gens = found[mask]
        covered = mask
        trivial = mask == 1
        for x in range(1, n):
            if (covered >> x) & 1:
                continue
            # cosets of the trivial subgroup are singletons: skip the row
            covered |= (1 << x) if trivial else _translate(mask, ar.row(x))
            closed = _close_mask(ar, mask, x)
            if closed not in found:
                found[closed] = gens + (x,)
                queue.append(closed)
    lattice = [(_mask_indices(mask), gens) for mask, gens in found.items()]
    lattice.sort(key=lambda item: (len(item[0]), item[0]))
    return lattice


def generated_subgroup(
    G: ConcreteGroup, gens: Sequence[tuple[int, ...]]
) -> Subgroup:
    """Least subgroup containing ``gens`` (the trivial subgroup for none)."""
    ar = G._arith
    mask = 1
    for g in gens:
        G._require(g)
        mask = _close_mask(ar, mask, ar.index[g])
    elements = [ar.elements[i] for i in _mask_indices(mask)]
    return Subgroup(G, elements, tuple(gens))


def all_subgroups(G: ConcreteGroup, max_order: int | None = None) -> list[Subgroup]:
    """Every subgroup of ``G``, one entry per distinct element set, sorted by
    (order, element list).  Refuses groups above the lattice bound."""
    _check_lattice_bound(G.order, max_order)
    ar = G._arith
    out = []
    for idxs, gen_idxs in _lattice(G.moduli):
        elements = [ar.elements[i] for i in idxs]
        gens = tuple(ar.elements[i] for i in gen_idxs)
        out.append(Subgroup(G, elements, gens))
    return out


# ---------------------------------------------------------------------------
# Smith normal form


def _validate_matrix(M: IntMatrix) -> list[list[int]]:
    rows = [list(r) for r in M]
    if rows:
        width = len(rows[0])
        for r in rows:
            if len(r) != width:
                raise ValueError("matrix rows have unequal lengths")
            for v in r:
                if not isinstance(v, int):
                    raise ValueError(f"matrix entry {v!r} is not an integer")
    return rows


def _snf(A: list[list[int]], track_cols: bool) -> tuple[list[int], list[list[int]] | None]:
    """In-place Smith reduction.  Returns the diagonal and, if requested, the
    accumulated column-operation matrix C with A_orig @ C column-equivalent
    to the reduced form (kernel generators are C's columns past the rank)."""
    r = len(A)
    c = len(A[0]) if r else 0
    C = [[int(i == j) for j in range(c)] for i in range(c)] if track_cols else None

    def col_swap(j1: int, j2: int) -> None:
        for row in A:
            row[j1], row[j2] = row[j2], row[j1]
        if C is not None:
            for row in C:
                row[j1], row[j2] = row[j2], row[j1]

    def col_addmul(dst: int, src: int, q: int) -> None:
        for row in A:
            row[dst] -= q * row[src]
        if C is not None:
            for row in C:
                row[dst] -= q * row[src]

    t = 0
    while t < r and t < c:
        # pivot: smallest nonzero magnitude in the remaining block
        best = None
        best_abs = None
        for i in range(t, r):
            Ai = A[i]
            for j in range(t, c):
                v = Ai[j]
                if v and (best_abs is None or abs(v) < best_abs):
                    best, best_abs = (i, j), abs(v)
                    if best_abs == 1:
                        break
            if best_abs == 1:
                break
        if best is None:
            break
        i0, j0 = best
        if i0 != t:
            A[i0], A[t] = A[t], A[i0]
        if j0 != t:
            col_swap(j0, t)
        while True:
            if A[t][t] < 0:
                A[t] = [-v for v in A[t]]
            a = A[t][t]
            dirty = False
            for i in range(t + 1, r):
                v = A[i][t]
                if v:
                    q = v // a
                    if q:
                        Ai, At = A[i], A[t]
                        for j in range(t, c):
                            Ai[j] -= q * At[j]
                    if A[i][t]:
                        A[i], A[t] = A[t], A[i]
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, c):
                v = A[t][j]
                if v:
                    q = v // a
                    if q:
                        col_addmul(j, t, q)
                    if A[t][j]:
                        col_swap(j, t)
                        dirty = True
                        break
            if dirty:
                continue
            break
        # pivot must divide everything that remains
        a = A[t][t]
        carrier = None
        for i in range(t + 1, r):
            Ai = A[i]
            for j in range(t + 1, c):
                if Ai[j] % a:
                    carrier = i
                    break
            if carrier is not None:
                break
        if carrier is not None:
            At = A[t]
            Ai = A[carrier]
            for j in range(t, c):
                At[j] += Ai[j]
            continue
        t += 1
    diag = [abs(A[i][i]) for i in range(min(r, c))]
    return diag, C


def smith_normal_form(M: IntMatrix) -> list[int]:
    """Diagonal of the Smith normal form: s_1 | s_2 | ..., nonnegative.

    >>> smith_normal_form([[4, 0], [0, 6]])
    [2, 12]
    """
    rows = _validate_matrix(M)
    diag, _ = _snf(rows, track_cols=False)
    return diag


def _cokernel_type(M: list[list[int]], expected_order: int | None = None) -> GroupType:
    """Type of ``Z^rows / columns(M)``, asserting finiteness."""
    if not M:
        return TRIVIAL_GROUP
    diag, _ = _snf([row[:] for row in M], track_cols=False)
    if len(diag) < len(M) or any(d == 0 for d in diag):
        raise AssertionError("cokernel is infinite: generator matrix not full rank")
    factors = tuple(d for d in diag if d > 1)
    result = GroupType(factors)
    if expected_order is not None and result.order != expected_order:
        raise AssertionError(
            f"cokernel order {result.order} != expected {expected_order}"
        )
    return result


def quotient_type(G: ConcreteGroup, H: Subgroup) -> GroupType:
    """Invariant factors of ``G/H`` via the Smith form of
    ``[diag(m_1..m_k) | generator columns]``."""
    if H.parent != G:
        raise ValueError("subgroup does not belong to the given group")
    k = len(G.moduli)
    if k == 0:
        return TRIVIAL_GROUP
    gens = H.generators or H.elements
    M = [
        [G.moduli[i] if j == i else 0 for j in range(k)] + [g[i] for g in gens]
        for i in range(k)
    ]
    return _cokernel_type(M, expected_order=G.order // H.order)


def type_from_order_statistics(profile: Mapping[int, int]) -> GroupType:
    """The unique abelian type whose element-order profile matches.

    Each p-part partition is rebuilt greedily from the counts of elements of
    order p^k, then the candidate's full profile is verified against the
    input; raises ValueError when no abelian group matches.
    """
    clean = {int(d): int(c) for d, c in profile.items() if c}
    bad = ValueError(f"profile {dict(profile)!r} matches no abelian group")
    if any(d < 1 or c < 0 for d, c in clean.items()):
        raise bad
    total = sum(clean.values())
    if total < 1 or clean.get(1) != 1:
        raise bad
    moduli: list[int] = []
    for p in factorize(total):
        # counts of elements whose order is a pure power of p rebuild the
        # p-part: #{order | p^k} must be p^(sum of min(k, lambda_i))
        pure = {}
        for d, c in clean.items():
            k, m = 0, d
            while m % p == 0:
                m //= p
                k += 1
            if m == 1 and k >= 1:
                pure[k] = c
        if not pure:
            raise bad
        top = max(pure)
        cum = 1
        heights = [0]
        for k in range(1, top + 1):
            cum += pure.get(k, 0)
            c, e = cum, 0
            while c % p == 0:
                c //= p
                e += 1
            if c != 1:
                raise bad
            heights.append(e)
        parts_ge = [heights[j] - heights[j - 1] for j in range(1, top + 1)]
        if any(a < 1 for a in parts_ge) or any(
            parts_ge[j] > parts_ge[j - 1] for j in range(1, top)
        ):
            raise bad
        for i in range(parts_ge[0]):
            lam = sum(1 for a in parts_ge if a > i)
            moduli.append(p**lam)
    candidate = canonicalize(moduli)
    if _type_profile(candidate) != tuple(sorted(clean.items())):
        raise bad
    return candidate


@lru_cache(maxsize=None)
def _type_profile(T: GroupType) -> tuple[tuple[int, int], ...]:
    ar = _arith(T.invariant_factors)
    return tuple(sorted(Counter(ar.orders).items()))


@lru_cache(maxsize=None)
def _type_from_profile_key(key: tuple[tuple[int, int], ...]) -> GroupType:
    return type_from_order_statistics(dict(key))


def subgroup_type(H: Subgroup) -> GroupType:
    """Abstract type of ``H``, reconstructed from its element-order profile."""
    ar = H.parent._arith
    orders = ar.orders
    index = ar.index
    profile = Counter(orders[index[g]] for g in H.elements)
    key = tuple(sorted(profile.items()))
    try:
        return _type_from_profile_key(key)
    except ValueError as exc:  # a closed subgroup always has a valid profile
        raise AssertionError(f"internal error: {exc}") from exc


def subgroup_type_via_snf(H: Subgroup) -> GroupType:
    """Independent route to the abstract type: present H as Z^r modulo the
    kernel of the generator map Z^r -> G."""
    gens = H.generators or H.elements
    gens = [g for g in gens if any(g)]
    r = len(gens)
    if r == 0:
        return TRIVIAL_GROUP
    moduli = H.parent.moduli
    k = len(moduli)
    # kernel of [A | diag(m)] : Z^(r+k) -> Z^k, projected to the first r coords
    T = [[gens[j][i] for j in range(r)] + [moduli[i] if j == i else 0 for j in range(k)]
         for i in range(k)]
    diag, C = _snf(T, track_cols=True)
    rank = sum(1 for d in diag if d)
    assert C is not None
    kernel_cols = [[C[i][j] for i in range(r)] for j in range(rank, r + k)]
    if not kernel_cols:
        raise AssertionError("generator map has no kernel: subgroup not finite?")
    N = [[col[i] for col in kernel_cols] for i in range(r)]
    return _cokernel_type(N, expected_order=H.order)


# ---------------------------------------------------------------------------
# Cached (subgroup type, quotient type) multiset per canonical group type


@lru_cache(maxsize=None)
def _pairs_for_moduli(
    moduli: tuple[int, ...]
) -> tuple[tuple[tuple[GroupType, GroupType], int], ...]:
    ar = _arith(moduli)
    orders = ar.orders
    k = len(moduli)
    counts: Counter = Counter()
    for idxs, gen_idxs in _lattice(moduli):
        profile_key = tuple(sorted(Counter(orders[i] for i in idxs).items()))
        ht = _type_from_profile_key(profile_key)
        if k == 0:
            qt = TRIVIAL_GROUP
        else:
            gens = [ar.elements[i] for i in gen_idxs]
            M = [
                [moduli[i] if j == i else 0 for j in range(k)]
                + [g[i] for g in gens]
                for i in range(k)
            ]
            qt = _cokernel_type(M, expected_order=ar.n // len(idxs))
        counts[(ht, qt)] += 1
    return tuple(counts.items())


def subgroup_quotient_pairs(
    T: GroupType, max_order: int | None = None
) -> dict[tuple[GroupType, GroupType], int]:
    """Multiset of (subgroup type, quotient type) over all subgroups of a
    concrete model of ``T``; the workhorse behind convolution sums."""
    _check_lattice_bound(T.order, max_order)
    return dict(_pairs_for_moduli(T.invariant_factors))
