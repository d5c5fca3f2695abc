"""Canonical isomorphism types of finite abelian groups.

A type is named by its invariant factors: the unique chain
d_1 | d_2 | ... | d_n with every d_i >= 2.  The empty chain is the trivial
group.  ``GroupType`` values are immutable and hashable, which makes them
usable as memoization keys throughout the library.

>>> canonicalize([6, 4])
GroupType(invariant_factors=(2, 12))
>>> canonicalize([1, 1]).is_trivial
True
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import prod
from typing import Iterable, Iterator

__all__ = [
    "GroupType",
    "PrimaryDecomposition",
    "TRIVIAL_GROUP",
    "canonicalize",
    "cyclic",
    "product",
    "primary",
    "from_primary",
    "primary_parts",
    "is_elementary",
    "dim_p",
    "min_generators",
    "is_prime",
    "factorize",
    "types_of_order",
    "types_up_to",
    "parse_group_spec",
]


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * limit
    flags[0:2] = b"\x00\x00"
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [i for i in range(limit) if flags[i]]


# Covers full factorization of every n <= 10^6; larger inputs fall back to
# plain trial division below.
_SMALL_PRIMES = _sieve(1000)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division, ``{prime: exponent}``."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}: expected a positive integer")
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n > 1:
        p = _SMALL_PRIMES[-1] + 2
        while p * p <= n:
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
            p += 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return dict(sorted(out.items()))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return factorize(n) == {n: 1}


@dataclass(frozen=True)
class GroupType:
    """A finite abelian group up to isomorphism, as its invariant factors.

    The factor chain is validated at construction; use :func:`canonicalize`
    to build a type from an arbitrary list of cyclic moduli.
    """

    invariant_factors: tuple[int, ...]

    def __post_init__(self) -> None:
        fs = self.invariant_factors
        if not isinstance(fs, tuple):
            raise ValueError("invariant_factors must be a tuple")
        for d in fs:
            if not isinstance(d, int) or d < 2:
                raise ValueError(f"invariant factor {d!r} is not an integer >= 2")
        for a, b in itertools.pairwise(fs):
            if b % a != 0:
                raise ValueError(f"{fs} is not a divisibility chain: {a} does not divide {b}")

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    @property
    def is_cyclic(self) -> bool:
        return len(self.invariant_factors) <= 1

    def __str__(self) -> str:
        if self.is_trivial:
            return "1"
        return ",".join(str(d) for d in self.invariant_factors)


TRIVIAL_GROUP = GroupType(())


def canonicalize(moduli: Iterable[int]) -> GroupType:
    """Invariant-factor form of ``Z_m1 x ... x Z_mk``.

    Factors of 1 are dropped; the result satisfies the divisibility chain.

    >>> str(canonicalize([6, 4]))
    '2,12'
    >>> canonicalize([3, 5]) == canonicalize([15])
    True
    """
    exps: dict[int, list[int]] = {}
    for m in moduli:
        if not isinstance(m, int) or m < 1:
            raise ValueError(f"modulus {m!r} is not an integer >= 1")
        for p, e in factorize(m).items():
            exps.setdefault(p, []).append(e)
    for parts in exps.values():
        parts.sort(reverse=True)
    depth = max((len(parts) for parts in exps.values()), default=0)
    factors = []
    for i in range(depth):
        d = prod(p ** parts[i] for p, parts in exps.items() if i < len(parts))
        factors.append(d)
    factors.reverse()
    return GroupType(tuple(factors))


def cyclic(n: int) -> GroupType:
    return canonicalize([n])


def product(a: GroupType, b: GroupType) -> GroupType:
    """Canonical type of the direct product ``a x b``."""
    return canonicalize(a.invariant_factors + b.invariant_factors)


@dataclass(frozen=True)
class PrimaryDecomposition:
    """Per-prime exponent partitions of the p-Sylow components.

    ``components`` pairs each prime p with the partition of exponents
    (descending) of its cyclic p-power factors.  Every partition is nonempty.
    """

    components: tuple[tuple[int, tuple[int, ...]], ...]

    def as_dict(self) -> dict[int, tuple[int, ...]]:
        return dict(self.components)


def primary(G: GroupType) -> PrimaryDecomposition:
    """Split a type into its p-parts.

    >>> primary(canonicalize([2, 12])).as_dict()
    {2: (2, 1), 3: (1,)}
    """
    exps: dict[int, list[int]] = {}
    for d in G.invariant_factors:
        for p, e in factorize(d).items():
            exps.setdefault(p, []).append(e)
    comps = tuple(
        (p, tuple(sorted(parts, reverse=True))) for p, parts in sorted(exps.items())
    )
    return PrimaryDecomposition(comps)


def from_primary(pd: PrimaryDecomposition) -> GroupType:
    """Inverse of :func:`primary`; round-trips exactly."""
    moduli = [p**e for p, parts in pd.components for e in parts]
    return canonicalize(moduli)


def primary_parts(G: GroupType) -> tuple[GroupType, ...]:
    """The p-group types whose product is ``G``, one per prime, ascending."""
    parts = []
    for p, exps in primary(G).components:
        parts.append(canonicalize([p**e for e in exps]))
    return tuple(parts)


def is_elementary(G: GroupType) -> bool:
    """True iff every p-part is a vector space over F_p (all exponents 1),
    equivalently iff every invariant factor is squarefree."""
    return all(
        all(e == 1 for e in factorize(d).values()) for d in G.invariant_factors
    )


def dim_p(G: GroupType, p: int) -> int:
    """Number of parts of the exponent partition at ``p`` (the F_p-dimension
    when the p-part is elementary)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return sum(1 for d in G.invariant_factors if d % p == 0)


def min_generators(G: GroupType) -> int:
    """Minimal size of a generating set: the number of invariant factors."""
    return len(G.invariant_factors)


@lru_cache(maxsize=None)
def _partitions(n: int) -> tuple[tuple[int, ...], ...]:
    """All descending partitions of n, in deterministic order."""
    if n == 0:
        return ((),)
    out = []

    def rec(remaining: int, cap: int, acc: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(acc)
            return
        for first in range(min(cap, remaining), 0, -1):
            rec(remaining - first, first, acc + (first,))

    rec(n, n, ())
    return tuple(out)


def types_of_order(n: int) -> list[GroupType]:
    """All abelian types of order ``n``, sorted by invariant-factor tuple."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if n == 1:
        return [TRIVIAL_GROUP]
    per_prime = [
        [(p, lam) for lam in _partitions(e)] for p, e in factorize(n).items()
    ]
    types = []
    for combo in itertools.product(*per_prime):
        types.append(from_primary(PrimaryDecomposition(tuple(combo))))
    types.sort(key=lambda t: t.invariant_factors)
    return types


def types_up_to(n: int) -> Iterator[GroupType]:
    """All abelian types of order <= n, ordered by (order, factors)."""
    for k in range(1, n + 1):
        yield from types_of_order(k)


def parse_group_spec(text: str) -> GroupType:
    """Parse the comma-separated group format, e.g. ``"2,2,4"``.

    Moduli of 1 are legal and dropped ("1" is the trivial group).
    """
    pieces = text.split(",")
    try:
        moduli = [int(piece) for piece in pieces]
    except ValueError:
        raise ValueError(f"bad group spec {text!r}: expected comma-separated integers") from None
    if any(m < 1 for m in moduli):
        raise ValueError(f"bad group spec {text!r}: moduli must be >= 1")
    return canonicalize(moduli)
