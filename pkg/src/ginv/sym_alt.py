"""Closed forms for symmetric and alternating groups.

An S_n class of even permutations splits into two A_n classes exactly when
its cycle type has distinct odd parts.  For such a type, an element is
conjugate to its inverse inside A_n iff sum (n_i - 1)/2 is even.  Whether
A_n has a class-inverting automorphism then depends only on the parities
over all splitting types of n.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .perm import Perm

__all__ = [
    "CycleType",
    "Classification",
    "splits_in_alternating",
    "an_self_inverse_parity",
    "splitting_types",
    "an_classification",
    "an_phi_automorphism",
]


@dataclass(frozen=True)
class CycleType:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if not parts or any(p < 1 for p in parts):
            raise ValueError("cycle type needs positive parts")
        object.__setattr__(self, "parts", tuple(sorted(parts, reverse=True)))

    @classmethod
    def of(cls, p: Perm) -> "CycleType":
        return cls(p.cycle_type())

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def is_even(self) -> bool:
        return sum(p - 1 for p in self.parts) % 2 == 0

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


class Classification(str, enum.Enum):
    IDENTITY = "IdentityInverting"
    PHI = "PhiInverting"
    NONE = "NoInverting"


def splits_in_alternating(t: CycleType) -> bool:
    """True iff the S_n class of type t is a union of two A_n classes."""
    if not t.is_even:
        raise ValueError(f"{t} is the type of an odd permutation")
    return all(p % 2 for p in t.parts) and len(set(t.parts)) == len(t.parts)


def an_self_inverse_parity(t: CycleType) -> bool:
    """For a splitting type: True iff its elements are A_n-conjugate to their inverses."""
    if not splits_in_alternating(t):
        raise ValueError(f"{t} does not split in the alternating group")
    return sum((p - 1) // 2 for p in t.parts) % 2 == 0


@lru_cache(maxsize=None)
def _distinct_odd(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    top = min(n, largest)
    for p in range(top if top % 2 else top - 1, 0, -2):
        out.extend((p,) + rest for rest in _distinct_odd(n - p, p - 2))
    return tuple(out)


def splitting_types(n: int) -> list[CycleType]:
    """Cycle types of n with distinct odd parts, in reverse lexicographic order."""
    if n < 1:
        raise ValueError("n must be positive")
    return [CycleType(p) for p in _distinct_odd(n, n)]


def an_classification(n: int, *, consult_search: bool = True) -> Classification:
    """Which automorphism of A_n, if any, is class-inverting.

    For n = 6 the automorphism group is not generated by conjugation with S_n,
    so the generic search decides instead of the parity rule (unless
    ``consult_search`` is False).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n == 6 and consult_search:
        return _search_classification(n)
    parities = [an_self_inverse_parity(t) for t in splitting_types(n)]
    if all(parities):
        return Classification.IDENTITY
    if not any(parities):
        return Classification.PHI
    return Classification.NONE


def _search_classification(n: int) -> Classification:
    from .automorphisms import exists_class_inverting, is_ambivalent
    from .catalog import GroupSpec, build

    G = build(GroupSpec("alternating", (n,)))
    if is_ambivalent(G):
        return Classification.IDENTITY
    return Classification.PHI if exists_class_inverting(G) is not None else Classification.NONE


def an_phi_automorphism(G, n: int):
    """Conjugation by the transposition (1 2) on A_n (n >= 2) given as a Group."""
    from .automorphisms import automorphism_from_images

    t = Perm.from_cycles([[0, 1]], n)
    images = [G.index_of(t * g * t) for g in G.generators]
    return automorphism_from_images(G, images)
