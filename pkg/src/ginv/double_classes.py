"""Commuting pairs up to simultaneous conjugation, and the S_n closed form.

A double class is an orbit of a commuting pair (f, g) under
h.(f, g) = (h f h^-1, h g h^-1).  Orbits are indexed through centralisers:
(f, g) is conjugated so that f becomes its class representative a, and then
g is classified among the conjugacy classes of C_G(a).  Double class
``offsets[c] + l`` is the pair (a_c, class l of C_G(a_c)), and its canonical
representative is the least pair in lexicographic element order.
"""
from __future__ import annotations

import weakref
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product as iproduct
from math import gcd, lcm
from typing import NamedTuple

import numpy as np

from .group import Group, centralizer
from .perm import Perm

__all__ = [
    "DoubleClassData",
    "double_classes",
    "Block",
    "FactorizedPartition",
    "sn_double_class_invariant",
    "sn_enumerate_factorized_partitions",
    "sn_representative",
]


@dataclass(frozen=True, eq=False)
class DoubleClassData:
    group: Group
    centralizers: tuple[Group, ...] = field(repr=False)
    offsets: np.ndarray
    reps: np.ndarray
    sizes: np.ndarray

    @property
    def count(self) -> int:
        return int(self.reps.shape[0])

    def class_of_pair(self, f, g) -> np.ndarray:
        """Double-class index of commuting pairs (broadcasting); ValueError if some pair does not commute."""
        G = self.group
        f, g = np.broadcast_arrays(np.asarray(f, dtype=np.int64), np.asarray(g, dtype=np.int64))
        cl = G.classes
        c = cl.class_of[f]
        g2 = G.conj(cl.conjugator[f], g)  # lies in C(a_c) iff f and g commute
        out = np.empty(f.shape, dtype=np.int64)
        for cc in np.unique(c):
            sel = c == cc
            H = self.centralizers[cc]
            x = g2[sel]
            loc = np.minimum(np.searchsorted(H.ambient, x), H.order - 1)
            if not np.array_equal(H.ambient[loc], x):
                raise ValueError("pair does not commute")
            out[sel] = self.offsets[cc] + H.classes.class_of[loc]
        return out

    @cached_property
    def inverse_dclass(self) -> np.ndarray:
        inv = self.group.inv
        return self.class_of_pair(inv[self.reps[:, 0]], inv[self.reps[:, 1]])

    @cached_property
    def pairs(self) -> np.ndarray:
        """All commuting pairs (f, g), sorted lexicographically."""
        G = self.group
        cl = G.classes
        chunks = []
        for c, H in enumerate(self.centralizers):
            F = cl.members(c)
            tinv = G.inv[cl.conjugator[F]]
            # C(f) = t^-1 C(a) t  when  t f t^-1 = a
            gs = G.conj(tinv[:, None], H.ambient[None, :])
            chunks.append(np.stack([np.repeat(F, H.order), gs.ravel()], axis=1))
        P = np.concatenate(chunks)
        return P[np.lexsort((P[:, 1], P[:, 0]))]

    @cached_property
    def class_of_all_pairs(self) -> np.ndarray:
        P = self.pairs
        return self.class_of_pair(P[:, 0], P[:, 1])


_CACHE: "weakref.WeakKeyDictionary[Group, DoubleClassData]" = weakref.WeakKeyDictionary()


def double_classes(G: Group) -> DoubleClassData:
    dc = _CACHE.get(G)
    if dc is not None:
        return dc
    cl = G.classes
    cents = tuple(centralizer(G, int(a)) for a in cl.reps)
    counts = np.array([H.classes.count for H in cents], dtype=np.int64)
    offsets = np.concatenate([[0], np.cumsum(counts)])
    reps, sizes = [], []
    for c, H in enumerate(cents):
        hc = H.classes
        reps.append(np.stack([np.full(hc.count, cl.reps[c]), H.ambient[hc.reps]], axis=1))
        sizes.append(cl.sizes[c] * hc.sizes)
    dc = DoubleClassData(G, cents, offsets, np.concatenate(reps), np.concatenate(sizes))
    _CACHE[G] = dc
    return dc


# --- symmetric groups: factorised partitions --------------------------------

class Block(NamedTuple):
    """One <sigma, pi>-orbit: size n_sigma * n_mid * n_pi with unit a mod n_mid."""

    n_sigma: int
    n_mid: int
    n_pi: int
    a: int

    @property
    def size(self) -> int:
        return self.n_sigma * self.n_mid * self.n_pi

    def key(self) -> tuple[int, int, int, int, int]:
        return (self.size, self.n_sigma, self.n_mid, self.n_pi, self.a)

    def __str__(self) -> str:
        s = f"{self.n_sigma}*{self.n_mid}*{self.n_pi}"
        return s + (f"[a={self.a}]" if self.n_mid > 2 else "")


@dataclass(frozen=True)
class FactorizedPartition:
    blocks: tuple[Block, ...]

    def __post_init__(self):
        for b in self.blocks:
            if min(b.n_sigma, b.n_mid, b.n_pi) < 1 or not 1 <= b.a <= b.n_mid:
                raise ValueError(f"invalid block {b}")
            if gcd(b.a, b.n_mid) != 1:
                raise ValueError(f"{b.a} is not a unit mod {b.n_mid}")
        ordered = tuple(sorted(self.blocks, key=Block.key, reverse=True))
        object.__setattr__(self, "blocks", ordered)

    @property
    def n(self) -> int:
        return sum(b.size for b in self.blocks)

    def key(self) -> tuple:
        return tuple(b.key() for b in self.blocks)

    def __lt__(self, other: "FactorizedPartition") -> bool:
        return self.key() < other.key()

    def __str__(self) -> str:
        return " + ".join(str(b) for b in self.blocks)


def _restricted_order(p: Perm, orbit: list[int]) -> int:
    seen, lengths = set(), []
    for x in orbit:
        if x in seen:
            continue
        n, y = 0, x
        while True:
            seen.add(y)
            n += 1
            y = p.images[y]
            if y == x:
                break
        lengths.append(n)
    return lcm(*lengths)


def _power_on(p: Perm, k: int, orbit: list[int]) -> tuple[int, ...]:
    out = []
    for x in orbit:
        for _ in range(k):
            x = p.images[x]
        out.append(x)
    return tuple(out)


def sn_double_class_invariant(n: int, sigma: Perm, pi: Perm) -> FactorizedPartition:
    """Factorised partition of a commuting pair of permutations of n points."""
    if sigma.degree != n or pi.degree != n:
        raise ValueError("degree mismatch")
    if sigma * pi != pi * sigma:
        raise ValueError("sigma and pi do not commute")
    comp = list(range(n))

    def find(x):
        while comp[x] != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        return x

    for p in (sigma, pi):
        for x in range(n):
            rx, ry = find(x), find(p.images[x])
            if rx != ry:
                comp[max(rx, ry)] = min(rx, ry)
    orbits: dict[int, list[int]] = {}
    for x in range(n):
        orbits.setdefault(find(x), []).append(x)

    blocks = []
    for orb in orbits.values():
        ms, mp = _restricted_order(sigma, orb), _restricted_order(pi, orb)
        mid, rem = divmod(ms * mp, len(orb))
        if rem:
            raise AssertionError("orbit is not a regular abelian orbit")  # pragma: no cover
        ns, np_ = ms // mid, mp // mid
        a = 1
        if mid > 1:
            target = _power_on(pi, np_, orb)
            a = next(a for a in range(1, mid) if gcd(a, mid) == 1
                     and _power_on(sigma, ns * a, orb) == target)
        blocks.append(Block(ns, mid, np_, a))
    return FactorizedPartition(tuple(blocks))


def _block_types(n: int) -> list[Block]:
    types = []
    for s in range(1, n + 1):
        for x, y in iproduct(range(1, s + 1), repeat=2):
            if s % (x * y):
                continue
            z = s // (x * y)
            for a in range(1, y + 1):
                if gcd(a, y) == 1:
                    types.append(Block(x, y, z, a))
    return sorted(set(types), key=Block.key)


def sn_enumerate_factorized_partitions(n: int) -> list[FactorizedPartition]:
    """All factorised partitions of n, in ascending canonical order."""
    if n < 1:
        raise ValueError("n must be positive")
    types = _block_types(n)
    out = []

    def rec(remaining, max_t, chosen):
        if remaining == 0:
            out.append(FactorizedPartition(tuple(chosen)))
            return
        for t in range(max_t, -1, -1):
            b = types[t]
            if b.size <= remaining:
                chosen.append(b)
                rec(remaining - b.size, t, chosen)
                chosen.pop()

    rec(n, len(types) - 1, [])
    return sorted(out)


def sn_representative(fp: FactorizedPartition) -> tuple[Perm, Perm]:
    """A commuting pair (sigma, pi) of permutations of fp.n points with invariant fp.

    Each block gets the points (i, j), 0 <= i < m_sigma, 0 <= j < n_pi.
    sigma adds 1 to i; pi adds 1 to j, wrapping (i, n_pi - 1) to (i + n_sigma a, 0).
    """
    sigma, pi = [], []
    start = 0
    for b in fp.blocks:
        ms = b.n_sigma * b.n_mid
        for i in range(ms):
            for j in range(b.n_pi):
                sigma.append(start + ((i + 1) % ms) * b.n_pi + j)
                if j + 1 < b.n_pi:
                    pi.append(start + i * b.n_pi + j + 1)
                else:
                    pi.append(start + ((i + b.n_sigma * b.a) % ms) * b.n_pi)
        start += ms * b.n_pi
    return Perm(sigma), Perm(pi)
