"""Automorphism search and the (double) class-inverting predicates.

Automorphisms are found by backtracking over generator images.  Candidates
for a generator must match its order and class size; each new image is then
checked against every earlier one (order and class size of the product,
commutation, and in the inverting modes the inverse class or inverse double
class of the product).  Relators of an attached presentation prune as soon as
all their letters are assigned.  A leaf is accepted only after the images
extend to a map that is multiplicative on every Cayley-graph edge and has
trivial kernel, so a relator set is never trusted to be complete.

Exhausting the node budget raises ``SearchBudgetExceeded``; "none found" is
only ever reported after the pruned space was searched completely.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import _accel
from .double_classes import double_classes
from .group import Group, parse_relator

__all__ = [
    "Automorphism",
    "SearchResult",
    "SearchBudgetExceeded",
    "DEFAULT_BUDGET",
    "FREE_ORDER_CAP",
    "identity_automorphism",
    "inversion_automorphism",
    "automorphism_from_images",
    "extend_images",
    "check_multiplicative",
    "search_automorphisms",
    "automorphism_group",
    "inner_automorphisms",
    "is_class_inverting",
    "is_class_preserving",
    "is_double_class_inverting",
    "is_double_class_preserving",
    "find_class_inverting",
    "find_double_class_inverting",
    "exists_class_inverting",
    "exists_double_class_inverting",
    "is_ambivalent",
    "is_doubly_ambivalent",
]

DEFAULT_BUDGET = 1_000_000
FREE_ORDER_CAP = 2000

MODES = ("any", "class_inverting", "double_class_inverting")


class SearchBudgetExceeded(RuntimeError):
    def __init__(self, nodes: int, budget: int):
        super().__init__(f"automorphism search exceeded its budget of {budget} nodes")
        self.nodes = nodes
        self.budget = budget


@dataclass(frozen=True, eq=False)
class Automorphism:
    group: Group = field(repr=False)
    gen_images: tuple[int, ...]
    full_map: np.ndarray = field(repr=False)

    def __call__(self, x):
        return self.full_map[x]

    def compose(self, other: "Automorphism") -> "Automorphism":
        """x -> self(other(x))."""
        fm = self.full_map[other.full_map]
        return Automorphism(self.group, tuple(int(v) for v in fm[self.group.gen_indices]), fm)

    def inverse(self) -> "Automorphism":
        fm = np.empty_like(self.full_map)
        fm[self.full_map] = np.arange(fm.size)
        return Automorphism(self.group, tuple(int(v) for v in fm[self.group.gen_indices]), fm)

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.full_map, np.arange(self.full_map.size)))

    def describe(self) -> list[str]:
        """Generator images in cycle notation."""
        return [str(self.group.element(i)) for i in self.gen_images]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Automorphism):
            return NotImplemented
        return other.group is self.group and np.array_equal(self.full_map, other.full_map)

    def __hash__(self) -> int:
        return hash(self.full_map.tobytes())

    def __repr__(self) -> str:
        return f"Automorphism({', '.join(self.describe())})"


@dataclass(frozen=True)
class SearchResult:
    mode: str
    automorphisms: tuple[Automorphism, ...]
    nodes: int

    @property
    def witness(self) -> Automorphism | None:
        return self.automorphisms[0] if self.automorphisms else None


# --- building maps ----------------------------------------------------------

def extend_images(G: Group, images: Sequence[int]) -> tuple[np.ndarray, bool]:
    """Extend generator images along the spanning tree; ok iff the result is a homomorphism."""
    img = np.asarray(images, dtype=np.int64)
    if G.order == 1:
        return np.zeros(1, dtype=np.int64), True
    T = G.table
    if T is not None:
        return _accel.extend_hom(G.levels, G.parent, G.gen_of, T, img, G.rmul)
    # no Cayley table: carry image permutations as rows, look them up once
    ip = G.perms[img]
    rows = np.empty_like(G.perms)
    rows[0] = np.arange(G.degree)
    for lvl in G.levels[1:]:
        rows[lvl] = np.take_along_axis(ip[G.gen_of[lvl]], rows[G.parent[lvl]], axis=1)
    for g in range(img.size):
        if not np.array_equal(rows[G.rmul[g]], ip[g][rows]):
            return np.zeros(G.order, dtype=np.int64), False
    return G.lookup(rows, verify=False).astype(np.int64), True


def _make(G: Group, images) -> Automorphism | None:
    phi, ok = extend_images(G, images)
    if not ok or np.count_nonzero(phi == 0) != 1:
        return None
    return Automorphism(G, tuple(int(x) for x in images), phi)


def automorphism_from_images(G: Group, images: Sequence[int]) -> Automorphism:
    """The automorphism sending generator i to element ``images[i]``; ValueError if none."""
    if len(images) != len(G.generators):
        raise ValueError("need one image per generator")
    phi = _make(G, images)
    if phi is None:
        raise ValueError("generator images do not define an automorphism")
    return phi


def identity_automorphism(G: Group) -> Automorphism:
    return Automorphism(G, tuple(int(x) for x in G.gen_indices), np.arange(G.order))


def inversion_automorphism(G: Group) -> Automorphism:
    if not G.is_abelian:
        raise ValueError("inversion is an automorphism only for abelian groups")
    inv = G.inv.astype(np.int64)
    return Automorphism(G, tuple(int(x) for x in inv[G.gen_indices]), inv)


def check_multiplicative(G: Group, phi: Automorphism, *, exhaustive_limit: int = FREE_ORDER_CAP,
                         samples: int = 100_000, seed: int = 0) -> bool:
    """phi(xy) == phi(x) phi(y): on all pairs up to the limit, on random pairs above it."""
    fm = phi.full_map
    if G.order <= exhaustive_limit:
        x = np.arange(G.order)
        for start in range(0, G.order, 256):
            a = x[start:start + 256, None]
            if not np.array_equal(fm[G.mul(a, x[None, :])], G.mul(fm[a], fm[x][None, :])):
                return False
        return True
    rng = np.random.default_rng(seed)
    a = rng.integers(0, G.order, samples)
    b = rng.integers(0, G.order, samples)
    return bool(np.array_equal(fm[G.mul(a, b)], G.mul(fm[a], fm[b])))


# --- predicates -------------------------------------------------------------

def is_class_inverting(G: Group, phi: Automorphism) -> bool:
    cl = G.classes
    return bool(np.array_equal(cl.class_of[phi.full_map[cl.reps]], cl.inverse_class))


def is_class_preserving(G: Group, phi: Automorphism) -> bool:
    cl = G.classes
    return bool(np.array_equal(cl.class_of[phi.full_map[cl.reps]], np.arange(cl.count)))


def _dclass_images(G: Group, phi: Automorphism) -> tuple[np.ndarray, "object"]:
    dc = double_classes(G)
    fm = phi.full_map
    return dc.class_of_pair(fm[dc.reps[:, 0]], fm[dc.reps[:, 1]]), dc


def is_double_class_inverting(G: Group, phi: Automorphism) -> bool:
    img, dc = _dclass_images(G, phi)
    return bool(np.array_equal(img, dc.inverse_dclass))


def is_double_class_preserving(G: Group, phi: Automorphism) -> bool:
    img, dc = _dclass_images(G, phi)
    return bool(np.array_equal(img, np.arange(dc.count)))


def is_ambivalent(G: Group) -> bool:
    return is_class_inverting(G, identity_automorphism(G))


def is_doubly_ambivalent(G: Group) -> bool:
    return is_double_class_inverting(G, identity_automorphism(G))


# --- search -----------------------------------------------------------------

def search_automorphisms(
    G: Group,
    mode: str = "any",
    *,
    first_only: bool = False,
    budget: int = DEFAULT_BUDGET,
    free_order_cap: int = FREE_ORDER_CAP,
) -> SearchResult:
    """Backtracking search over generator images.

    ``mode`` restricts the result to all automorphisms, the class-inverting
    ones, or the double class-inverting ones.  Results come in lexicographic
    order of generator images; ``first_only`` stops at the least one.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if G.presentation is None and G.order > free_order_cap:
        raise ValueError(f"group of order {G.order} has no presentation and exceeds the "
                         f"presentation-free search cap {free_order_cap}")
    inverting = mode != "any"
    accept = {
        "any": lambda phi: True,
        "class_inverting": lambda phi: is_class_inverting(G, phi),
        "double_class_inverting": lambda phi: is_double_class_inverting(G, phi),
    }[mode]

    gidx = [int(x) for x in G.gen_indices]
    k = len(gidx)
    if k == 0:
        phi = identity_automorphism(G)
        return SearchResult(mode, (phi,) if accept(phi) else (), 1)

    cl = G.classes
    cls = cl.class_of
    csize = cl.sizes[cls]
    orders = G.orders
    inv_cls = cl.inverse_class
    dc = double_classes(G) if mode == "double_class_inverting" else None

    base = []
    for s in gidx:
        mask = (orders == orders[s]) & (csize == csize[s])
        if inverting:
            mask &= cls == inv_cls[cls[s]]
        base.append(np.flatnonzero(mask))
    dup = [next((j for j in range(t) if gidx[j] == gidx[t]), None) for t in range(k)]

    # pair targets for j < t
    pairs = {}
    for t in range(k):
        for j in range(t):
            if dup[j] is not None:
                continue
            a, b = gidx[j], gidx[t]
            w = int(G.mul(a, b))
            commute = w == int(G.mul(b, a))
            target = int(dc.inverse_dclass[dc.class_of_pair(a, b)]) if dc is not None and commute else None
            pairs[j, t] = (w, commute, target)

    rel_at: list[list] = [[] for _ in range(k)]
    for rel in G.presentation or ():
        word = parse_relator(rel)
        if word:
            rel_at[max(i for i, _ in word)].append(word)

    img = np.zeros(k, dtype=np.int64)
    found: list[Automorphism] = []
    nodes = 0

    def candidates(t: int) -> np.ndarray:
        C = base[t] if dup[t] is None else np.array([img[dup[t]]], dtype=np.int64)
        for j in range(t):
            if (j, t) not in pairs or C.size == 0:
                continue
            w, commute, target = pairs[j, t]
            a = img[j]
            P = G.mul(a, C)
            keep = (orders[P] == orders[w]) & (csize[P] == csize[w])
            keep &= (P == G.mul(C, a)) == commute
            if inverting:
                keep &= cls[P] == inv_cls[cls[w]]
            C = C[keep]
            if target is not None and C.size:
                C = C[dc.class_of_pair(a, C) == target]
        for word in rel_at[t]:
            if C.size == 0:
                break
            images = [img[i] for i in range(t)] + [C] + [0] * (k - t - 1)
            C = C[G.evaluate(word, images) == 0]
        return C

    def rec(t: int) -> bool:
        nonlocal nodes
        if t == k:
            phi = _make(G, img)
            if phi is not None and accept(phi):
                found.append(phi)
                return True
            return False
        for c in candidates(t):
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(nodes, budget)
            img[t] = c
            if rec(t + 1) and first_only:
                return True
        return False

    rec(0)
    return SearchResult(mode, tuple(found), nodes)


def automorphism_group(G: Group, *, budget: int = DEFAULT_BUDGET,
                       free_order_cap: int = FREE_ORDER_CAP) -> list[Automorphism]:
    return list(search_automorphisms(G, "any", budget=budget,
                                     free_order_cap=free_order_cap).automorphisms)


def inner_automorphisms(G: Group) -> list[Automorphism]:
    """One conjugation map x -> g x g^-1 per coset of the centre, in order of least coset element."""
    covered = np.zeros(G.order, dtype=bool)
    x = np.arange(G.order)
    out = []
    for g in range(G.order):
        if covered[g]:
            continue
        covered[G.mul(g, G.center)] = True
        fm = G.conj(g, x).astype(np.int64)
        out.append(Automorphism(G, tuple(int(v) for v in fm[G.gen_indices]), fm))
    return out


def find_class_inverting(G: Group, *, budget: int = DEFAULT_BUDGET,
                         free_order_cap: int = FREE_ORDER_CAP) -> SearchResult:
    return search_automorphisms(G, "class_inverting", first_only=True, budget=budget,
                                free_order_cap=free_order_cap)


def find_double_class_inverting(G: Group, *, budget: int = DEFAULT_BUDGET,
                                free_order_cap: int = FREE_ORDER_CAP) -> SearchResult:
    return search_automorphisms(G, "double_class_inverting", first_only=True, budget=budget,
                                free_order_cap=free_order_cap)


def exists_class_inverting(G: Group, **kw) -> Automorphism | None:
    return find_class_inverting(G, **kw).witness


def exists_double_class_inverting(G: Group, **kw) -> Automorphism | None:
    return find_double_class_inverting(G, **kw).witness
