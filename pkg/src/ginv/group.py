"""Finite permutation groups stored by full element enumeration.

Every element gets an index.  Index 0 is the identity and the rest follow
breadth-first discovery order from the generators (``x * s`` for each
frontier element ``x`` and each generator ``s`` in order).  Everything
downstream works on index arrays: ``G.mul(a, b)`` multiplies elementwise and
broadcasts, and uses a full Cayley table when ``|G| <= table_cap``.
"""
from __future__ import annotations

import copy
import string
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from . import _accel
from .perm import Perm

__all__ = [
    "GroupTooLarge",
    "Group",
    "ClassData",
    "generate_group",
    "conjugacy_classes",
    "centralizer",
    "normalizer",
    "subgroup",
    "element_order",
    "parse_relator",
    "DEFAULT_MAX_ORDER",
    "DEFAULT_TABLE_CAP",
]

DEFAULT_MAX_ORDER = 20_000
DEFAULT_TABLE_CAP = 2520


class GroupTooLarge(ValueError):
    """Closure exceeded the configured element cap."""

    def __init__(self, cap: int):
        super().__init__(f"group has more than {cap} elements (element cap {cap})")
        self.cap = cap


def parse_relator(word: str) -> list[tuple[int, int]]:
    """``"abAB"`` -> [(0, 1), (1, 1), (0, -1), (1, -1)]; uppercase is the inverse."""
    out = []
    for ch in word:
        if ch.islower():
            out.append((string.ascii_lowercase.index(ch), 1))
        elif ch.isupper():
            out.append((string.ascii_uppercase.index(ch), -1))
        else:
            raise ValueError(f"bad relator letter {ch!r} in {word!r}")
    return out


class _PermIndex:
    """Exact lookup of permutation rows.

    If the images of a few base points already separate all elements, rows
    are addressed directly through a dense mixed-radix table on those images.
    Otherwise a 64-bit hash with sorted search is used.  Either way the found
    rows are compared in full unless the caller knows they lie in the group.
    """

    DENSE_LIMIT = 1 << 22

    def __init__(self, perms: np.ndarray):
        self.perms = perms
        self.base = None
        if self._try_base(perms):
            return
        d = perms.shape[1]
        for seed in range(16):
            rng = np.random.default_rng(0x5EED + seed)
            w = rng.integers(1, 2**62, size=d, dtype=np.uint64) * np.uint64(2) + np.uint64(1)
            keys = self._hash(perms, w)
            order = np.argsort(keys, kind="stable")
            sk = keys[order]
            if not np.any(sk[1:] == sk[:-1]):
                self.weights, self.order, self.keys = w, order, sk
                return
        raise RuntimeError("could not find a collision-free hash")  # pragma: no cover

    @staticmethod
    def _hash(rows, w):
        with np.errstate(over="ignore"):
            return (rows.astype(np.uint64) * w).sum(axis=-1, dtype=np.uint64)

    def _try_base(self, perms: np.ndarray) -> bool:
        N, d = perms.shape
        base: list[int] = []
        key = np.zeros(N, dtype=np.int64)
        size = 1
        distinct = 1
        for pt in range(d):
            if distinct == N:
                break
            if size * d > self.DENSE_LIMIT:
                return False
            trial = key * d + perms[:, pt]
            n_trial = np.unique(trial).size
            if n_trial > distinct:
                base.append(pt)
                key, size, distinct = trial, size * d, n_trial
        if distinct != N:
            return False
        slot = np.full(size, -1, dtype=np.int64)
        slot[key] = np.arange(N)
        self.base = np.array(base, dtype=np.int64)
        self.radix = d ** np.arange(len(base) - 1, -1, -1, dtype=np.int64)
        self.slot = slot
        return True

    def find(self, rows: np.ndarray, verify: bool = True) -> np.ndarray:
        rows = np.asarray(rows)
        if self.base is not None:
            keys = rows[:, self.base].astype(np.int64) @ self.radix if self.base.size \
                else np.zeros(rows.shape[0], dtype=np.int64)
            idx = self.slot[keys]
            if verify and (np.any(idx < 0) or not np.array_equal(self.perms[idx], rows)):
                raise KeyError("permutation not in group")
            return idx
        keys = self._hash(rows, self.weights)
        pos = np.searchsorted(self.keys, keys)
        pos = np.minimum(pos, len(self.keys) - 1)
        idx = self.order[pos]
        if verify and not np.array_equal(self.perms[idx], rows):
            raise KeyError("permutation not in group")
        return idx


@dataclass(frozen=True, eq=False)
class Group:
    degree: int
    generators: tuple[Perm, ...]
    perms: np.ndarray = field(repr=False)
    parent: np.ndarray = field(repr=False)
    gen_of: np.ndarray = field(repr=False)
    depth: np.ndarray = field(repr=False)
    rmul: np.ndarray = field(repr=False)
    presentation: tuple[str, ...] | None = None
    ambient: np.ndarray | None = field(default=None, repr=False)
    table_cap: int = DEFAULT_TABLE_CAP

    @property
    def order(self) -> int:
        return int(self.perms.shape[0])

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        return f"Group(order={self.order}, degree={self.degree}, generators=[{gens}])"

    def element(self, i: int) -> Perm:
        return Perm(self.perms[i])

    def index_of(self, p: Perm | Sequence[int]) -> int:
        images = list(p.images if isinstance(p, Perm) else p)
        images += range(len(images), self.degree)  # smaller degree: extra points are fixed
        rows = np.asarray(images, dtype=self.perms.dtype)
        if rows.shape != (self.degree,):
            raise KeyError("degree mismatch")
        return int(self._index.find(rows[None, :])[0])

    def lookup(self, rows: np.ndarray, verify: bool = True) -> np.ndarray:
        """Indices of an array of permutation rows (last axis = points).

        ``verify=False`` skips the full-row comparison; only for rows already
        known to lie in the group, such as products of elements.
        """
        rows = np.asarray(rows)
        flat = rows.reshape(-1, self.degree)
        return self._index.find(flat, verify).reshape(rows.shape[:-1])

    @cached_property
    def _index(self) -> _PermIndex:
        return _PermIndex(self.perms)

    @cached_property
    def levels(self) -> list[np.ndarray]:
        order = np.argsort(self.depth, kind="stable")
        bounds = np.searchsorted(self.depth[order], np.arange(self.depth.max() + 2))
        return [order[bounds[i]:bounds[i + 1]] for i in range(len(bounds) - 1)]

    @cached_property
    def gen_indices(self) -> np.ndarray:
        if not self.generators:
            return np.zeros(0, dtype=np.int64)
        return self.lookup(np.array([g.images for g in self.generators]))

    @cached_property
    def inv(self) -> np.ndarray:
        inv_rows = np.empty_like(self.perms)
        np.put_along_axis(inv_rows, self.perms,
                          np.broadcast_to(np.arange(self.degree), self.perms.shape), axis=1)
        return self.lookup(inv_rows)

    @cached_property
    def lmul(self) -> np.ndarray:
        """lmul[k, j] = index(s_k * e_j)."""
        if not self.generators:
            return np.zeros((0, self.order), dtype=np.int64)
        return np.stack([self.lookup(self.perms[:, g.as_array()]) for g in self.generators])

    @cached_property
    def table(self) -> np.ndarray | None:
        """Full Cayley table ``table[i, j] = index(e_i * e_j)``, or None above the cap."""
        if self.order > self.table_cap:
            return None
        if self.order == 1:
            return np.zeros((1, 1), dtype=np.int32)
        return _accel.mult_table(self.levels, self.parent, self.gen_of, self.lmul)

    def mul(self, a, b) -> np.ndarray:
        """Elementwise product of element indices (broadcasting)."""
        a = np.asarray(a)
        b = np.asarray(b)
        if self.table is not None:
            return self.table[a, b].astype(np.int64)
        a, b = np.broadcast_arrays(a, b)
        pa, pb = self.perms[a], self.perms[b]
        return self.lookup(np.take_along_axis(pb, pa, axis=-1), verify=False)

    def mul_index(self, i: int, j: int) -> int:
        return int(self.mul(i, j))

    def power(self, a, k: int) -> np.ndarray:
        a = np.asarray(a)
        if k < 0:
            a, k = self.inv[a], -k
        out = np.zeros_like(a)
        base = a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def conj(self, h, x) -> np.ndarray:
        """h x h^-1."""
        return self.mul(self.mul(h, x), self.inv[np.asarray(h)])

    def evaluate(self, word: str | list[tuple[int, int]], images) -> np.ndarray:
        """Evaluate a relator word on generator images (arrays broadcast)."""
        if isinstance(word, str):
            word = parse_relator(word)
        out = np.zeros(np.broadcast(*[np.asarray(x) for x in images]).shape, dtype=np.int64) \
            if len(images) else np.zeros((), dtype=np.int64)
        for k, e in word:
            x = np.asarray(images[k])
            out = self.mul(out, x if e > 0 else self.inv[x])
        return out

    @cached_property
    def orders(self) -> np.ndarray:
        """Element orders from cycle lengths."""
        P = self.perms.astype(np.int64)
        pts = np.arange(self.degree)
        cur = P.copy()
        length = np.zeros(P.shape, dtype=np.int64)
        for t in range(1, self.degree + 1):
            hit = (cur == pts) & (length == 0)
            length[hit] = t
            cur = np.take_along_axis(P, cur, axis=1)
        return np.lcm.reduce(length, axis=1)

    @property
    def exponent(self) -> int:
        return int(np.lcm.reduce(self.orders))

    @cached_property
    def is_abelian(self) -> bool:
        g = self.gen_indices
        return bool(np.array_equal(self.mul(g[:, None], g[None, :]),
                                   self.mul(g[None, :], g[:, None])))

    @cached_property
    def conj_actions(self) -> np.ndarray:
        """conj_actions[k, i] = index(s_k^-1 e_i s_k)."""
        g = self.gen_indices
        if g.size == 0:
            return np.zeros((0, self.order), dtype=np.int64)
        x = np.arange(self.order)
        return np.stack([self.mul(self.mul(self.inv[s], x), s) for s in g])

    @cached_property
    def classes(self) -> "ClassData":
        return _compute_classes(self)

    @cached_property
    def center(self) -> np.ndarray:
        g = self.gen_indices
        x = np.arange(self.order)
        mask = np.ones(self.order, dtype=bool)
        for s in g:
            mask &= self.mul(x, s) == self.mul(s, x)
        return np.flatnonzero(mask)

    def _reordered(self, order: np.ndarray) -> "Group":
        """Same group with element ``order[i]`` moved to index ``i``."""
        new_pos = np.empty_like(order)
        new_pos[order] = np.arange(order.size)
        parent = self.parent[order]
        parent = np.where(parent >= 0, new_pos[np.maximum(parent, 0)], -1)
        return Group(
            degree=self.degree,
            generators=self.generators,
            perms=self.perms[order],
            parent=parent,
            gen_of=self.gen_of[order],
            depth=self.depth[order],
            rmul=new_pos[self.rmul[:, order]],
            presentation=self.presentation,
            table_cap=self.table_cap,
        )


def generate_group(
    gens: Sequence[Perm],
    degree: int | None = None,
    *,
    max_order: int = DEFAULT_MAX_ORDER,
    presentation: Sequence[str] | None = None,
    table_cap: int = DEFAULT_TABLE_CAP,
) -> Group:
    """Enumerate the group generated by ``gens`` by breadth-first closure.

    Raises GroupTooLarge once more than ``max_order`` elements are found, and
    ValueError if a supplied relator does not evaluate to the identity.
    """
    gens = list(gens)
    degs = {g.degree for g in gens}
    if len(degs) > 1:
        raise ValueError(f"generators have different degrees: {sorted(degs)}")
    n = degs.pop() if degs else max(degree or 1, 1)
    if degree is not None and degree > n:
        gens = [Perm(list(g.images) + list(range(g.degree, degree))) for g in gens]
        n = degree
    k = len(gens)
    gen_arr = np.array([g.images for g in gens], dtype=np.int32).reshape(k, n)

    rows = [np.arange(n, dtype=np.int32)]
    seen = {rows[0].tobytes(): 0}
    parent, gen_of, depth = [-1], [-1], [0]
    rmul = [[] for _ in range(k)]
    frontier = [0]
    d = 0
    while frontier:
        d += 1
        F = np.stack([rows[i] for i in frontier])
        # (x * s)[i] = s[x[i]]
        prods = gen_arr[:, F].transpose(1, 0, 2)
        nxt = []
        for fi, x in enumerate(frontier):
            for s in range(k):
                row = prods[fi, s]
                key = row.tobytes()
                j = seen.get(key)
                if j is None:
                    j = len(rows)
                    if j >= max_order:
                        raise GroupTooLarge(max_order)
                    seen[key] = j
                    rows.append(np.ascontiguousarray(row))
                    parent.append(x)
                    gen_of.append(s)
                    depth.append(d)
                    nxt.append(j)
                rmul[s].append((x, j))
        frontier = nxt
    N = len(rows)
    rmul_arr = np.zeros((k, N), dtype=np.int64)
    for s in range(k):
        src, dst = np.array(rmul[s], dtype=np.int64).reshape(-1, 2).T
        rmul_arr[s, src] = dst
    G = Group(
        degree=n,
        generators=tuple(Perm(g) for g in gen_arr),
        perms=np.stack(rows),
        parent=np.array(parent, dtype=np.int64),
        gen_of=np.array(gen_of, dtype=np.int64),
        depth=np.array(depth, dtype=np.int64),
        rmul=rmul_arr,
        presentation=tuple(presentation) if presentation is not None else None,
        table_cap=table_cap,
    )
    if presentation is not None:
        for rel in presentation:
            if max((i for i, _ in parse_relator(rel)), default=-1) >= k:
                raise ValueError(f"relator {rel!r} uses a missing generator")
            if int(G.evaluate(rel, list(G.gen_indices))) != 0:
                raise ValueError(f"relator {rel!r} does not hold on the generators")
    return G


@dataclass(frozen=True, eq=False)
class ClassData:
    """Conjugacy classes; class indices are ordered by representative index."""

    class_of: np.ndarray
    reps: np.ndarray
    sizes: np.ndarray
    inverse_class: np.ndarray
    # conjugator[i] = t with t e_i t^-1 = reps[class_of[i]]
    conjugator: np.ndarray = field(repr=False)

    @property
    def count(self) -> int:
        return int(self.reps.size)

    def members(self, c: int) -> np.ndarray:
        return np.flatnonzero(self.class_of == c)


def _compute_classes(G: Group) -> ClassData:
    N = G.order
    if G.conj_actions.shape[0] == 0:
        label = np.arange(N)
        parent = np.full(N, -1)
        via = np.full(N, -1)
        depth = np.zeros(N, dtype=np.int64)
    else:
        label, parent, via, depth = _accel.orbit_tree(G.conj_actions)
    reps = np.flatnonzero(label == np.arange(N))
    class_of = np.searchsorted(reps, label)
    sizes = np.bincount(class_of, minlength=reps.size)
    conjugator = np.zeros(N, dtype=np.int64)
    gidx = G.gen_indices
    for d in range(1, int(depth.max()) + 1):
        lvl = np.flatnonzero(depth == d)
        # child = s^-1 parent s  =>  t_child = t_parent * s
        conjugator[lvl] = G.mul(conjugator[parent[lvl]], gidx[via[lvl]])
    inverse_class = class_of[G.inv[reps]]
    return ClassData(class_of=class_of, reps=reps, sizes=sizes,
                     inverse_class=inverse_class, conjugator=conjugator)


def conjugacy_classes(G: Group) -> ClassData:
    return G.classes


def element_order(G: Group, g: int) -> int:
    return int(G.orders[g])


def _closure_mask(G: Group, gens: Sequence[int]) -> np.ndarray:
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    frontier = np.array([0])
    gens = np.asarray(gens, dtype=np.int64)
    while frontier.size:
        nxt = G.mul(frontier[:, None], gens[None, :]).ravel()
        nxt = np.unique(nxt[~mask[nxt]])
        mask[nxt] = True
        frontier = nxt
    return mask


def subgroup(G: Group, members: np.ndarray) -> Group:
    """Group on the given element indices (assumed closed), in G's order.

    The result's ``ambient`` maps its indices back to indices of G.
    """
    members = np.sort(np.asarray(members, dtype=np.int64))
    if members.size == G.order:
        sub = copy.copy(G)
        object.__setattr__(sub, "ambient", np.arange(G.order))
        return sub
    gens: list[int] = []
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    for x in members:
        if not mask[x]:
            gens.append(int(x))
            mask = _closure_mask(G, gens)
    if not np.array_equal(np.flatnonzero(mask), members):
        raise ValueError("element set is not a subgroup")
    H = generate_group([G.element(i) for i in gens], G.degree,
                       max_order=members.size + 1, table_cap=G.table_cap)
    amb = G.lookup(H.perms)
    order = np.argsort(amb, kind="stable")
    H = H._reordered(order)
    object.__setattr__(H, "ambient", amb[order])
    return H


def centralizer(G: Group, g: int) -> Group:
    """C_G(g) as a Group whose elements follow G's canonical order."""
    x = np.arange(G.order)
    mask = G.mul(x, g) == G.mul(g, x)
    return subgroup(G, np.flatnonzero(mask))


def normalizer(G: Group, members: np.ndarray) -> Group:
    """N_G(H) for the subgroup H on the given element indices."""
    members = np.unique(np.asarray(members, dtype=np.int64))
    inH = np.zeros(G.order, dtype=bool)
    inH[members] = True
    x = np.arange(G.order)
    mask = np.ones(G.order, dtype=bool)
    for h in members:
        mask &= inH[G.conj(x, int(h))]
    return subgroup(G, np.flatnonzero(mask))
