"""Hot index-array kernels with a numba path and a pure-numpy path.

The numba path is used when numba imports and ``GINV_NUMBA`` is not set to a
false value (``0``, ``false``, ``off``, ``no``).  Both paths return identical
arrays; tests run them against each other and ``benchmarks/bench_kernels.py``
times them.
"""
from __future__ import annotations

import os

import numpy as np

try:
    import numba
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is an optional extra
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(func):
            return func
        if args and callable(args[0]):
            return args[0]
        return wrap

__all__ = [
    "HAVE_NUMBA",
    "USE_NUMBA",
    "backend",
    "orbit_tree",
    "mult_table",
    "extend_hom",
    "KERNELS",
]


def _flag_enabled() -> bool:
    val = os.environ.get("GINV_NUMBA", "1").strip().lower()
    return val not in {"0", "false", "off", "no"}


USE_NUMBA = HAVE_NUMBA and _flag_enabled()


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# orbit_tree: orbits of a group given by generator actions on {0..n-1}
#
# Returns (label, parent, via, depth):
#   label[i]  least point of the orbit of i
#   parent[i] point i was reached from (-1 at orbit roots)
#   via[i]    generator index of that step, i.e. actions[via[i], parent[i]] == i
#   depth[i]  BFS distance from the root
# Traversal is FIFO from each root, generators tried in order.
# ---------------------------------------------------------------------------

def _orbit_tree_numpy(actions):
    actions = np.asarray(actions, dtype=np.int64)
    k, n = actions.shape
    label = np.arange(n, dtype=np.int64)
    while True:
        old = label
        label = label.copy()
        for a in actions:
            np.minimum(label, label[a], out=label)
            label[a] = np.minimum(label[a], label)
        label = label[label]
        while True:
            jumped = label[label]
            if np.array_equal(jumped, label):
                break
            label = jumped
        if np.array_equal(label, old):
            break
    parent = np.full(n, -1, dtype=np.int64)
    via = np.full(n, -1, dtype=np.int64)
    depth = np.full(n, -1, dtype=np.int64)
    frontier = np.flatnonzero(label == np.arange(n))
    depth[frontier] = 0
    d = 0
    gens = np.arange(k)
    while frontier.size:
        cand = actions[:, frontier].T.ravel()
        src = np.repeat(frontier, k)
        gen = np.tile(gens, frontier.size)
        fresh = depth[cand] == -1
        cand, src, gen = cand[fresh], src[fresh], gen[fresh]
        if cand.size == 0:
            break
        _, first = np.unique(cand, return_index=True)
        first.sort()
        nodes = cand[first]
        parent[nodes] = src[first]
        via[nodes] = gen[first]
        d += 1
        depth[nodes] = d
        frontier = nodes
    return label, parent, via, depth


@njit(cache=True)
def _orbit_tree_numba(actions):
    k, n = actions.shape
    label = np.full(n, -1, dtype=np.int64)
    parent = np.full(n, -1, dtype=np.int64)
    via = np.full(n, -1, dtype=np.int64)
    depth = np.full(n, -1, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    for r in range(n):
        if label[r] != -1:
            continue
        label[r] = r
        depth[r] = 0
        head = 0
        tail = 0
        queue[tail] = r
        tail += 1
        while head < tail:
            x = queue[head]
            head += 1
            for g in range(k):
                y = actions[g, x]
                if label[y] == -1:
                    label[y] = r
                    parent[y] = x
                    via[y] = g
                    depth[y] = depth[x] + 1
                    queue[tail] = y
                    tail += 1
    return label, parent, via, depth


# ---------------------------------------------------------------------------
# mult_table: full Cayley table from a spanning tree
#
# Element i = parent[i] * s_{gen_of[i]}; lmul[g, j] = index(s_g * e_j).
# Then table[i, j] = table[parent[i], lmul[gen_of[i], j]].
# ``levels`` lists the tree levels (identity level first).
# ---------------------------------------------------------------------------

def _mult_table_numpy(levels, parent, gen_of, lmul):
    n = lmul.shape[1]
    table = np.empty((n, n), dtype=np.int32)
    table[levels[0]] = np.arange(n, dtype=np.int32)
    for lvl in levels[1:]:
        table[lvl] = table[parent[lvl][:, None], lmul[gen_of[lvl]]]
    return table


@njit(cache=True)
def _mult_table_numba_core(order, parent, gen_of, lmul, table):
    n = lmul.shape[1]
    for j in range(n):
        table[order[0], j] = j
    for t in range(1, order.shape[0]):
        i = order[t]
        p = parent[i]
        g = gen_of[i]
        for j in range(n):
            table[i, j] = table[p, lmul[g, j]]
    return table


def _mult_table_numba(levels, parent, gen_of, lmul):
    n = lmul.shape[1]
    order = np.concatenate(levels).astype(np.int64)
    table = np.empty((n, n), dtype=np.int32)
    return _mult_table_numba_core(order, parent.astype(np.int64),
                                  gen_of.astype(np.int64), lmul.astype(np.int64), table)


# ---------------------------------------------------------------------------
# extend_hom: extend generator images along the spanning tree and certify
# multiplicativity on every Cayley-graph edge: phi(e_i * s_g) == phi(e_i) * phi(s_g).
# Edge consistency for all (i, g) is equivalent to phi being a homomorphism.
# Returns (phi, ok).
# ---------------------------------------------------------------------------

def _extend_hom_numpy(levels, parent, gen_of, table, img, rmul):
    n = table.shape[0]
    phi = np.empty(n, dtype=np.int64)
    phi[levels[0]] = 0
    for lvl in levels[1:]:
        phi[lvl] = table[phi[parent[lvl]], img[gen_of[lvl]]]
    for g in range(rmul.shape[0]):
        if not np.array_equal(phi[rmul[g]], table[phi, img[g]]):
            return phi, False
    return phi, True


@njit(cache=True)
def _extend_hom_numba_core(order, parent, gen_of, table, img, rmul):
    n = table.shape[0]
    phi = np.empty(n, dtype=np.int64)
    phi[order[0]] = 0
    for t in range(1, order.shape[0]):
        i = order[t]
        phi[i] = table[phi[parent[i]], img[gen_of[i]]]
    for g in range(rmul.shape[0]):
        ig = img[g]
        for i in range(n):
            if phi[rmul[g, i]] != table[phi[i], ig]:
                return phi, False
    return phi, True


def _extend_hom_numba(levels, parent, gen_of, table, img, rmul):
    order = np.concatenate(levels).astype(np.int64)
    return _extend_hom_numba_core(order, parent.astype(np.int64), gen_of.astype(np.int64),
                                  table, np.asarray(img, dtype=np.int64),
                                  rmul.astype(np.int64))


KERNELS = {
    "numpy": {
        "orbit_tree": _orbit_tree_numpy,
        "mult_table": _mult_table_numpy,
        "extend_hom": _extend_hom_numpy,
    },
}
if HAVE_NUMBA:
    KERNELS["numba"] = {
        "orbit_tree": lambda actions: _orbit_tree_numba(np.ascontiguousarray(actions, dtype=np.int64)),
        "mult_table": _mult_table_numba,
        "extend_hom": _extend_hom_numba,
    }


def orbit_tree(actions):
    return KERNELS[backend()]["orbit_tree"](actions)


def mult_table(levels, parent, gen_of, lmul):
    return KERNELS[backend()]["mult_table"](levels, parent, gen_of, lmul)


def extend_hom(levels, parent, gen_of, table, img, rmul):
    return KERNELS[backend()]["extend_hom"](levels, parent, gen_of, table, img, rmul)
