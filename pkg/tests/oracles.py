"""Slow, independent reference computations on Perm objects.

Nothing here touches the index machinery of ginv.group; groups are plain
Python sets of Perm built by closure, and every answer is obtained by direct
enumeration.
"""
from __future__ import annotations

from itertools import product

from ginv.perm import Perm


def closure(gens, degree):
    e = Perm.identity(degree)
    seen = {e}
    todo = [e]
    while todo:
        x = todo.pop()
        for s in gens:
            y = x * s
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return sorted(seen)


def conj(h, x):
    return h * x * h.inverse()


def classes(elems):
    out, seen = [], set()
    for x in elems:
        if x in seen:
            continue
        orbit = {conj(h, x) for h in elems}
        seen |= orbit
        out.append(frozenset(orbit))
    return out


def centralizer_order(elems, g):
    return sum(1 for h in elems if h * g == g * h)


def commuting_pairs(elems):
    return [(f, g) for f in elems for g in elems if f * g == g * f]


def double_classes(elems):
    out, seen = [], set()
    for f, g in commuting_pairs(elems):
        if (f, g) in seen:
            continue
        orbit = {(conj(h, f), conj(h, g)) for h in elems}
        seen |= orbit
        out.append(frozenset(orbit))
    return out


def automorphisms(gens, elems):
    """All automorphisms as dicts, by trying every tuple of generator images."""
    degree = elems[0].degree
    found = []
    for imgs in product(elems, repeat=len(gens)):
        phi = {Perm.identity(degree): Perm.identity(degree)}
        todo = [Perm.identity(degree)]
        ok = True
        while todo and ok:
            x = todo.pop()
            for s, t in zip(gens, imgs):
                y, fy = x * s, phi[x] * t
                if y in phi:
                    if phi[y] != fy:
                        ok = False
                        break
                else:
                    phi[y] = fy
                    todo.append(y)
        if not ok or len(set(phi.values())) != len(elems):
            continue
        if all(phi[a * b] == phi[a] * phi[b] for a in elems for b in elems):
            found.append(phi)
    return found


def class_inverting(phi, elems):
    cl = {x: c for c in classes(elems) for x in c}
    return all(phi[g] in cl[g.inverse()] for g in elems)


def double_class_inverting(phi, elems):
    dcl = {p: c for c in double_classes(elems) for p in c}
    return all((phi[f], phi[g]) in dcl[f.inverse(), g.inverse()]
               for f, g in commuting_pairs(elems))
