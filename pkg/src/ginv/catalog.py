"""Named example groups and the text grammar used by the command line.

Grammar (case-insensitive names)::

    S5  A6  C12  Ab[2,4,3]  D4  Q8  M11  H27  F21  perm: (1 2 3)(4 5), (1 2)

``Dn`` is the dihedral group of order 2n.  ``Hq`` is the Heisenberg group of
order q = p^3 for an odd prime p.  Every named family except ``perm:`` comes
with a presentation; its relators are checked on the generators when the
group is built, and the automorphism search uses them for pruning.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import factorial

import numpy as np

from .group import DEFAULT_MAX_ORDER, DEFAULT_TABLE_CAP, Group, generate_group
from .perm import Perm, parse_perm_list

__all__ = [
    "GroupSpec",
    "parse_spec",
    "build",
    "build_text",
    "sylow_count",
    "expected_order",
    "M11_GENERATORS",
    "KINDS",
]

KINDS = ("symmetric", "alternating", "cyclic", "abelian", "dihedral",
         "quaternion", "mathieu11", "heisenberg", "frobenius21", "explicit")

# Degree-11 pair a in 2A, b in 4A with ab of order 11, satisfying the
# standard-generator relators listed in _m11_relators.
M11_GENERATORS = ("(3 11)(4 5)(6 10)(7 8)", "(1 10 9 4)(2 5 11 7)")


@dataclass(frozen=True)
class GroupSpec:
    kind: str
    params: tuple = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown group kind {self.kind!r}")
        k, p = self.kind, self.params
        if k in ("symmetric", "alternating", "cyclic", "dihedral"):
            if len(p) != 1 or int(p[0]) < 1:
                raise ValueError(f"{k} needs one parameter n >= 1")
        elif k == "abelian":
            if not p or any(int(x) < 1 for x in p):
                raise ValueError("abelian product needs factors n_i >= 1")
        elif k == "heisenberg":
            if len(p) != 1 or not _is_odd_prime(int(p[0])):
                raise ValueError("Heisenberg group needs an odd prime p")
        elif k == "explicit":
            if len(p) != 1 or not isinstance(p[0], str):
                raise ValueError("explicit group needs generator text")

    def __str__(self) -> str:
        k, p = self.kind, self.params
        simple = {"symmetric": "S", "alternating": "A", "cyclic": "C", "dihedral": "D"}
        if k in simple:
            return f"{simple[k]}{p[0]}"
        if k == "abelian":
            return "Ab[" + ",".join(str(x) for x in p) + "]"
        if k == "heisenberg":
            return f"H{p[0] ** 3}"
        if k == "explicit":
            return f"perm: {p[0]}"
        return {"quaternion": "Q8", "mathieu11": "M11", "frobenius21": "F21"}[k]


def _is_odd_prime(p: int) -> bool:
    return p > 2 and all(p % q for q in range(2, int(p ** 0.5) + 1))


_SIMPLE = {"S": "symmetric", "A": "alternating", "C": "cyclic", "D": "dihedral"}


def parse_spec(text: str) -> GroupSpec:
    """Parse the group-spec grammar; ValueError on anything else."""
    s = text.strip()
    if s.lower().startswith("perm:"):
        body = s[5:].strip()
        parse_perm_list(body)  # validate early
        return GroupSpec("explicit", (body,))
    u = s.upper().replace(" ", "")
    if u in ("Q8", "M11", "F21"):
        return GroupSpec({"Q8": "quaternion", "M11": "mathieu11", "F21": "frobenius21"}[u])
    m = re.fullmatch(r"AB\[(\d+(?:,\d+)*)\]", u)
    if m:
        return GroupSpec("abelian", tuple(int(x) for x in m.group(1).split(",")))
    m = re.fullmatch(r"([SACD])(\d+)", u)
    if m:
        return GroupSpec(_SIMPLE[m.group(1)], (int(m.group(2)),))
    m = re.fullmatch(r"H(\d+)", u)
    if m:
        q = int(m.group(1))
        p = round(q ** (1 / 3))
        p = next((c for c in (p - 1, p, p + 1) if c ** 3 == q), None)
        if p is None:
            raise ValueError(f"H{q}: order must be p^3 for an odd prime p")
        return GroupSpec("heisenberg", (p,))
    raise ValueError(f"cannot parse group spec {text!r}")


def expected_order(spec: GroupSpec) -> int | None:
    k, p = spec.kind, spec.params
    if k == "symmetric":
        return factorial(p[0])
    if k == "alternating":
        return max(factorial(p[0]) // 2, 1)
    if k == "cyclic":
        return p[0]
    if k == "abelian":
        return int(np.prod(p))
    if k == "dihedral":
        return 2 * p[0]
    if k == "heisenberg":
        return p[0] ** 3
    return {"quaternion": 8, "mathieu11": 7920, "frobenius21": 21}.get(k)


# --- constructions -----------------------------------------------------------

def _cycle(points, degree) -> Perm:
    return Perm.from_cycles([list(points)], degree)


def _symmetric(n):
    if n == 1:
        return [], None, 1
    s = _cycle([0, 1], n)
    if n == 2:
        return [s], ["aa"], 2
    t = _cycle(range(n), n)
    rels = ["aa", "b" * n, "ab" * (n - 1), "aBab" * 3]
    rels += [("a" + "B" * j + "a" + "b" * j) * 2 for j in range(2, n - 1)]
    return [s, t], rels, n


def _alternating(n):
    if n <= 2:
        return [], None, n
    a = _cycle([0, 1, 2], n)
    if n == 3:
        return [a], ["aaa"], 3
    b = _cycle(range(n), n) if n % 2 else _cycle(range(1, n), n)
    return [a, b], None, n  # order relators are attached in build()


def _cyclic(n):
    if n == 1:
        return [], None, 1
    return [_cycle(range(n), n)], ["a" * n], n


def _abelian(parts):
    degree = sum(parts)
    gens, start = [], 0
    for m in parts:
        gens.append(_cycle(range(start, start + m), degree) if m > 1 else Perm.identity(degree))
        start += m
    letters = "abcdefghijklmnopqrstuvwxyz"
    if len(parts) > len(letters):
        return gens, None, degree
    rels = [letters[i] * m for i, m in enumerate(parts)]
    rels += [letters[i] + letters[j] + letters[i].upper() + letters[j].upper()
             for i in range(len(parts)) for j in range(i + 1, len(parts))]
    return gens, rels, degree


def _dihedral(n):
    if n == 1:
        return [_cycle([0, 1], 2)], ["aa"], 2
    if n == 2:
        return [Perm.from_cycles([[0, 1]], 4), Perm.from_cycles([[2, 3]], 4)], \
            ["aa", "bb", "abAB"], 4
    r = _cycle(range(n), n)
    s = Perm([(-i) % n for i in range(n)])
    return [r, s], ["a" * n, "bb", "baba"], n


def _quaternion():
    # elements (sign, unit) with unit 0..3 = 1, i, j, k; index = 4 * (sign < 0) + unit
    table = {(0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
             (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
             (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
             (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0)}

    def right_mult(g):
        gs, gu = divmod(g, 4)
        images = []
        for x in range(8):
            xs, xu = divmod(x, 4)
            sign, u = table[xu, gu]
            neg = (xs + gs + (sign < 0)) % 2
            images.append(4 * neg + u)
        return Perm(images)

    return [right_mult(1), right_mult(2)], ["aaaa", "aaBB", "baBa"], 8


def _heisenberg(p):
    elems = [(x, y, z) for x in range(p) for y in range(p) for z in range(p)]
    index = {e: i for i, e in enumerate(elems)}

    def right_mult(g):
        gx, gy, gz = g
        return Perm([index[(x + gx) % p, (y + gy) % p, (z + gz + x * gy) % p]
                     for x, y, z in elems])

    comm = "abAB"
    rels = ["a" * p, "b" * p, comm * p, "a" + comm + "A" + "baBA", "b" + comm + "B" + "baBA"]
    return [right_mult((1, 0, 0)), right_mult((0, 1, 0))], rels, p ** 3


def _frobenius21():
    a = Perm([(i + 1) % 7 for i in range(7)])
    b = Perm([(4 * i) % 7 for i in range(7)])
    return [a, b], ["aaaaaaa", "bbb", "baBAA"], 7


def _m11_relators():
    return ["aa", "bbbb", "ab" * 11, "abb" * 6, "ababaBababbaBabaBaB"]


def _order_relators(gens, degree, words) -> list[str]:
    """w^k for each word w, where k is the order of w evaluated on the generators."""
    out = []
    for w in words:
        p = Perm.identity(degree)
        for ch in w:
            g = gens["ab".index(ch.lower())]
            p = p * (g if ch.islower() else g.inverse())
        out.append(w * p.order())
    return out


def build(spec: GroupSpec | str, *, max_order: int = DEFAULT_MAX_ORDER,
          table_cap: int = DEFAULT_TABLE_CAP) -> Group:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    k, p = spec.kind, spec.params
    if k == "symmetric":
        gens, rels, deg = _symmetric(p[0])
    elif k == "alternating":
        gens, rels, deg = _alternating(p[0])
        if len(gens) == 2:
            rels = _order_relators(gens, deg, ["a", "b", "ab", "aB", "abb", "aBB", "abAB"])
    elif k == "cyclic":
        gens, rels, deg = _cyclic(p[0])
    elif k == "abelian":
        gens, rels, deg = _abelian(p)
    elif k == "dihedral":
        gens, rels, deg = _dihedral(p[0])
    elif k == "quaternion":
        gens, rels, deg = _quaternion()
    elif k == "mathieu11":
        gens, rels, deg = [Perm.from_cycles(c, 11) for c in _m11_cycles()], _m11_relators(), 11
    elif k == "heisenberg":
        gens, rels, deg = _heisenberg(p[0])
    elif k == "frobenius21":
        gens, rels, deg = _frobenius21()
    else:
        gens, rels, deg = parse_perm_list(p[0]), None, None
    G = generate_group(gens, deg, max_order=max_order, presentation=rels, table_cap=table_cap)
    want = expected_order(spec)
    if want is not None and G.order != want:
        raise AssertionError(f"{spec} built with order {G.order}, expected {want}")  # pragma: no cover
    return G


def _m11_cycles():
    out = []
    for text in M11_GENERATORS:
        cycles = re.findall(r"\(([^)]*)\)", text)
        out.append([[int(x) - 1 for x in c.split()] for c in cycles])
    return out


def build_text(text: str, **kw) -> Group:
    return build(parse_spec(text), **kw)


def sylow_count(G: Group, p: int) -> int:
    """Number of subgroups of prime order p, valid when p || |G| (cyclic Sylow of order p)."""
    if G.order % p or (G.order // p) % p == 0:
        raise ValueError(f"sylow_count needs p | |G| and p^2 not dividing |G| (|G|={G.order}, p={p})")
    return int(np.count_nonzero(G.orders == p)) // (p - 1)
