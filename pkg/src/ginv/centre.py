"""Simple objects of the Drinfeld centre Z(G) and their characters.

A simple object is a pair (a, rho): a conjugacy-class representative and an
irreducible character of C_G(a).  Its character is the double class function
that is zero off the double classes whose first entry is conjugate to a, and
equals rho(class of g in C_G(a)) on the pair (a, g).  All characters share
the coefficient ring Z[zeta_m] with m = exp(G), so a character is an integer
array of shape (double classes, phi(m)).

Simples are identified by exact character equality, which is how the action
of an automorphism and duality are turned into permutations of simples.
"""
from __future__ import annotations

import weakref
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .automorphisms import (
    Automorphism,
    SearchBudgetExceeded,
    DEFAULT_BUDGET,
    FREE_ORDER_CAP,
    find_double_class_inverting,
)
from .chartable import CharacterTable, character_table
from .cyclo import Cyclo, conj_matrix, lift_array, nf_mul, reduction_matrix
from .double_classes import DoubleClassData, double_classes
from .group import Group

__all__ = [
    "CENTRE_CAP",
    "CentreTooLarge",
    "CentreSimple",
    "Centre",
    "centre",
    "centre_simples",
    "centre_character",
    "tensor_character",
    "dual_simple",
    "apply_autoequivalence",
    "modular_invariant_matrix",
    "is_permutation_matrix",
    "Verdict",
    "diagonal_physical",
]

CENTRE_CAP = 200


class CentreTooLarge(ValueError):
    def __init__(self, order: int, cap: int):
        super().__init__(f"|G| = {order} exceeds the centre cap {cap}")
        self.order = order
        self.cap = cap


@dataclass(frozen=True)
class CentreSimple:
    index: int
    class_index: int
    irrep_index: int


@dataclass(frozen=True, eq=False)
class Centre:
    group: Group
    dclasses: DoubleClassData = field(repr=False)
    tables: tuple[CharacterTable, ...] = field(repr=False)
    m: int
    chars: np.ndarray = field(repr=False)  # (simples, double classes, phi(m))
    simples: tuple[CentreSimple, ...]

    @property
    def count(self) -> int:
        return len(self.simples)

    @cached_property
    def _by_key(self) -> dict[bytes, int]:
        keys = {}
        for i in range(self.count):
            k = self.chars[i].tobytes()
            if k in keys:
                raise RuntimeError("two centre simples share a character")
            keys[k] = i
        return keys

    def match(self, values: np.ndarray) -> int:
        """Index of the simple whose character is exactly ``values``."""
        i = self._by_key.get(np.ascontiguousarray(values, dtype=np.int64).tobytes())
        if i is None:
            raise RuntimeError("no centre simple has this character")
        return i

    def value(self, s: int, d: int) -> Cyclo:
        return Cyclo(self.m, self.chars[s, d])

    @cached_property
    def dual_permutation(self) -> np.ndarray:
        inv = self.dclasses.inverse_dclass
        return np.array([self.match(self.chars[s][inv]) for s in range(self.count)])

    def autoequivalence_permutation(self, phi: Automorphism) -> np.ndarray:
        dc = self.dclasses
        fm = phi.full_map
        cols = dc.class_of_pair(fm[dc.reps[:, 0]], fm[dc.reps[:, 1]])
        return np.array([self.match(self.chars[s][cols]) for s in range(self.count)])

    def inner_product(self, x: np.ndarray, y: np.ndarray) -> Cyclo:
        """(1/|G|) sum over commuting pairs of x conj(y), for double class functions."""
        terms = nf_mul(x, y @ conj_matrix(self.m), self.m)
        total = (self.dclasses.sizes[:, None] * terms).sum(axis=0)
        return Cyclo(self.m, total).divexact(self.group.order)

    def gram(self) -> np.ndarray:
        """Integer Gram matrix of the simple characters (ArithmeticError if not rational)."""
        m, X = self.m, self.chars
        deg = X.shape[-1]
        R = reduction_matrix(m)
        # K[i, j] = normal form of z^(i - j)
        K = R[(np.arange(deg)[:, None] - np.arange(deg)[None, :]) % m]
        G = np.einsum("sdi,d,tdj,ijk->stk", X, self.dclasses.sizes.astype(np.int64), X, K)
        if np.any(G[..., 1:]) or np.any(G[..., 0] % self.group.order):
            raise ArithmeticError("inner products are not integers")
        return G[..., 0] // self.group.order


_CACHE: "weakref.WeakKeyDictionary[Group, Centre]" = weakref.WeakKeyDictionary()


def centre(G: Group, *, cap: int = CENTRE_CAP, table_fn=character_table) -> Centre:
    """Simples and characters of Z(G); ``table_fn`` computes centraliser tables."""
    if G.order > cap:
        raise CentreTooLarge(G.order, cap)
    z = _CACHE.get(G)
    if z is not None:
        return z
    dc = double_classes(G)
    m = G.exponent
    tables = tuple(table_fn(H) for H in dc.centralizers)
    D = dc.count
    deg = reduction_matrix(m).shape[1]
    chars = np.zeros((D, D, deg), dtype=np.int64)
    simples = []
    for c, T in enumerate(tables):
        off = int(dc.offsets[c])
        vals = lift_array(T.values, T.m, m)
        for r in range(T.count):
            s = off + r
            chars[s, off:off + T.count] = vals[r]
            simples.append(CentreSimple(s, c, r))
    z = Centre(G, dc, tables, m, chars, tuple(simples))
    _CACHE[G] = z
    return z


def centre_simples(G: Group, **kw) -> list[CentreSimple]:
    return list(centre(G, **kw).simples)


def _commuting(G: Group, f: int, g: int) -> None:
    if int(G.mul(f, g)) != int(G.mul(g, f)):
        raise ValueError("f and g do not commute")


def centre_character(G: Group, s: CentreSimple, f: int, g: int, **kw) -> Cyclo:
    _commuting(G, f, g)
    z = centre(G, **kw)
    return z.value(s.index, int(z.dclasses.class_of_pair(f, g)))


def tensor_character(G: Group, s: CentreSimple, t: CentreSimple, f: int, g: int, **kw) -> Cyclo:
    """Sum over f1 f2 = f with f1, f2 in C_G(g) of chi_s(f1, g) chi_t(f2, g)."""
    _commuting(G, f, g)
    z = centre(G, **kw)
    x = np.arange(G.order)
    cg = x[G.mul(x, g) == G.mul(g, x)]
    f2 = G.mul(G.inv[cg], f)
    d1 = z.dclasses.class_of_pair(cg, g)
    d2 = z.dclasses.class_of_pair(f2, g)
    total = nf_mul(z.chars[s.index][d1], z.chars[t.index][d2], z.m).sum(axis=0)
    return Cyclo(z.m, total)


def dual_simple(G: Group, s: CentreSimple, **kw) -> CentreSimple:
    z = centre(G, **kw)
    return z.simples[int(z.dual_permutation[s.index])]


def apply_autoequivalence(G: Group, phi: Automorphism, s: CentreSimple, **kw) -> CentreSimple:
    z = centre(G, **kw)
    return z.simples[int(z.autoequivalence_permutation(phi)[s.index])]


def modular_invariant_matrix(G: Group, phi: Automorphism, **kw) -> np.ndarray:
    """M[i, j] = 1 iff simple j is the dual of the image of simple i under phi."""
    z = centre(G, **kw)
    target = z.dual_permutation[z.autoequivalence_permutation(phi)]
    M = np.zeros((z.count, z.count), dtype=np.int64)
    M[np.arange(z.count), target] = 1
    return M


def is_permutation_matrix(M: np.ndarray) -> bool:
    M = np.asarray(M)
    return bool(M.ndim == 2 and M.shape[0] == M.shape[1] and np.isin(M, (0, 1)).all()
                and (M.sum(axis=0) == 1).all() and (M.sum(axis=1) == 1).all())


@dataclass(frozen=True)
class Verdict:
    physical: str  # "yes", "no" or "unknown"
    witness: Automorphism | None
    cross_check: bool | None
    nodes: int
    reason: str = ""


def diagonal_physical(G: Group, *, budget: int = DEFAULT_BUDGET, centre_cap: int = CENTRE_CAP,
                      free_order_cap: int = FREE_ORDER_CAP, table_fn=character_table) -> Verdict:
    """Decide whether the diagonal modular invariant of Z(G) is physical."""
    try:
        res = find_double_class_inverting(G, budget=budget, free_order_cap=free_order_cap)
    except SearchBudgetExceeded as exc:
        return Verdict("unknown", None, None, exc.nodes, f"search budget of {budget} nodes exhausted")
    except ValueError as exc:
        return Verdict("unknown", None, None, 0, str(exc))
    phi = res.witness
    if phi is None:
        return Verdict("no", None, None, res.nodes, "no double class-inverting automorphism")
    check = None
    if G.order <= centre_cap:
        M = modular_invariant_matrix(G, phi, cap=centre_cap, table_fn=table_fn)
        check = bool(np.array_equal(M, np.eye(len(M), dtype=M.dtype)))
    return Verdict("yes", phi, check, res.nodes, "double class-inverting automorphism found")
