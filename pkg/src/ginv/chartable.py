"""Exact character tables by the Burnside-Dixon method.

Class-multiplication matrices are simultaneously diagonalised over F_p with
p = 1 (mod exp G) and p > 2 sqrt|G|.  Each common eigenvector gives one
character mod p, and every value is lifted to Z[zeta_e] by recovering the
eigenvalue multiplicities of rho(g) from the power map.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import isqrt

import numpy as np

from .cyclo import Cyclo, conj_matrix, cyclotomic_poly, nf_from_powers
from .group import Group

__all__ = [
    "CharacterTable",
    "CharacterTableError",
    "class_mult_coefficients",
    "character_table",
    "all_characters_real",
    "dixon_prime",
    "PRIME_SEARCH_BOUND",
]

PRIME_SEARCH_BOUND = 10**8


class CharacterTableError(RuntimeError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def dixon_prime(order: int, exponent: int, bound: int = PRIME_SEARCH_BOUND) -> int:
    """Smallest prime p = 1 (mod exponent) above max(2 sqrt(order), exponent)."""
    floor = max(2 * isqrt(order) + 1, exponent)
    p = (floor // exponent + 1) * exponent + 1
    while p <= bound:
        if _is_prime(p) and order % p:
            return p
        p += exponent
    raise CharacterTableError(f"no suitable prime below the search bound {bound}")


def _primitive_root_of_unity(e: int, p: int) -> int:
    n = p - 1
    factors, m, q = set(), n, 2
    while q * q <= m:
        while m % q == 0:
            factors.add(q)
            m //= q
        q += 1
    if m > 1:
        factors.add(m)
    for g in range(2, p):
        if all(pow(g, n // f, p) != 1 for f in factors):
            return pow(g, n // e, p)
    raise CharacterTableError(f"no primitive root mod {p}")  # pragma: no cover


# --- linear algebra over F_p ----------------------------------------------

def _rref_mod(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    A = np.array(A, dtype=np.int64) % p
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = A[r] * pow(int(A[r, c]), p - 2, p) % p
        f = A[:, c].copy()
        f[r] = 0
        nzr = np.flatnonzero(f)
        if nzr.size:
            A[nzr] = (A[nzr] - f[nzr, None] * A[r]) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def _nullspace_mod(A: np.ndarray, p: int) -> np.ndarray:
    """Columns spanning {v : A v = 0} over F_p."""
    R, pivots = _rref_mod(A, p)
    n = A.shape[1]
    free = [c for c in range(n) if c not in pivots]
    N = np.zeros((n, len(free)), dtype=np.int64)
    for t, f in enumerate(free):
        N[f, t] = 1
        for i, c in enumerate(pivots):
            N[c, t] = (-R[i, f]) % p
    return N


def _charpoly_mod(A: np.ndarray, p: int) -> list[int]:
    """Characteristic polynomial (low -> high, monic) via Hessenberg reduction."""
    H = np.array(A, dtype=np.int64) % p
    n = H.shape[0]
    for m in range(1, n - 1):
        nz = np.flatnonzero(H[m:, m - 1])
        if nz.size == 0:
            continue
        i = m + nz[0]
        if i != m:
            H[[i, m]] = H[[m, i]]
            H[:, [i, m]] = H[:, [m, i]]
        inv = pow(int(H[m, m - 1]), p - 2, p)
        for r in range(m + 1, n):
            u = int(H[r, m - 1]) * inv % p
            if u:
                H[r] = (H[r] - u * H[m]) % p
                H[:, m] = (H[:, m] + u * H[:, r]) % p
    polys = [[1]]
    for k in range(1, n + 1):
        hk = int(H[k - 1, k - 1])
        prev = polys[k - 1]
        new = [0] + prev  # x * p_{k-1}
        for t, c in enumerate(prev):
            new[t] = (new[t] - hk * c) % p
        prod = 1
        for i in range(1, k):
            prod = prod * int(H[k - i, k - i - 1]) % p
            coef = int(H[k - i - 1, k - 1]) * prod % p
            if coef:
                for t, c in enumerate(polys[k - i - 1]):
                    new[t] = (new[t] - coef * c) % p
        polys.append(new)
    return polys[n]


def _roots_mod(coeffs: list[int], p: int) -> list[int]:
    lam = np.arange(p, dtype=np.int64)
    val = np.zeros(p, dtype=np.int64)
    for c in reversed(coeffs):
        val = (val * lam + c) % p
    return [int(x) for x in np.flatnonzero(val == 0)]


def _common_eigenvectors(mats: list[np.ndarray], p: int) -> list[np.ndarray]:
    """One vector per common 1-dim eigenspace of commuting diagonalisable matrices."""
    r = mats[0].shape[0]
    spaces = [np.eye(r, dtype=np.int64)]
    for M in mats:
        if all(B.shape[1] == 1 for B in spaces):
            break
        nxt = []
        for B in spaces:
            d = B.shape[1]
            if d == 1:
                nxt.append(B)
                continue
            R, piv = _rref_mod(B.T, p)
            B = R.T  # B[piv] = identity
            A = ((M @ B) % p)[piv]
            found = 0
            for lam in _roots_mod(_charpoly_mod(A, p), p):
                Nsp = _nullspace_mod((A - lam * np.eye(d, dtype=np.int64)) % p, p)
                found += Nsp.shape[1]
                nxt.append((B @ Nsp) % p)
            if found != d:
                raise CharacterTableError("class matrices are not diagonalisable over F_p")
        spaces = nxt
    if any(B.shape[1] != 1 for B in spaces):
        raise CharacterTableError("class matrices do not separate the characters mod p")
    return [B[:, 0] for B in spaces]


# --- tables ----------------------------------------------------------------

def class_mult_coefficients(G: Group) -> np.ndarray:
    """a[i, j, k] = #{(x, y) : x in C_i, y in C_j, x y = z_k} for the class rep z_k."""
    cl = G.classes
    r = cl.count
    a = np.zeros((r, r, r), dtype=np.int64)
    x = np.arange(G.order)
    for k, z in enumerate(cl.reps):
        y = G.mul(G.inv[x], int(z))
        a[:, :, k] = np.bincount(cl.class_of * r + cl.class_of[y], minlength=r * r).reshape(r, r)
    return a


@dataclass(frozen=True, eq=False)
class CharacterTable:
    """values[i, c] is the normal form of chi_i on class c, in Z[zeta_m]."""

    group: Group
    m: int
    values: np.ndarray = field(repr=False)
    degrees: tuple[int, ...]
    prime: int

    @property
    def count(self) -> int:
        return len(self.degrees)

    def value(self, i: int, c: int) -> Cyclo:
        return Cyclo(self.m, self.values[i, c])

    @cached_property
    def chars(self) -> list[list[Cyclo]]:
        return [[self.value(i, c) for c in range(self.count)] for i in range(self.count)]

    def conj_values(self) -> np.ndarray:
        return self.values @ conj_matrix(self.m)

    def real_rows(self) -> np.ndarray:
        return np.all(self.conj_values() == self.values, axis=(1, 2))

    def to_complex(self) -> np.ndarray:
        deg = self.values.shape[-1]
        z = np.exp(2j * np.pi * np.arange(deg) / self.m)
        return self.values @ z


def character_table(G: Group, *, prime_bound: int = PRIME_SEARCH_BOUND) -> CharacterTable:
    cl = G.classes
    r, N, e = cl.count, G.order, G.exponent
    deg_e = len(cyclotomic_poly(e)) - 1
    if N == 1:
        vals = np.zeros((1, 1, deg_e), dtype=np.int64)
        vals[0, 0, 0] = 1
        return CharacterTable(G, e, vals, (1,), 2)
    p = dixon_prime(N, e, prime_bound)
    a = class_mult_coefficients(G)
    # M_j[i, k] = a[j, i, k]; the vector w_k = |C_k| chi(z_k) / chi(1) satisfies M_j w = w_j w
    mats = [a[j] % p for j in range(1, r)] or [np.zeros((1, 1), dtype=np.int64)]
    vecs = _common_eigenvectors(mats, p)
    sizes = cl.sizes.astype(np.int64)
    inv_sizes = np.array([pow(int(s), p - 2, p) for s in sizes], dtype=np.int64)
    inv_cls = cl.inverse_class

    z = _primitive_root_of_unity(e, p)
    reps = cl.reps
    power_classes = []
    for k in range(r):
        o = int(G.orders[reps[k]])
        pw = np.zeros(o, dtype=np.int64)
        cur = 0
        for t in range(o):
            pw[t] = cl.class_of[cur]
            cur = int(G.mul(cur, int(reps[k])))
        power_classes.append(pw)

    rows, degrees = [], []
    for w in vecs:
        w = w * pow(int(w[0]), p - 2, p) % p
        s = int(np.sum(w * w[inv_cls] % p * inv_sizes % p) % p)
        target = N * pow(s, p - 2, p) % p
        d = next((d for d in range(1, isqrt(N) + 1) if d * d % p == target), None)
        if d is None:
            raise CharacterTableError("could not recover a character degree")
        theta = d * w % p * inv_sizes % p  # chi(z_k) mod p
        row = np.zeros((r, deg_e), dtype=np.int64)
        for k in range(r):
            pw = power_classes[k]
            o = pw.size
            zo_inv = pow(z, (e // o) * (p - 2), p)  # zeta_o^-1 mod p
            tl = np.outer(np.arange(o), np.arange(o)) % o
            Z = np.array([pow(zo_inv, int(x), p) for x in range(o)], dtype=np.int64)[tl]
            mult = (theta[pw] @ Z.T) % p * pow(o, p - 2, p) % p
            if mult.sum() != d or np.any(mult > d):
                raise CharacterTableError("eigenvalue multiplicities failed to lift")
            powers = np.zeros(e, dtype=np.int64)
            powers[np.arange(o) * (e // o)] = mult
            row[k] = nf_from_powers(powers, e)
        rows.append(row)
        degrees.append(d)

    if sum(d * d for d in degrees) != N:
        raise CharacterTableError("degrees do not satisfy sum d^2 = |G|")
    trivial = np.zeros((r, deg_e), dtype=np.int64)
    trivial[:, 0] = 1

    def sort_key(i):
        flat = tuple(-int(v) for v in rows[i].ravel())
        return (degrees[i], not np.array_equal(rows[i], trivial), flat)

    order = sorted(range(r), key=sort_key)
    values = np.stack([rows[i] for i in order])
    return CharacterTable(G, e, values, tuple(degrees[i] for i in order), p)


def all_characters_real(G: Group, table: CharacterTable | None = None) -> bool:
    table = table if table is not None else character_table(G)
    return bool(np.all(table.real_rows()))
