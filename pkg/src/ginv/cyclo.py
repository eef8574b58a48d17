"""Exact elements of Z[zeta_m].

Values are kept in normal form: integer coordinates in the power basis
1, z, ..., z^(phi(m)-1), obtained by reducing modulo the m-th cyclotomic
polynomial.  Two values with the same m are equal iff their coordinates are.
"""
from __future__ import annotations

import cmath
from functools import lru_cache
from math import gcd

import numpy as np

__all__ = [
    "Cyclo",
    "cyclotomic_poly",
    "reduction_matrix",
    "conj_matrix",
    "nf_from_powers",
    "lift_array",
    "nf_mul",
]


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    # coefficient lists low -> high; den monic
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients (low -> high) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("m must be positive")
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _polydiv_exact(num, list(cyclotomic_poly(d)))
    return tuple(num)


@lru_cache(maxsize=None)
def reduction_matrix(m: int) -> np.ndarray:
    """Row j holds the normal form of z^j, for 0 <= j < m."""
    phi = cyclotomic_poly(m)
    deg = len(phi) - 1
    low = np.array(phi[:deg], dtype=np.int64)
    R = np.zeros((m, deg), dtype=np.int64)
    for j in range(min(m, deg)):
        R[j, j] = 1
    for j in range(deg, m):
        prev = R[j - 1]
        row = np.zeros(deg, dtype=np.int64)
        row[1:] = prev[:-1]
        row -= prev[-1] * low
        R[j] = row
    R.setflags(write=False)
    return R


@lru_cache(maxsize=None)
def conj_matrix(m: int) -> np.ndarray:
    """Normal-form coordinates map v -> v @ C is complex conjugation."""
    R = reduction_matrix(m)
    deg = R.shape[1]
    C = R[(-np.arange(deg)) % m]
    C.setflags(write=False)
    return C


def nf_from_powers(vec, m: int) -> np.ndarray:
    """Normal form of sum_j vec[..., j] z^j; the last axis is folded mod m."""
    vec = np.asarray(vec, dtype=np.int64)
    L = vec.shape[-1]
    if L != m:
        folded = np.zeros(vec.shape[:-1] + (m,), dtype=np.int64)
        for j in range(L):
            folded[..., j % m] += vec[..., j]
        vec = folded
    return vec @ reduction_matrix(m)


def lift_array(vals, m: int, M: int) -> np.ndarray:
    """Normal forms over Z[zeta_m] (last axis) rewritten over Z[zeta_M], m | M."""
    if M % m:
        raise ValueError(f"{m} does not divide {M}")
    vals = np.asarray(vals, dtype=np.int64)
    if M == m:
        return vals
    deg = vals.shape[-1]
    powers = np.zeros(vals.shape[:-1] + (M,), dtype=np.int64)
    powers[..., np.arange(deg) * (M // m)] = vals
    return powers @ reduction_matrix(M)


def nf_mul(a, b, m: int) -> np.ndarray:
    """Elementwise product of normal forms (last axis) in Z[zeta_m]."""
    a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
    deg = a.shape[-1]
    out = np.zeros(a.shape[:-1] + (2 * deg - 1,), dtype=np.int64)
    for i in range(deg):
        out[..., i:i + deg] += a[..., i:i + 1] * b
    return nf_from_powers(out, m)


class Cyclo:
    """An element of Z[zeta_m] in normal form."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs=None):
        deg = len(cyclotomic_poly(m)) - 1
        if coeffs is None:
            c = np.zeros(deg, dtype=np.int64)
        else:
            c = np.asarray(coeffs, dtype=np.int64)
            if c.shape != (deg,):
                raise ValueError(f"expected {deg} normal-form coordinates for m={m}")
        object.__setattr__(self, "m", int(m))
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclo is immutable")

    @classmethod
    def from_int(cls, m: int, n: int) -> "Cyclo":
        c = np.zeros(len(cyclotomic_poly(m)) - 1, dtype=np.int64)
        c[0] = n
        return cls(m, c)

    @classmethod
    def root(cls, m: int, j: int = 1) -> "Cyclo":
        return cls(m, reduction_matrix(m)[j % m])

    @classmethod
    def from_powers(cls, m: int, vec) -> "Cyclo":
        return cls(m, nf_from_powers(vec, m))

    @property
    def array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=np.int64)

    def lift(self, M: int) -> "Cyclo":
        """Same value written in Z[zeta_M]; requires m | M."""
        if M % self.m:
            raise ValueError(f"{self.m} does not divide {M}")
        if M == self.m:
            return self
        step = M // self.m
        vec = np.zeros(M, dtype=np.int64)
        vec[np.arange(len(self.coeffs)) * step] = self.coeffs
        return Cyclo.from_powers(M, vec)

    def _coerce(self, other) -> tuple["Cyclo", "Cyclo"]:
        if isinstance(other, (int, np.integer)):
            return self, Cyclo.from_int(self.m, int(other))
        if isinstance(other, Cyclo):
            if other.m == self.m:
                return self, other
            M = self.m * other.m // gcd(self.m, other.m)
            return self.lift(M), other.lift(M)
        return NotImplemented

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        return Cyclo(a.m, a.array + b.array)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.m, -self.array)

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        return Cyclo(a.m, a.array - b.array)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        return Cyclo(a.m, nf_from_powers(np.convolve(a.array, b.array), a.m))

    __rmul__ = __mul__

    def conj(self) -> "Cyclo":
        return Cyclo(self.m, self.array @ conj_matrix(self.m))

    def __eq__(self, other) -> bool:
        pair = self._coerce(other) if isinstance(other, (int, np.integer, Cyclo)) else NotImplemented
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        # consistent with == among values sharing m, and with int for rationals
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.m, self.coeffs))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def is_real(self) -> bool:
        return self == self.conj()

    def __int__(self) -> int:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def __complex__(self) -> complex:
        return sum(c * cmath.exp(2j * cmath.pi * k / self.m) for k, c in enumerate(self.coeffs))

    def divexact(self, n: int) -> "Cyclo":
        if any(c % n for c in self.coeffs):
            raise ArithmeticError(f"{self!r} is not divisible by {n}")
        return Cyclo(self.m, [c // n for c in self.coeffs])

    def key(self) -> tuple[int, ...]:
        return self.coeffs

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else (f"z{self.m}" if k == 1 else f"z{self.m}^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"
