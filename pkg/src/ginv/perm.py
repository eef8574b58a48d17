"""Permutations of {0, ..., n-1} in one-line notation.

Products follow the left-to-right convention: ``p * q`` applies ``p`` first
and then ``q``, so ``(p * q)(i) == q(p(i))``.  Text input and output use
1-based cycle notation such as ``"(1 2 3)(4 5)"``.
"""
from __future__ import annotations

import re
from math import lcm
from typing import Iterable, Sequence

import numpy as np

__all__ = ["Perm", "parse_cycles", "parse_perm_list", "format_cycles"]


class Perm:
    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        if not images:
            images = (0,)
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(range(max(degree, 1)))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], degree: int | None = None) -> "Perm":
        """Build from 0-based cycles; ``degree`` defaults to the largest point + 1."""
        top = max((max(c) for c in cycles if len(c)), default=-1) + 1
        degree = max(degree or 0, top, 1)
        images = list(range(degree))
        seen = set()
        for cyc in cycles:
            if len(set(cyc)) != len(cyc) or seen & set(cyc):
                raise ValueError(f"cycles are not disjoint: {cycles}")
            seen.update(cyc)
            for a, b in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Perm") -> "Perm":
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return Perm(other.images[i] for i in self.images)

    def __pow__(self, k: int) -> "Perm":
        base = self if k >= 0 else ~self
        out = Perm.identity(self.degree)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __invert__(self) -> "Perm":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(inv)

    inverse = __invert__

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Perm") -> bool:
        return self.images < other.images

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point."""
        seen = [False] * self.degree
        out = []
        for i in range(self.degree):
            if seen[i]:
                continue
            cyc = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths including fixed points, non-increasing."""
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (self.degree - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    def order(self) -> int:
        return lcm(*self.cycle_type())

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def as_array(self) -> np.ndarray:
        return np.asarray(self.images, dtype=np.int32)

    def __repr__(self) -> str:
        return f"Perm({format_cycles(self)!r})"

    def __str__(self) -> str:
        return format_cycles(self)


def format_cycles(p: Perm) -> str:
    """1-based cycle notation; the identity prints as ``()``."""
    cyc = p.cycles()
    if not cyc:
        return "()"
    return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cyc)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int | None = None) -> Perm:
    """Parse 1-based cycle notation, e.g. ``"(1 2 3)(4 5)"`` or ``"(1,2)"``."""
    s = text.strip()
    if not s:
        raise ValueError("empty permutation text")
    pos = 0
    cycles = []
    for m in _CYCLE_RE.finditer(s):
        if s[pos:m.start()].strip():
            raise ValueError(f"could not parse permutation {text!r}")
        pos = m.end()
        body = m.group(1).replace(",", " ").split()
        try:
            pts = [int(t) - 1 for t in body]
        except ValueError:
            raise ValueError(f"could not parse permutation {text!r}") from None
        if any(p < 0 for p in pts):
            raise ValueError(f"points are 1-based: {text!r}")
        if len(pts) > 1:
            cycles.append(pts)
    if s[pos:].strip() or pos == 0:
        raise ValueError(f"could not parse permutation {text!r}")
    # cycles in a product need not be disjoint; multiply left to right
    top = max((max(c) for c in cycles), default=-1) + 1
    n = max(degree or 0, top, 1)
    out = Perm.identity(n)
    for c in cycles:
        out = out * Perm.from_cycles([c], n)
    return out


def parse_perm_list(text: str, degree: int | None = None) -> list[Perm]:
    """Parse comma-separated permutations; commas inside parentheses are kept."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced parentheses in {text!r}")
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise ValueError(f"unbalanced parentheses in {text!r}")
    parts.append("".join(cur))
    parts = [p for p in (q.strip() for q in parts) if p]
    if not parts:
        return []
    perms = [parse_cycles(p) for p in parts]
    n = max([degree or 0] + [p.degree for p in perms])
    return [Perm(list(p.images) + list(range(p.degree, n))) for p in perms]
