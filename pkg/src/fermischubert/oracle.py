"""Combinatorial Schubert calculus on G(k, N), with no fermions involved.

Classes are integer combinations of partitions inside the k x (N-k) box.
Multiplication by ``e_m = sigma_{1^m}`` is the dual Pieri rule (add a vertical
strip of m boxes, drop anything leaving the box), and a general class is
written in the ``e`` basis through the dual Jacobi-Trudi determinant.  The
intersection number is the coefficient of the full box.

Nothing in this module is shared with the fermionic code path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class OracleError(ValueError):
    pass


@dataclass(frozen=True)
class Box:
    k: int
    N: int

    def __post_init__(self):
        if not 1 <= self.k < self.N:
            raise OracleError(f"need 1 <= k < N, got k={self.k}, N={self.N}")

    @property
    def width(self) -> int:
        return self.N - self.k

    def normalize(self, parts: Iterable[int]) -> tuple[int, ...]:
        """Fixed-length (k entries) partition, validated against the box."""
        a = [int(p) for p in parts]
        while a and a[-1] == 0:
            a.pop()
        if any(p < 0 for p in a) or any(x < y for x, y in zip(a, a[1:])):
            raise OracleError(f"{tuple(a)} is not a partition")
        if len(a) > self.k or (a and a[0] > self.width):
            raise OracleError(f"{tuple(a)} does not fit the {self.k}x{self.width} box")
        return tuple(a + [0] * (self.k - len(a)))

    def full(self) -> tuple[int, ...]:
        return (self.width,) * self.k

    def empty(self) -> tuple[int, ...]:
        return (0,) * self.k

    def partitions(self, weight: int | None = None):
        """All partitions in the box, optionally of one weight."""
        def rec(i, cap):
            if i == self.k:
                yield ()
                return
            for p in range(cap, -1, -1):
                for rest in rec(i + 1, p):
                    yield (p,) + rest
        for a in rec(0, self.width):
            if weight is None or sum(a) == weight:
                yield a


@dataclass
class BoxClass:
    box: Box
    coeffs: dict[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for a, c in self.coeffs.items():
            a = self.box.normalize(a)
            if c:
                clean[a] = clean.get(a, 0) + c
        self.coeffs = {a: c for a, c in clean.items() if c}
        weights = {sum(a) for a in self.coeffs}
        if len(weights) > 1:
            raise OracleError(f"class is not homogeneous (weights {sorted(weights)})")

    @classmethod
    def unit(cls, box: Box) -> "BoxClass":
        return cls(box, {box.empty(): 1})

    def __eq__(self, other):
        return isinstance(other, BoxClass) and self.box == other.box and self.coeffs == other.coeffs

    def __getitem__(self, a) -> int:
        return self.coeffs.get(self.box.normalize(a), 0)


def _vertical_strips(a: tuple[int, ...], m: int, width: int):
    k = len(a)
    for rows in itertools.combinations(range(k), m):
        b = list(a)
        for r in rows:
            b[r] += 1
        if b[0] > width:
            continue
        if all(b[i] >= b[i + 1] for i in range(k - 1)):
            yield tuple(b)


def pieri_e(m: int, c: BoxClass) -> BoxClass:
    """Multiply by ``sigma_{1^m}``: add vertical m-strips inside the box."""
    box = c.box
    if not 1 <= m <= box.k:
        raise OracleError(f"e_{m} undefined on G({box.k},{box.N}); need 1 <= m <= {box.k}")
    out: dict[tuple[int, ...], int] = {}
    for a, coeff in c.coeffs.items():
        for b in _vertical_strips(a, m, box.width):
            out[b] = out.get(b, 0) + coeff
    return BoxClass(box, out)


def _conjugate(a: Sequence[int]) -> list[int]:
    top = a[0] if a else 0
    return [sum(1 for p in a if p > col) for col in range(top)]


def schur_in_e(a: Sequence[int], box: Box) -> dict[tuple[int, ...], int]:
    """``sigma_a`` as a signed combination of products of ``e_m``.

    Keys are multisets of indices stored as ascending tuples.
    """
    a = box.normalize(a)
    conj = _conjugate(a)
    n = len(conj)
    out: dict[tuple[int, ...], int] = {}
    for perm in itertools.permutations(range(n)):
        entries = [conj[u] - u + perm[u] for u in range(n)]
        if any(e < 0 or e > box.k for e in entries):
            continue
        inversions = sum(1 for x, y in itertools.combinations(perm, 2) if x > y)
        key = tuple(sorted(e for e in entries if e > 0))
        out[key] = out.get(key, 0) + (-1) ** inversions
    return {key: c for key, c in out.items() if c}


def apply_e_chain(indices: Iterable[int], c: BoxClass) -> BoxClass:
    for m in indices:
        c = pieri_e(m, c)
    return c


def multiply_class(a: Sequence[int], c: BoxClass) -> BoxClass:
    """``sigma_a * c`` via the e-expansion of ``sigma_a``."""
    box = c.box
    total: dict[tuple[int, ...], int] = {}
    for key, coeff in schur_in_e(a, box).items():
        for b, v in apply_e_chain(key, c).coeffs.items():
            total[b] = total.get(b, 0) + coeff * v
    return BoxClass(box, total)


def oracle_intersection(k: int, N: int, classes: Sequence[Sequence[int]]) -> int:
    box = Box(k, N)
    parts = [box.normalize(a) for a in classes]
    if sum(sum(a) for a in parts) != k * (N - k):
        return 0
    c = BoxClass.unit(box)
    for a in parts:
        c = multiply_class(a, c)
    return c.coeffs.get(box.full(), 0)


def complement_dual(k: int, N: int, a: Sequence[int]) -> tuple[int, ...]:
    box = Box(k, N)
    a = box.normalize(a)
    return tuple(box.width - a[k - 1 - i] for i in range(k))
