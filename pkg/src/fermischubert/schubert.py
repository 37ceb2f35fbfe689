"""Schubert classes on G(k, N) as elements of the fermionic algebra.

``omega[i][j] = sum_s psi[s, i] psibar[s, j]`` are the entries of the k x k
matrix Phi.  The coefficients of ``det(I + t Phi)`` give ``tau_1 .. tau_k``,
the images of the Chern classes ``c_i(S^*)``, and an integral over the
Grassmannian is a Berezin integral rescaled by

    prod_{j=0}^{k-1} j!  /  prod_{j=N-k}^{N-1} j!
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import grassmann
from .grassmann import DomainError, Element, GrassmannContext

Partition = tuple[int, ...]


def as_partition(parts: Iterable[int], ctx: GrassmannContext | None = None) -> Partition:
    """Canonical partition tuple (trailing zeros dropped), optionally box-checked."""
    a = tuple(int(p) for p in parts)
    if any(p < 0 for p in a):
        raise DomainError(f"partition {a} has negative parts")
    if any(a[i] < a[i + 1] for i in range(len(a) - 1)):
        raise DomainError(f"partition {a} is not weakly decreasing")
    a = tuple(p for p in a if p)
    if ctx is not None and (len(a) > ctx.k or (a and a[0] > ctx.num_sheets)):
        raise DomainError(
            f"partition {a} does not fit the {ctx.k}x{ctx.num_sheets} box of G({ctx.k},{ctx.N})"
        )
    return a


def conjugate(a: Partition) -> Partition:
    if not a:
        return ()
    return tuple(sum(1 for p in a if p > c) for c in range(a[0]))


def permutation_sign(perm: Sequence[int]) -> int:
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inv % 2 else 1


@dataclass(frozen=True)
class OmegaTable:
    ctx: GrassmannContext
    entries: tuple[tuple[Element, ...], ...]

    def __getitem__(self, ij: tuple[int, int]) -> Element:
        i, j = ij
        return self.entries[i - 1][j - 1]


@dataclass(frozen=True)
class TauBasis:
    """``tau_0 .. tau_k``; indices outside that range read as zero."""

    ctx: GrassmannContext
    taus: tuple[Element, ...]

    def __getitem__(self, m: int) -> Element:
        if 0 <= m < len(self.taus):
            return self.taus[m]
        return self.ctx.zero()


def build_omega(ctx: GrassmannContext, i: int, j: int) -> Element:
    if not (1 <= i <= ctx.k and 1 <= j <= ctx.k):
        raise DomainError(f"omega indices ({i},{j}) outside 1..{ctx.k}")
    terms = {}
    for s in range(1, ctx.num_sheets + 1):
        a = 1 << ctx.bit(s, i)
        b = 1 << ctx.bit(s, j, barred=True)
        sign, m = grassmann.monomial_mul(a, b)
        terms[m] = sign
    return Element(terms, ctx.dim_top)


@lru_cache(maxsize=None)
def omega_table(ctx: GrassmannContext) -> OmegaTable:
    return OmegaTable(
        ctx,
        tuple(tuple(build_omega(ctx, i, j) for j in range(1, ctx.k + 1)) for i in range(1, ctx.k + 1)),
    )


def principal_minor(omegas: OmegaTable, rows: Sequence[int]) -> Element:
    """Determinant of Phi restricted to ``rows`` by permutation expansion."""
    ctx = omegas.ctx
    total = ctx.zero()
    for perm in itertools.permutations(range(len(rows))):
        term = ctx.one()
        for u, v in enumerate(perm):
            term = term * omegas[rows[u], rows[v]]
        total = total + term.scale(permutation_sign(perm))
    return total


def build_tau(ctx: GrassmannContext, omegas: OmegaTable, m: int) -> Element:
    """Sum of the m x m principal minors of Phi."""
    if not 0 <= m <= ctx.k:
        raise DomainError(f"tau index {m} outside 0..{ctx.k}")
    if m == 0:
        return ctx.one()
    total = ctx.zero()
    for rows in itertools.combinations(range(1, ctx.k + 1), m):
        total = total + principal_minor(omegas, rows)
    return total


@lru_cache(maxsize=None)
def tau_basis(ctx: GrassmannContext) -> TauBasis:
    omegas = omega_table(ctx)
    return TauBasis(ctx, tuple(build_tau(ctx, omegas, m) for m in range(ctx.k + 1)))


@lru_cache(maxsize=None)
def tr_phi(ctx: GrassmannContext) -> Element:
    om = omega_table(ctx)
    total = ctx.zero()
    for i in range(1, ctx.k + 1):
        total = total + om[i, i]
    return total


@lru_cache(maxsize=None)
def tr_phi_squared(ctx: GrassmannContext) -> Element:
    om = omega_table(ctx)
    total = ctx.zero()
    for i in range(1, ctx.k + 1):
        for j in range(1, ctx.k + 1):
            total = total + om[i, j] * om[j, i]
    return total


def normalization_constant(k: int, N: int) -> Fraction:
    GrassmannContext(k, N)
    num = math.prod(math.factorial(j) for j in range(k))
    den = math.prod(math.factorial(j) for j in range(N - k, N))
    return Fraction(num, den)


def jacobi_trudi_tau(a: Partition, k: int) -> dict[tuple[int, ...], int]:
    """Dual Jacobi-Trudi expansion ``det(tau_{a'_u - u + v})`` as tau-monomials.

    Keys are descending tuples of tau indices (tau_0 = 1 is dropped); values
    are integer coefficients.
    """
    conj = conjugate(a)
    n = len(conj)
    out: dict[tuple[int, ...], int] = {}
    for perm in itertools.permutations(range(n)):
        idx = []
        for u, v in enumerate(perm):
            m = conj[u] - u + v
            if m < 0 or m > k:
                break
            if m:
                idx.append(m)
        else:
            key = tuple(sorted(idx, reverse=True))
            out[key] = out.get(key, 0) + permutation_sign(perm)
    return {key: c for key, c in out.items() if c}


@lru_cache(maxsize=None)
def _tau_product(ctx: GrassmannContext, indices: tuple[int, ...]) -> Element:
    if not indices:
        return ctx.one()
    return _tau_product(ctx, indices[:-1]) * tau_basis(ctx)[indices[-1]]


def tau_product(ctx: GrassmannContext, indices: Iterable[int]) -> Element:
    """``prod tau_m`` over ``indices`` (tau elements commute, so order is free)."""
    return _tau_product(ctx, tuple(sorted(indices, reverse=True)))


def _split_by_degree(indices: tuple[int, ...]) -> int:
    total = sum(indices)
    best, best_gap, acc = 0, total, 0
    for pos, m in enumerate(indices, 1):
        acc += m
        gap = abs(total - 2 * acc)
        if gap < best_gap:
            best, best_gap = pos, gap
    return best


def tau_monomial_integral(ctx: GrassmannContext, indices: Iterable[int], stats: dict | None = None) -> int:
    """Berezin integral of ``prod tau_m``, paired from two half-degree products."""
    key = tuple(sorted(indices, reverse=True))
    if 2 * sum(key) != ctx.dim_top:
        return 0
    if stats is None:
        return _tau_monomial_integral(ctx, key)
    cut = _split_by_degree(key)
    left, right = _tau_product(ctx, key[:cut]), _tau_product(ctx, key[cut:])
    stats["peak_terms"] = max(stats.get("peak_terms", 0), len(left), len(right))
    return grassmann.berezin_pairing(left, right)


@lru_cache(maxsize=None)
def _tau_monomial_integral(ctx: GrassmannContext, key: tuple[int, ...]) -> int:
    cut = _split_by_degree(key)
    return grassmann.berezin_pairing(_tau_product(ctx, key[:cut]), _tau_product(ctx, key[cut:]))


def schubert_class(ctx: GrassmannContext, taus: TauBasis, a: Iterable[int]) -> Element:
    """The class dual to the Schubert cycle of ``a`` as an algebra element."""
    a = as_partition(a, ctx)
    total = ctx.zero()
    for key, c in jacobi_trudi_tau(a, ctx.k).items():
        term = ctx.one()
        for m in key:
            term = term * taus[m]
        total = total + term.scale(c)
    return total


def class_in_tau(ctx: GrassmannContext, classes: Sequence[Iterable[int]]) -> dict[tuple[int, ...], int]:
    """Product of several classes as a polynomial in the tau basis."""
    poly: dict[tuple[int, ...], int] = {(): 1}
    for a in classes:
        expansion = jacobi_trudi_tau(as_partition(a, ctx), ctx.k)
        nxt: dict[tuple[int, ...], int] = {}
        for k1, c1 in poly.items():
            for k2, c2 in expansion.items():
                key = tuple(sorted(k1 + k2, reverse=True))
                nxt[key] = nxt.get(key, 0) + c1 * c2
        poly = {key: c for key, c in nxt.items() if c}
    return poly


def integrate_product(
    ctx: GrassmannContext, classes: Sequence[Iterable[int]], stats: dict | None = None
) -> Fraction:
    """Intersection number of the given Schubert classes via the fermion integral."""
    parts = [as_partition(a, ctx) for a in classes]
    if sum(sum(a) for a in parts) != ctx.k * ctx.num_sheets:
        return Fraction(0)
    raw = sum(c * tau_monomial_integral(ctx, key, stats) for key, c in class_in_tau(ctx, parts).items())
    value = normalization_constant(ctx.k, ctx.N) * raw
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral intersection number {value} on G({ctx.k},{ctx.N})")
    return value


def berezin_p(ctx: GrassmannContext, m: int) -> int:
    """``P_m``: Berezin integral of ``(tr Phi)^(k(N-k)-2m) (tr Phi^2)^m``."""
    e = ctx.k * ctx.num_sheets - 2 * m
    if m < 0 or e < 0:
        raise DomainError(f"P_{m} on G({ctx.k},{ctx.N}) requires kN-k^2-{2 * m} >= 0")
    return grassmann.berezin_pairing(tr_phi(ctx) ** e, tr_phi_squared(ctx) ** m)


def omega_pair_identity(ctx: GrassmannContext, i: int, j: int) -> int:
    """Integral of (full blocks of colors != i,j)(w^ii w^jj)^(N-k-1) w^ij w^ji."""
    if i == j or not (1 <= i <= ctx.k and 1 <= j <= ctx.k):
        raise DomainError(f"need two distinct colors in 1..{ctx.k}, got ({i},{j})")
    om = omega_table(ctx)
    block = 0
    for n in range(1, ctx.k + 1):
        if n in (i, j):
            continue
        for s in range(1, ctx.num_sheets + 1):
            block |= (1 << ctx.bit(s, n)) | (1 << ctx.bit(s, n, barred=True))
    # adjacent psi psibar pairs are even, so the block is an ascending product
    left = Element.monomial(block, ctx.dim_top)
    right = (om[i, i] * om[j, j]) ** (ctx.num_sheets - 1) * om[i, j] * om[j, i]
    return grassmann.berezin_pairing(left, right)


def q_restricted(ctx: GrassmannContext) -> tuple[int, int, int]:
    """The three pieces Q1, Q2, Q3 of P_2, each as a direct Berezin sum.

    Q1 collects (w^ii w^jj)^2, Q2 the mixed (w^mm)^2 w^ij w^ji with i != j,
    Q3 the products w^ab w^ba w^ij w^ji with a != b and i != j.
    """
    e = ctx.k * ctx.num_sheets - 4
    if e < 0:
        raise DomainError(f"Q decomposition on G({ctx.k},{ctx.N}) requires kN-k^2-4 >= 0")
    om = omega_table(ctx)
    power = tr_phi(ctx) ** e
    colors = range(1, ctx.k + 1)
    pairs = [(i, j) for i in colors for j in colors if i != j]

    def integral(x: Element) -> int:
        return grassmann.berezin_pairing(power, x)

    q1 = sum(integral((om[i, i] * om[j, j]) ** 2) for i in colors for j in colors)
    loops = {(i, j): om[i, j] * om[j, i] for i, j in pairs}
    q2 = 2 * sum(integral(om[m, m] ** 2 * loops[i, j]) for m in colors for i, j in pairs)
    q3 = sum(integral(loops[a, b] * loops[i, j]) for a, b in pairs for i, j in pairs)
    return q1, q2, q3


def clear_caches():
    for f in (omega_table, tau_basis, tr_phi, tr_phi_squared, _tau_product, _tau_monomial_integral):
        f.cache_clear()
