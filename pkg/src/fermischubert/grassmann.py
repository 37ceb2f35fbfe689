"""Exact arithmetic in a finite Grassmann (exterior) algebra.

The algebra for G(k, N) is generated by the 2k(N-k) anticommuting variables
``psi[s, j]`` and ``psibar[s, j]`` with sheet ``s`` in 1..N-k and color ``j``
in 1..k.  A monomial is a Python ``int`` used as a bit set: bit ``p`` set means
the generator at position ``p`` is present, and the monomial is the product of
its generators taken in ascending bit order.  Positions are laid out
sheet-major, then color, unbarred before barred::

    bit(s, j, barred) = 2k(s-1) + 2(j-1) + barred

With this layout the ascending product of every generator is exactly
``psi[1,1] psibar[1,1] psi[1,2] psibar[1,2] ...``, the reference top form whose
Berezin integral is 1, so integration is a plain coefficient lookup.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


@dataclass(frozen=True)
class GrassmannContext:
    """Derived constants of the fermionic model of G(k, N)."""

    k: int
    N: int
    num_sheets: int = field(init=False)
    dim_top: int = field(init=False)
    top_mask: int = field(init=False)

    def __post_init__(self):
        if not (isinstance(self.k, int) and isinstance(self.N, int)):
            raise DomainError(f"k and N must be integers, got {self.k!r}, {self.N!r}")
        if not 1 <= self.k < self.N:
            raise DomainError(f"G(k,N) requires 1 <= k < N, got k={self.k}, N={self.N}")
        object.__setattr__(self, "num_sheets", self.N - self.k)
        object.__setattr__(self, "dim_top", 2 * self.k * (self.N - self.k))
        object.__setattr__(self, "top_mask", (1 << self.dim_top) - 1)

    def bit(self, s: int, j: int, barred: bool = False) -> int:
        """Bit position of ``psi[s, j]`` (or ``psibar[s, j]``)."""
        if not 1 <= s <= self.num_sheets:
            raise DomainError(f"sheet {s} outside 1..{self.num_sheets}")
        if not 1 <= j <= self.k:
            raise DomainError(f"color {j} outside 1..{self.k}")
        return 2 * self.k * (s - 1) + 2 * (j - 1) + (1 if barred else 0)

    def generator(self, bit: int) -> tuple[bool, int, int]:
        """Inverse of :meth:`bit`: ``(barred, sheet, color)``."""
        if not 0 <= bit < self.dim_top:
            raise DomainError(f"bit {bit} outside 0..{self.dim_top - 1}")
        s, rest = divmod(bit, 2 * self.k)
        j, barred = divmod(rest, 2)
        return bool(barred), s + 1, j + 1

    def psi(self, s: int, j: int) -> "Element":
        return Element.monomial(1 << self.bit(s, j), self.dim_top)

    def psibar(self, s: int, j: int) -> "Element":
        return Element.monomial(1 << self.bit(s, j, barred=True), self.dim_top)

    def one(self) -> "Element":
        return Element.monomial(0, self.dim_top)

    def zero(self) -> "Element":
        return Element({}, self.dim_top)


def context_new(k: int, N: int) -> GrassmannContext:
    return GrassmannContext(k, N)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def degree(mask: int) -> int:
    return mask.bit_count()


def suffix_parity(mask: int) -> int:
    """Bit ``g`` of the result is the parity of the set bits of ``mask`` above ``g``.

    ``(suffix_parity(a) & b).bit_count() & 1`` is then the parity of the
    number of transpositions needed to merge the ascending sequences ``a`` and
    ``b`` when ``a`` stands to the left of ``b``.
    """
    y = mask >> 1
    n = y.bit_length()
    shift = 1
    while shift < n:
        y ^= y >> shift
        shift <<= 1
    return y


def monomial_mul(a: int, b: int) -> tuple[int, int]:
    """Product of two monomials as ``(coefficient, mask)``.

    The coefficient is 0 when a generator repeats, otherwise ``(-1)**I`` with
    ``I`` the number of pairs ``(h in a, g in b)`` with ``h > g``.
    """
    if a & b:
        return 0, a | b
    sign = -1 if (suffix_parity(a) & b).bit_count() & 1 else 1
    return sign, a | b


def naive_sign(a: int, b: int) -> int:
    """Bubble-sort sign of the concatenated generator list; reference for tests."""
    seq = list(_bits(a)) + list(_bits(b))
    if len(set(seq)) != len(seq):
        return 0
    swaps = 0
    seq = seq[:]
    for i in range(len(seq)):
        for j in range(len(seq) - 1 - i):
            if seq[j] > seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                swaps += 1
    return -1 if swaps % 2 else 1


class Element:
    """Sparse integer linear combination of monomials.

    Values are treated as immutable: every operation returns a new element and
    zero coefficients are never stored, so ``==`` is structural.
    """

    __slots__ = ("terms", "width")

    def __init__(self, terms: Mapping[int, int] | Iterable[int], width: int):
        if not isinstance(terms, Mapping):
            terms = {m: 1 for m in terms}
        limit = 1 << width
        clean = {}
        for m, c in terms.items():
            if not 0 <= m < limit:
                raise DomainError(f"monomial {m:#x} does not fit in {width} generators")
            if c:
                clean[m] = int(c)
        self.terms: dict[int, int] = clean
        self.width = width

    @classmethod
    def monomial(cls, mask: int, width: int, coeff: int = 1) -> "Element":
        return cls({mask: coeff}, width)

    @classmethod
    def _raw(cls, terms: dict[int, int], width: int) -> "Element":
        # caller guarantees canonical terms
        e = cls.__new__(cls)
        e.terms = terms
        e.width = width
        return e

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = Element.monomial(0, self.width, other)
        if not isinstance(other, Element):
            return NotImplemented
        return self.width == other.width and self.terms == other.terms

    def __hash__(self):
        return hash((self.width, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "Element(0)"
        body = " + ".join(f"{c}*[{m:#x}]" for m, c in sorted(self.terms.items()))
        return f"Element({body})"

    def _check(self, other: "Element"):
        if self.width != other.width:
            raise DomainError(f"elements from different algebras ({self.width} vs {other.width} generators)")

    def degrees(self) -> set[int]:
        return {m.bit_count() for m in self.terms}

    def is_even(self) -> bool:
        return all(m.bit_count() % 2 == 0 for m in self.terms)

    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Element._raw(out, self.width)

    def __neg__(self) -> "Element":
        return Element._raw({m: -c for m, c in self.terms.items()}, self.width)

    def __sub__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def scale(self, alpha: int) -> "Element":
        if not alpha:
            return Element._raw({}, self.width)
        return Element._raw({m: alpha * c for m, c in self.terms.items()}, self.width)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        out: dict[int, int] = {}
        get = out.get
        right = list(other.terms.items())
        for ma, ca in self.terms.items():
            sa = suffix_parity(ma)
            for mb, cb in right:
                if ma & mb:
                    continue
                m = ma | mb
                if (sa & mb).bit_count() & 1:
                    out[m] = get(m, 0) - ca * cb
                else:
                    out[m] = get(m, 0) + ca * cb
        return Element._raw({m: c for m, c in out.items() if c}, self.width)

    def __rmul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "Element":
        if not isinstance(n, int) or n < 0:
            raise DomainError(f"exponent must be a nonnegative integer, got {n!r}")
        result = Element.monomial(0, self.width)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def coefficient(self, mask: int) -> int:
        return self.terms.get(mask, 0)

    def berezin(self) -> int:
        """Coefficient of the top form, i.e. the fermion integral."""
        return self.terms.get((1 << self.width) - 1, 0)


def elem_add(x: Element, y: Element) -> Element:
    return x + y


def elem_mul(x: Element, y: Element) -> Element:
    return x * y


def elem_pow(x: Element, n: int) -> Element:
    return x ** n


def berezin_integral(x: Element) -> int:
    return x.berezin()


def berezin_pairing(x: Element, y: Element) -> int:
    """``berezin_integral(x * y)`` without forming the product.

    Only pairs of complementary monomials reach the top form, so the sum runs
    over the smaller of the two term maps with a lookup into the other.
    """
    x._check(y)
    top = (1 << x.width) - 1
    total = 0
    if len(x.terms) <= len(y.terms):
        other = y.terms
        for mx, cx in x.terms.items():
            cy = other.get(top ^ mx)
            if cy:
                p = cx * cy
                total += -p if (suffix_parity(mx) & (top ^ mx)).bit_count() & 1 else p
    else:
        other = x.terms
        for my, cy in y.terms.items():
            mx = top ^ my
            cx = other.get(mx)
            if cx:
                p = cx * cy
                total += -p if (suffix_parity(mx) & my).bit_count() & 1 else p
    return total
