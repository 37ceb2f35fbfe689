"""Closed formulas for intersection numbers of sigma_1 and sigma_{1,1} on G(k, N).

Every function here works with exact integers and ``Fraction``; divisions are
done last and must come out integral where an integer is promised.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .grassmann import DomainError


class FormulaId(enum.Enum):
    THEO1_1 = "theo1_1"
    THEO1_2 = "theo1_2"
    THEO1_3 = "theo1_3"
    P0 = "p0"
    P1 = "p1"
    P2 = "p2"
    Q1 = "q1"
    Q2 = "q2"
    Q3 = "q3"
    G2N_FAMILY = "g2n_family"
    NORM_CONST = "norm_const"


@dataclass(frozen=True)
class FormulaResult:
    formula_id: FormulaId
    value: Fraction


def _check_kn(k: int, N: int):
    if not (isinstance(k, int) and isinstance(N, int)) or not 1 <= k < N:
        raise DomainError(f"G(k,N) requires integers 1 <= k < N, got k={k}, N={N}")


def _dimension(k: int, N: int) -> int:
    return k * N - k * k


def _require(k: int, N: int, shift: int):
    _check_kn(k, N)
    if _dimension(k, N) - shift < 0:
        raise DomainError(f"requires kN-k^2-{shift} >= 0 (k={k}, N={N})")


def _exact(value: Fraction) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {value}")
    return value.numerator


def norm_const(k: int, N: int) -> Fraction:
    _check_kn(k, N)
    return Fraction(
        math.prod(math.factorial(j) for j in range(k)),
        math.prod(math.factorial(j) for j in range(N - k, N)),
    )


def theo1_sigma1_power(k: int, N: int) -> int:
    """Degree of G(k, N): integral of sigma_1^(k(N-k))."""
    _check_kn(k, N)
    return _exact(math.factorial(_dimension(k, N)) * norm_const(k, N))


def theo1_one_sigma2(k: int, N: int) -> int:
    """Integral of sigma_1^(k(N-k)-2) sigma_{1,1}."""
    _require(k, N, 2)
    d = _dimension(k, N)
    num = math.factorial(d - 2) * (N - k) * (N - k + 1) * k * (k - 1)
    return _exact(Fraction(num, 2) * norm_const(k, N))


def theo1_two_sigma2(k: int, N: int) -> int:
    """Integral of sigma_1^(k(N-k)-4) sigma_{1,1}^2."""
    _require(k, N, 4)
    d = _dimension(k, N)
    bracket = (
        k * (k - 1) * (N - k) * (N - k - 1)
        + 2 * (k - 2) * (k - 3) * (N - k)
        + 4 * (k - 2) * (N - k - 1)
    )
    num = math.factorial(d - 4) * (N - k) * (N - k + 1) * k * (k - 1) * bracket
    return _exact(Fraction(num, 4) * norm_const(k, N))


def prop1_p0(k: int, N: int) -> int:
    _check_kn(k, N)
    return math.factorial(_dimension(k, N))


def prop1_p1(k: int, N: int) -> int:
    _require(k, N, 2)
    return math.factorial(_dimension(k, N) - 2) * k * (N - k) * (N - 2 * k)


def prop1_p2(k: int, N: int) -> int:
    _require(k, N, 4)
    r = N - k
    bracket = k * r**3 - 2 * r**2 * (k * k + 2) + r * (k**3 + 10 * k) - 4 * k * k - 2
    return math.factorial(_dimension(k, N) - 4) * k * r * bracket


def q_decomposition(k: int, N: int) -> tuple[int, int, int]:
    """The closed forms of Q1, Q2, Q3 (their sum is P2)."""
    _require(k, N, 4)
    f = math.factorial(_dimension(k, N) - 4)
    r = N - k
    q1 = f * k * r * ((r - 1) * (r - 2) * (r - 3) + (k - 1) * r * (r - 1) ** 2)
    q2 = f * k * r * (k - 1) * (-4 * (r - 1) * (r - 2) - 2 * r * (r - 1) * (k - 2))
    q3 = f * k * r * (4 * (k - 1) ** 2 * (r - 1) + (k - 1) * (k - 2) * (k - 3) * r)
    return q1, q2, q3


def g2n_family(N: int, l: int) -> int:
    """Integral of sigma_1^(2N-4-2l) sigma_{1,1}^l on G(2, N)."""
    if not (isinstance(N, int) and isinstance(l, int)) or N < 2 or not 0 <= l <= N - 2:
        raise DomainError(f"g2n family requires N >= 2 and 0 <= l <= N-2, got N={N}, l={l}")
    n = N - 2 - l
    return _exact(Fraction(math.factorial(2 * n), math.factorial(n) * math.factorial(n + 1)))


def evaluate(formula_id: FormulaId, *args: int) -> FormulaResult:
    """Evaluate any formula by id; Q1..Q3 take ``(k, N)``, G2N_FAMILY takes ``(N, l)``."""
    table = {
        FormulaId.THEO1_1: theo1_sigma1_power,
        FormulaId.THEO1_2: theo1_one_sigma2,
        FormulaId.THEO1_3: theo1_two_sigma2,
        FormulaId.P0: prop1_p0,
        FormulaId.P1: prop1_p1,
        FormulaId.P2: prop1_p2,
        FormulaId.Q1: lambda k, N: q_decomposition(k, N)[0],
        FormulaId.Q2: lambda k, N: q_decomposition(k, N)[1],
        FormulaId.Q3: lambda k, N: q_decomposition(k, N)[2],
        FormulaId.G2N_FAMILY: g2n_family,
        FormulaId.NORM_CONST: norm_const,
    }
    return FormulaResult(formula_id, Fraction(table[formula_id](*args)))


def closed_form_for(k: int, N: int, ones: int, pairs: int) -> int | None:
    """Closed form for sigma_1^ones sigma_{1,1}^pairs when one is known, else None.

    Raises DomainError when the exponent pattern matches a formula whose
    hypothesis fails.
    """
    _check_kn(k, N)
    d = _dimension(k, N)
    if ones + 2 * pairs != d:
        return None
    if pairs == 0:
        return theo1_sigma1_power(k, N)
    if pairs == 1:
        return theo1_one_sigma2(k, N)
    if pairs == 2:
        return theo1_two_sigma2(k, N)
    if k == 2:
        return g2n_family(N, pairs)
    return None
