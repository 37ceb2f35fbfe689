"""Cross-validation checks run by ``fermischubert verify``.

Each check compares two exact values computed along independent routes.  A
check that raises is recorded as a failure rather than propagated.
"""

from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import closed_forms as cf
from . import oracle, schubert
from .grassmann import context_new

log = logging.getLogger(__name__)

CONTEXTS = [(1, 3), (2, 4), (2, 5), (3, 5), (2, 6), (3, 6), (2, 7), (3, 7), (4, 8)]
LEVEL_MAX_DIM = {"quick": 12, "full": 18}


@dataclass
class CheckResult:
    id: str
    status: str
    lhs: str = ""
    rhs: str = ""
    elapsed: float = 0.0
    detail: str = ""


@dataclass
class VerifyReport:
    level: str
    checks: list[CheckResult] = field(default_factory=list)

    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "skipped": 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return self.counts()["fail"] == 0

    def as_dict(self) -> dict:
        return {
            "level": self.level,
            "checks": [
                {"id": c.id, "status": c.status, "lhs": c.lhs, "rhs": c.rhs,
                 "elapsed": round(c.elapsed, 6), "detail": c.detail}
                for c in self.checks
            ],
            "summary": self.counts(),
        }


@dataclass
class Check:
    id: str
    dim_top: int
    run: Callable[[], tuple[object, object]]


def _checks_for(k: int, N: int) -> list[Check]:
    ctx = context_new(k, N)
    d = k * (N - k)
    tag = f"G({k},{N})"
    out = []

    def add(name, fn):
        out.append(Check(f"{tag}/{name}", ctx.dim_top, fn))

    add("normalization", lambda: (
        schubert.normalization_constant(k, N) * schubert.tau_monomial_integral(ctx, [k] * (N - k)), 1))

    patterns = [("theo1_1", 0, cf.theo1_sigma1_power)]
    if k >= 2 and d >= 2:
        patterns.append(("theo1_2", 1, cf.theo1_one_sigma2))
    if k >= 2 and d >= 4:
        patterns.append(("theo1_3", 2, cf.theo1_two_sigma2))
    for name, pairs, formula in patterns:
        classes = [(1,)] * (d - 2 * pairs) + [(1, 1)] * pairs
        add(f"{name}/berezin=closed",
            lambda c=classes, f=formula: (schubert.integrate_product(ctx, c), f(k, N)))
        add(f"{name}/oracle=closed",
            lambda c=classes, f=formula: (oracle.oracle_intersection(k, N, c), f(k, N)))

    if d >= 2:
        add("prop1_p1", lambda: (schubert.berezin_p(ctx, 1), cf.prop1_p1(k, N)))
    if d >= 4:
        add("prop1_p2", lambda: (schubert.berezin_p(ctx, 2), cf.prop1_p2(k, N)))
        add("qdecomp/sum=p2", lambda: (sum(cf.q_decomposition(k, N)), cf.prop1_p2(k, N)))
        add("qdecomp/restricted", lambda: (schubert.q_restricted(ctx), cf.q_decomposition(k, N)))
    if k >= 2:
        r = N - k
        add("omega_identity", lambda: (
            schubert.omega_pair_identity(ctx, 1, 2), -r * math.factorial(r - 1) ** 2))

        def tau2_identity():
            lhs = schubert.tau_basis(ctx)[2].scale(2)
            rhs = schubert.tr_phi(ctx) ** 2 - schubert.tr_phi_squared(ctx)
            return len(lhs - rhs), 0
        add("tau2_identity", tau2_identity)
    if k == 2:
        for l in range(0, N - 1):
            classes = [(1,)] * (2 * N - 4 - 2 * l) + [(1, 1)] * l
            add(f"g2n/l={l}/berezin", lambda c=classes, l=l: (
                schubert.integrate_product(ctx, c), cf.g2n_family(N, l)))
            add(f"g2n/l={l}/oracle", lambda c=classes, l=l: (
                oracle.oracle_intersection(k, N, c), cf.g2n_family(N, l)))
    if (k, N) in {(2, 4), (2, 5), (3, 6)}:
        add("duality", lambda: (_duality_failures(k, N), 0))
    return out


def _duality_failures(k: int, N: int) -> int:
    ctx = context_new(k, N)
    box = oracle.Box(k, N)
    bad = 0
    for a in box.partitions():
        dual = oracle.complement_dual(k, N, a)
        for b in box.partitions(k * (N - k) - sum(a)):
            want = 1 if b == dual else 0
            if oracle.oracle_intersection(k, N, [a, b]) != want:
                bad += 1
            if schubert.integrate_product(ctx, [a, b]) != want:
                bad += 1
    return bad


def _render(v) -> str:
    if isinstance(v, Fraction) and v.denominator == 1:
        return str(v.numerator)
    return str(v)


def all_checks() -> list[Check]:
    return [c for k, N in CONTEXTS for c in _checks_for(k, N)]


def run_verify(level: str = "quick", budget: float | None = None, max_dim: int | None = None) -> VerifyReport:
    """Run every check up to the level's size cap.

    Checks above the cap, or not started before ``budget`` seconds elapse,
    are reported as skipped.
    """
    if level not in LEVEL_MAX_DIM:
        raise ValueError(f"unknown verify level {level!r}")
    cap = LEVEL_MAX_DIM[level] if max_dim is None else max_dim
    schubert.clear_caches()
    report = VerifyReport(level)
    start = time.perf_counter()
    for check in all_checks():
        if check.dim_top > cap:
            report.checks.append(CheckResult(check.id, "skipped", detail=f"dim_top {check.dim_top} > {cap}"))
            continue
        if budget is not None and time.perf_counter() - start > budget:
            report.checks.append(CheckResult(check.id, "skipped", detail="wall-clock budget exhausted"))
            continue
        t0 = time.perf_counter()
        try:
            lhs, rhs = check.run()
            status = "pass" if lhs == rhs else "fail"
            result = CheckResult(check.id, status, _render(lhs), _render(rhs))
        except Exception as exc:  # a broken check must not abort the run
            result = CheckResult(check.id, "fail", detail=f"{type(exc).__name__}: {exc}")
        result.elapsed = time.perf_counter() - t0
        log.info("%s %s (%.3fs)", result.status, result.id, result.elapsed)
        report.checks.append(result)
    return report
