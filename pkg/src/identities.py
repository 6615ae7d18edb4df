#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Exhaustive sweeps comparing wreath-product character values with symmetric
group values on empty-core partitions.

Each sweep walks every r-partite shape of size 1..n against every cycle type,
evaluates both sides independently and collects every disagreement. A failing
case never stops the sweep.

Sweeps:
  rr          psi_lambda(e, ..., e, pi_mu) == sign_r(hat) chi_hat(w_{r mu}), G abelian of order r
  rr-general  psi_lambda(e, ..., e, pi_mu) == d^t sign_r(hat) chi_hat(w_{r mu}), deg chi_i = d on Supp
  main        psi_lambda(a, ..., a, pi_mu) == zeta_r^alpha sign_d(hat) chi_hat(w_{d mu}), G abelian
  main2       the same with lambda supported on the linear characters of any G
  rt          every tableau's color product R_T equals zeta_r^alpha, G abelian
  sign2       sign_2 against the odd-parts formulas
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

from config import DEFAULT_JOBS, DEFAULT_MAX_FAILURES, SCHEMA_VERSION, debug, log
from cyclotomic import CyclotomicInt
from groups import Element, GroupModel, alpha, fiber_partition
from partitions import (
    Composition,
    InvalidInputError,
    Partition,
    RPartitePartition,
    enumerate_compositions,
    enumerate_empty_core,
    enumerate_partitions,
    enumerate_rpartite,
    hat,
    odd_parts,
)
from symchar import chi, sign_r
from wreath import psi, psi_trivial_color, standard_element, tableau_color_products

Value = Union[int, CyclotomicInt]


def value_to_json(value: Value) -> Any:
    if isinstance(value, CyclotomicInt):
        m = value.as_integer()
        if m is not None:
            return m
        return {**value.to_json(), "pretty": value.pretty()}
    return value


@dataclass
class CaseResult:
    index: int
    shape: str
    class_type: str
    lhs: Value
    rhs: Value
    detail: Dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> Dict[str, Any]:
        out = {"shape": self.shape, "class": self.class_type,
               "lhs": value_to_json(self.lhs), "rhs": value_to_json(self.rhs)}
        out.update(self.detail)
        return out


@dataclass
class VerificationReport:
    identity: str
    parameters: Dict[str, Any]
    cases: int = 0
    failures: List[CaseResult] = field(default_factory=list)
    max_failures: int = DEFAULT_MAX_FAILURES
    elapsed: float = 0.0
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self, include_elapsed: bool = True) -> Dict[str, Any]:
        failures = sorted(self.failures, key=lambda f: f.index)
        out: Dict[str, Any] = {
            "schema": SCHEMA_VERSION,
            "identity": self.identity,
            "parameters": self.parameters,
            "cases": self.cases,
            "verdict": self.verdict,
            "failure_count": len(failures),
            "max_failures": self.max_failures,
            "failures": [f.to_dict() for f in failures[: self.max_failures]],
        }
        out.update(self.extra)
        if include_elapsed:
            out["elapsed_seconds"] = round(self.elapsed, 3)
        return out


Case = Tuple[RPartitePartition, Partition]
Check = Callable[[int, Any], CaseResult]


def _run_cases(name: str, cases: Sequence[Any], check: Check, jobs: int) -> List[CaseResult]:
    """Evaluate every case, in parallel when jobs > 1; results come back in case order."""
    log("SWEEP", f"{name}: {len(cases)} case(s), {jobs} worker(s)")
    results: List[CaseResult] = []
    if jobs <= 1 or len(cases) < 2:
        for i, case in enumerate(cases):
            results.append(check(i, case))
            if (i + 1) % 200 == 0:
                debug("SWEEP", f"{name}: {i + 1}/{len(cases)} cases")
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = {pool.submit(check, i, case): i for i, case in enumerate(cases)}
            done = 0
            for future in as_completed(futures):
                results.append(future.result())
                done += 1
                if done % 200 == 0:
                    debug("SWEEP", f"{name}: {done}/{len(cases)} cases")
    results.sort(key=lambda c: c.index)
    return results


def _report(
    name: str,
    parameters: Dict[str, Any],
    results: List[CaseResult],
    started: float,
    max_failures: Optional[int],
    extra: Optional[Dict[str, Any]] = None,
) -> VerificationReport:
    report = VerificationReport(
        identity=name,
        parameters=parameters,
        cases=len(results),
        failures=[r for r in results if not r.ok],
        max_failures=DEFAULT_MAX_FAILURES if max_failures is None else max(0, max_failures),
        elapsed=time.perf_counter() - started,
        extra=extra or {},
    )
    log("SWEEP", f"{name}: {report.cases} case(s), {len(report.failures)} failure(s), {report.elapsed:.2f}s")
    return report


def _shape_class_cases(n: int, arity: int, keep: Callable[[RPartitePartition], bool] = lambda lam: True) -> List[Case]:
    if n < 1:
        raise InvalidInputError(f"Sweeps need n >= 1, got {n}")
    cases: List[Case] = []
    for size in range(1, n + 1):
        classes = enumerate_partitions(size)
        for lam in enumerate_rpartite(size, arity):
            if keep(lam):
                cases.extend((lam, mu) for mu in classes)
    return cases


def _require_abelian(model: GroupModel) -> None:
    if model.linear_count != model.character_count:
        raise InvalidInputError(f"{model.name} does not evaluate every character; use a sweep for linear support")


def symmetric_side(lam: RPartitePartition, mu: Partition, r: int) -> int:
    """sign_r(hat) * chi_hat(w_{r mu}) with hat taken at arity r."""
    big = hat(lam.padded(r))
    return sign_r(big, r) * chi(big, Composition(mu.parts).scaled(r))


# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------

def verify_rr(
    n: int,
    model: GroupModel,
    jobs: int = DEFAULT_JOBS,
    max_failures: Optional[int] = None,
) -> VerificationReport:
    """Identity-colored elements of G wr S_k, k <= n, for abelian G of order r >= 2."""
    _require_abelian(model)
    r = model.group_order
    if r < 2:
        raise InvalidInputError(f"The color group needs order >= 2, got {r}")
    started = time.perf_counter()
    cases = _shape_class_cases(n, model.character_count)

    def check(i: int, case: Case) -> CaseResult:
        lam, mu = case
        lhs = psi(lam, model, standard_element(model, model.identity, mu))
        return CaseResult(i, str(lam), str(mu), lhs, symmetric_side(lam, mu, r))

    results = _run_cases("rr", cases, check, jobs)
    return _report("rr", {"n": n, "group": model.name, "r": r}, results, started, max_failures,
                   {"labelling": model.labelling()})


def verify_rr_general(
    n: int,
    model: GroupModel,
    degree: Optional[int] = None,
    jobs: int = DEFAULT_JOBS,
    max_failures: Optional[int] = None,
) -> VerificationReport:
    """
    For each character degree d (or only the given one), every lambda supported
    on characters of degree d, with d^t the degree factor for t = l(mu).
    """
    r = model.group_order
    degrees = model.degrees
    classes = sorted(set(degrees)) if degree is None else [degree]
    if degree is not None and degree not in degrees:
        raise InvalidInputError(f"{model.name} has no character of degree {degree}")
    started = time.perf_counter()

    cases: List[Tuple[int, RPartitePartition, Partition]] = []
    for d in classes:
        allowed = frozenset(j for j, dj in enumerate(degrees) if dj == d)
        cases.extend((d, lam, mu) for lam, mu in
                     _shape_class_cases(n, model.character_count, lambda lam: lam.support() <= allowed))

    def check(i: int, case: Tuple[int, RPartitePartition, Partition]) -> CaseResult:
        d, lam, mu = case
        lhs = psi_trivial_color(lam, degrees, mu)
        rhs = d ** mu.length * symmetric_side(lam, mu, r)
        return CaseResult(i, str(lam), str(mu), lhs, rhs, {"degree": d})

    results = _run_cases("rr-general", cases, check, jobs)
    per_degree = {str(d): sum(1 for c in cases if c[0] == d) for d in classes}
    return _report("rr-general", {"n": n, "group": model.name, "r": r, "degrees": classes},
                   results, started, max_failures,
                   {"labelling": model.labelling(), "cases_per_degree": per_degree})


def verify_main(
    n: int,
    model: GroupModel,
    a: Element,
    jobs: int = DEFAULT_JOBS,
    max_failures: Optional[int] = None,
) -> VerificationReport:
    """Constant-colored elements (a, ..., a, pi_mu) over an abelian G of order d."""
    _require_abelian(model)
    return _verify_constant_color("main", n, model, a, model.character_count, jobs, max_failures)


def verify_main2(
    n: int,
    model: GroupModel,
    a: Optional[Element] = None,
    jobs: int = DEFAULT_JOBS,
    max_failures: Optional[int] = None,
) -> VerificationReport:
    """
    Constant-colored elements over any G, lambda supported on the linear
    characters; the fibers are computed in G/G'.

    The report also counts, per component index i, the cases where
    psi == zeta_r^{n_i} * sign * chi, which shows which single size drives the twist.
    """
    if a is None:
        a = getattr(model, "distinguished", None)
        if a is None:
            raise InvalidInputError(f"{model.name} has no distinguished element; pass one")
    return _verify_constant_color("main2", n, model, a, model.linear_count, jobs, max_failures)


def _verify_constant_color(
    name: str,
    n: int,
    model: GroupModel,
    a: Element,
    support_arity: int,
    jobs: int,
    max_failures: Optional[int],
) -> VerificationReport:
    d = model.group_order
    fibers = fiber_partition(model, a)
    r = fibers.order
    started = time.perf_counter()
    cases = [(lam.padded(model.character_count), mu) for lam, mu in _shape_class_cases(n, support_arity)]

    def check(i: int, case: Case) -> CaseResult:
        lam, mu = case
        lhs = psi(lam, model, standard_element(model, a, mu))
        base = symmetric_side(lam, mu, d)
        twist = alpha(lam, fibers)
        rhs = CyclotomicInt.zeta(r, twist) * base
        matches = [j for j in range(support_arity)
                   if lhs == CyclotomicInt.zeta(r, lam.sizes[j]) * base]
        return CaseResult(i, str(lam), str(mu), lhs, rhs, {"alpha": twist, "single_index_matches": matches})

    results = _run_cases(name, cases, check, jobs)
    agreement = {f"n_{j}": sum(1 for c in results if j in c.detail["single_index_matches"])
                 for j in range(support_arity)}
    for c in results:
        if c.ok:
            c.detail.pop("single_index_matches")
    return _report(
        name,
        {"n": n, "group": model.name, "d": d, "element": list(a), "r": r},
        results,
        started,
        max_failures,
        {"labelling": model.labelling(), "fibers": fibers.to_json(), "single_index_agreement": agreement},
    )


def verify_color_products(
    n: int,
    model: GroupModel,
    jobs: int = DEFAULT_JOBS,
    max_failures: Optional[int] = None,
) -> VerificationReport:
    """
    R_T == zeta_r^alpha for every tableau T of every shape and every ordered
    weight of size <= n, at every element a of an abelian G. A case is one
    (a, lambda, mu); its lhs is the first R_T that differs, or the twist itself.
    """
    _require_abelian(model)
    if n < 1:
        raise InvalidInputError(f"Sweeps need n >= 1, got {n}")
    started = time.perf_counter()
    cases: List[Tuple[Element, RPartitePartition, Composition]] = []
    for size in range(1, n + 1):
        weights = list(enumerate_compositions(size))
        shapes = enumerate_rpartite(size, model.character_count)
        for a in model.elements():
            cases.extend((a, lam, mu) for lam in shapes for mu in weights)
    fibers = {a: fiber_partition(model, a) for a in model.elements()}

    def check(i: int, case: Tuple[Element, RPartitePartition, Composition]) -> CaseResult:
        a, lam, mu = case
        twist = CyclotomicInt.zeta(fibers[a].order, alpha(lam, fibers[a])).promote(model.level)
        tableaux, lhs = 0, twist
        for _, value in tableau_color_products(lam, model, a, mu):
            tableaux += 1
            if value != twist:
                lhs = value
                break
        return CaseResult(i, str(lam), str(mu), lhs, twist, {"element": list(a), "tableaux": tableaux})

    results = _run_cases("rt", cases, check, jobs)
    return _report("rt", {"n": n, "group": model.name}, results, started, max_failures,
                   {"labelling": model.labelling()})


def report_sign2(
    n_max: int,
    max_failures: Optional[int] = None,
) -> VerificationReport:
    """
    sign_2 by peeling against (-1)^odd(lambda) and (-1)^(odd(lambda)/2) on
    every partition of 2k with empty 2-core, k <= n_max.

    Failures are disagreements of the halved exponent; disagreements of the
    plain odd-parts exponent are listed separately and do not fail the report.
    """
    if n_max < 1:
        raise InvalidInputError(f"n_max must be >= 1, got {n_max}")
    started = time.perf_counter()
    results: List[CaseResult] = []
    literal: List[Dict[str, Any]] = []
    for k in range(1, n_max + 1):
        for lam in enumerate_empty_core(k, 2):
            odd = odd_parts(lam)
            sign = sign_r(lam, 2)
            if sign != (-1) ** odd:
                literal.append({"shape": str(lam), "sign": sign, "odd_parts": odd})
            results.append(CaseResult(len(results), str(lam), "", sign, (-1) ** (odd // 2), {"odd_parts": odd}))
    total = len(results)
    halved_ok = sum(1 for c in results if c.ok)
    return _report(
        "sign2",
        {"n_max": n_max},
        results,
        started,
        max_failures,
        {
            "literal_disagreements": literal,
            "literal_agreement_rate": (total - len(literal)) / total,
            "halved_agreement_rate": halved_ok / total,
        },
    )

