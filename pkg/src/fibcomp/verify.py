"""Cross-check suites wiring the fast paths against the enumeration oracles.

Each suite returns a list of CheckResult records; the CLI renders them and
maps any failure to a nonzero exit.  Failures carry the smallest
counterexample found.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import analytic, bijection, counting, enumeration, genfun
from .core import DomainError, conjugate, from_bitseq, to_bitseq

SUITE_DEFAULT_BOUND = {
    "codec": 12,
    "bijection": 14,
    "counts": 20,
    "genfun": 20,
    "analytic": 50,
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _result(name: str, cases: int, counterexample: str | None) -> CheckResult:
    if counterexample is None:
        return CheckResult(name, True, f"{cases} cases")
    return CheckResult(name, False, f"smallest counterexample: {counterexample}")


def _all_compositions(limit: int):
    for n in range(1, limit + 1):
        for c in enumeration.gen_compositions(n, enumeration.CompositionClass("all")):
            yield n, c


def _suite_codec(bound: int) -> list[CheckResult]:
    results = []

    cases = 0
    bad = None
    for n, c in _all_compositions(bound):
        cases += 1
        if from_bitseq(to_bitseq(c)).parts != c.parts:
            bad = str(c)
            break
    results.append(_result(f"codec roundtrip n<={bound}", cases, bad))

    cases = 0
    bad = None
    for n, c in _all_compositions(bound):
        cases += 1
        if conjugate(conjugate(c)).parts != c.parts:
            bad = str(c)
            break
    results.append(_result(f"conjugation involution n<={bound}", cases, bad))

    cases = 0
    bad = None
    for n, c in _all_compositions(bound):
        cases += 1
        if conjugate(c).ell != n - c.ell + 1:
            bad = str(c)
            break
    results.append(_result(f"conjugate part-count law n<={bound}", cases, bad))

    cases = 0
    bad = None
    for n, c in _all_compositions(bound):
        cases += 1
        all_odd = all(p % 2 for p in c.parts)
        runs_even = True
        run = 0
        for b in to_bitseq(c).bits:
            if b == 0:
                run += 1
            else:
                if run % 2:
                    runs_even = False
                run = 0
        if run % 2:
            runs_even = False
        if all_odd != runs_even:
            bad = str(c)
            break
    results.append(_result(f"odd parts iff even zero-runs n<={bound}", cases, bad))

    cases = 0
    bad = None
    for n, c in _all_compositions(bound):
        cases += 1
        all_odd = all(p % 2 for p in c.parts)
        dual_comp = conjugate(c)
        # odd part count is part of the characterization: c = 2 conjugates
        # to 1+1, whose lone even-index part is 1, yet 2 is not odd
        dual = dual_comp.ell % 2 == 1 and all(p == 1 for p in dual_comp.parts[1::2])
        if all_odd != dual:
            bad = str(c)
            break
    results.append(_result(f"odd parts iff conjugate odd length with even-index ones n<={bound}", cases, bad))

    return results


def _suite_bijection(bound: int) -> list[CheckResult]:
    results = []
    odd_cls = enumeration.CompositionClass("odd-parts")
    min2_cls = enumeration.CompositionClass("min-part-2")

    cases = 0
    bad = None
    for n in range(1, bound + 1):
        for a in enumeration.gen_compositions(n, odd_cls):
            cases += 1
            if bijection.gt1_to_odd(bijection.odd_to_gt1(a)).parts != a.parts:
                bad = str(a)
                break
        if bad:
            break
    results.append(_result(f"roundtrip inverse(forward) n<={bound}", cases, bad))

    cases = 0
    bad = None
    for n in range(1, bound + 1):
        image = {bijection.odd_to_gt1(a).parts for a in enumeration.gen_compositions(n, odd_cls)}
        target = {c.parts for c in enumeration.gen_compositions(n + 1, min2_cls)}
        cases += len(target)
        if image != target:
            diff = sorted(image ^ target)[0]
            bad = f"n={n}, {'+'.join(map(str, diff))}"
            break
    results.append(_result(f"image equals min-part-2 target n<={bound}", cases, bad))

    cases = 0
    bad = None
    for n in range(1, bound + 1):
        for a in enumeration.gen_compositions(n, odd_cls):
            cases += 1
            if (a.n - a.ell) % 2:
                bad = str(a)
                break
        if bad:
            break
    results.append(_result(f"odd-part parity n == ell (mod 2) n<={bound}", cases, bad))

    cases = 0
    bad = None
    for n in range(1, bound + 1):
        cases += 1
        odd_count = enumeration.count_by_enumeration(n, odd_cls)
        gt1_count = enumeration.count_by_enumeration(n + 1, min2_cls)
        fib = counting.fibonacci(n)
        if not odd_count == gt1_count == fib:
            bad = f"n={n}: {odd_count}, {gt1_count}, F={fib}"
            break
    results.append(_result(f"both classes count F_n n<={bound}", cases, bad))

    return results


def _suite_counts(bound: int) -> list[CheckResult]:
    results = []

    top = min(bound, 16)
    bad = None
    for n in range(1, top + 1):
        if counting.c_count(n) != enumeration.count_by_enumeration(
            n, enumeration.CompositionClass("all")
        ):
            bad = f"n={n}"
            break
    results.append(_result(f"c_count vs enumeration n<={top}", top, bad))

    bad = None
    for n in range(1, bound + 1):
        want = counting.Q_count(n)
        if want != enumeration.count_by_enumeration(n, enumeration.CompositionClass("odd-parts")):
            bad = f"n={n} odd-parts"
            break
        if want != enumeration.count_by_enumeration(
            n + 1, enumeration.CompositionClass("min-part-2")
        ):
            bad = f"n={n} min-part-2"
            break
    results.append(_result(f"Q_count vs both enumerations n<={bound}", bound, bad))

    ptop = max(bound, 40)
    bad = None
    for n in range(ptop + 1):
        if counting.p_recurrence(n) != enumeration.count_by_enumeration(
            n, enumeration.PartitionClass("all")
        ):
            bad = f"n={n}"
            break
    results.append(_result(f"p_recurrence vs enumeration n<={ptop}", ptop + 1, bad))

    bad = None
    for n in range(ptop + 1):
        want = counting.q_recurrence(n)
        if want != enumeration.count_by_enumeration(n, enumeration.PartitionClass("odd-parts")):
            bad = f"n={n} odd-parts"
            break
        if want != enumeration.count_by_enumeration(
            n, enumeration.PartitionClass("distinct-parts")
        ):
            bad = f"n={n} distinct-parts"
            break
    results.append(_result(f"q_recurrence vs both enumerations n<={ptop}", ptop + 1, bad))

    bad = None
    for n in range(2001):
        want = 1 if counting.is_triangular(n) else 0
        if counting.q_recurrence_residual(n) != want:
            bad = f"n={n}"
            break
    results.append(_result("q recurrence residual 0/1 pattern n<=2000", 2001, bad))

    first = counting.binet_first_failure(100)
    low_ok = all(counting.binet_float(n).round_correct for n in range(31))
    if first is None or not low_ok:
        results.append(
            CheckResult(
                "binet failure threshold",
                False,
                f"first failure {first}, all correct below 31: {low_ok}",
            )
        )
    else:
        results.append(
            CheckResult(
                "binet failure threshold",
                True,
                f"rounds correctly n<=30, first failure at n={first}",
            )
        )

    return results


def _suite_genfun(bound: int) -> list[CheckResult]:
    results = []
    order = 40

    series = genfun.partition_gf(order)
    bad = None
    for n in range(order + 1):
        if series.coefficient(n) != counting.p_recurrence(n):
            bad = f"n={n}"
            break
    results.append(_result(f"partition series vs recurrence order {order}", order + 1, bad))

    top = min(bound, order)
    bad = None
    for n in range(top + 1):
        if series.coefficient(n) != enumeration.count_by_enumeration(
            n, enumeration.PartitionClass("all")
        ):
            bad = f"n={n}"
            break
    results.append(_result(f"partition series vs enumeration n<={top}", top + 1, bad))

    odd_product = genfun.TruncatedSeries.one(order)
    for j in range(1, order + 1, 2):
        factor = genfun.TruncatedSeries.one(order) - genfun.TruncatedSeries.monomial(j, order)
        odd_product = genfun.series_mul(odd_product, genfun.series_inverse(factor))
    distinct_product = genfun.TruncatedSeries.one(order)
    for j in range(1, order + 1):
        factor = genfun.TruncatedSeries.one(order) + genfun.TruncatedSeries.monomial(j, order)
        distinct_product = genfun.series_mul(distinct_product, factor)
    bad = None
    if odd_product.coeffs != distinct_product.coeffs:
        for n in range(order + 1):
            if odd_product.coefficient(n) != distinct_product.coefficient(n):
                bad = f"n={n}"
                break
    results.append(_result(f"odd/distinct product identity order {order}", order + 1, bad))

    euler = genfun.TruncatedSeries.one(order)
    for j in range(1, order + 1):
        euler = genfun.series_mul(
            euler, genfun.TruncatedSeries.one(order) - genfun.TruncatedSeries.monomial(j, order)
        )
    product = genfun.series_mul(genfun.partition_gf(order), euler)
    bad = None if product.coeffs == genfun.TruncatedSeries.one(order).coeffs else "product != 1"
    results.append(_result(f"partition series times euler product order {order}", order + 1, bad))

    top = min(bound, 20)
    series = genfun.distinct_compositions_gf(top)
    bad = None
    for n in range(top + 1):
        direct = enumeration.count_by_enumeration(
            n, enumeration.CompositionClass("distinct-parts")
        ) if n else 1
        linked = sum(
            math.factorial(ell) * genfun.distinct_partitions_ell_gf(ell, top).coefficient(n)
            for ell in range(top + 1)
            if ell * (ell + 1) // 2 <= top
        )
        if series.coefficient(n) != direct or series.coefficient(n) != linked:
            bad = f"n={n}"
            break
    results.append(_result(f"distinct compositions series vs enumeration n<={top}", top + 1, bad))

    return results


def _suite_analytic(bound: int) -> list[CheckResult]:
    results = []

    bad = None
    cases = 0
    for k in range(2, 31):
        for h in range(1, k):
            if math.gcd(h, k) != 1:
                continue
            cases += 1
            s_hk = analytic.dedekind_s(h, k)
            if s_hk != analytic.dedekind_s(h, k):
                bad = f"(h={h}, k={k}) not reproducible"
                break
            lhs = s_hk + analytic.dedekind_s(k % h, h)
            rhs = Fraction(-1, 4) + (Fraction(h, k) + Fraction(k, h) + Fraction(1, h * k)) / 12
            if lhs != rhs:
                bad = f"(h={h}, k={k})"
                break
            if (12 * k * s_hk).denominator != 1:
                bad = f"(h={h}, k={k}) denominator"
                break
        if bad:
            break
    results.append(_result("dedekind reciprocity and integrality k<=30", cases, bad))

    bad = None
    cases = 0
    for k in range(3, 30, 2):
        for h in range(1, k):
            if math.gcd(h, k) != 1:
                continue
            cases += 1
            if analytic.hagis_t(h, k) != -analytic.hagis_t(k - h, k):
                bad = f"(h={h}, k={k})"
                break
        if bad:
            break
    results.append(_result("hagis sum negation symmetry k<30", cases, bad))

    bad = None
    cases = 0
    top_k = min(bound, 50)
    for k in range(1, top_k + 1):
        for n in range(0, top_k + 1, 7):
            cases += 1
            try:
                direct = analytic.kloosterman_A(k, n, 128)
            except analytic.ImaginaryResidueError as exc:
                bad = f"(k={k}, n={n}): {exc}"
                break
            fast = analytic._A_real(k, n, analytic._tier(128))
            if abs(direct.value - fast) > analytic.mpf(2) ** -100:
                bad = f"(k={k}, n={n}) pairing mismatch"
                break
        if bad:
            break
    results.append(_result(f"exponential sum direct vs paired k<={top_k}", cases, bad))

    z = analytic.HPReal(analytic.mpf(2), 128)
    wide = analytic.bessel_I1(analytic.HPReal(analytic.mpf(2), 320))
    narrow = analytic.bessel_I1(z)
    with analytic.mp.workprec(320):
        # subtract at the wide precision; the ambient default would round
        # both operands to 53 bits and swamp the quantity being measured
        drift = abs(wide.value - narrow.value)
    i1_ok = (
        drift < analytic.mpf(2) ** -120
        and analytic.bessel_I1(analytic.HPReal(analytic.mpf(0), 64)).value == 0
        and analytic.bessel_I1(analytic.HPReal(analytic.mpf(3), 128)).value > narrow.value
    )
    results.append(
        CheckResult("bessel series self-consistency", bool(i1_ok), f"cross-precision drift {drift}")
    )

    bad = None
    for n in range(1, bound + 1):
        p_report = analytic.rademacher_p(n)
        if not p_report.certified or p_report.rounded != counting.p_recurrence(n):
            bad = f"p at n={n}"
            break
        q_report = analytic.hagis_q(n)
        if not q_report.certified or q_report.rounded != counting.q_recurrence(n):
            bad = f"q at n={n}"
            break
    results.append(_result(f"certified rounding vs recurrences n<={bound}", bound, bad))

    probe = min(bound, 30)
    base = analytic.rademacher_p(probe)
    bad = None
    for extra in (6, 18, 30, 60, 90):
        report = analytic.rademacher_p(probe, k_max=base.k_terms_used + extra)
        if not report.residual < analytic.RESIDUAL_BOUND:
            bad = f"budget +{extra}"
            break
    results.append(_result(f"residual stays small above certified budget (n={probe})", 5, bad))

    return results


_SUITES = {
    "codec": _suite_codec,
    "bijection": _suite_bijection,
    "counts": _suite_counts,
    "genfun": _suite_genfun,
    "analytic": _suite_analytic,
}


def suite_names() -> tuple[str, ...]:
    return tuple(_SUITES)


def verify_suite(name: str, max_n: int | None = None) -> list[CheckResult]:
    """Run one named suite; max_n overrides its default enumeration bound."""
    if name not in _SUITES:
        raise DomainError(f"unknown suite {name!r}; pick from {', '.join(_SUITES)}")
    bound = SUITE_DEFAULT_BOUND[name] if max_n is None else max_n
    if bound < 1:
        raise DomainError(f"max_n must be >= 1, got {bound}")
    return _SUITES[name](bound)
