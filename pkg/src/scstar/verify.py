"""Executable checks of the construction's claims, grouped into named suites."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal

from . import bounds
from .automata import Dfa, complement, equivalent, minimize, with_epsilon
from .oracle import SearchSpec, enumerate_dfas, naive_pipeline, random_corpus
from .pipeline import (canonical_form_check, make_stepper, orbit, plus_complement_plus,
                       plus_dfa, pruned_determinize, star_complement_star)
from .witnesses import (check_distinguishability, check_reachability, family_states,
                        witness)


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name:<28} checked={self.checked} failures={len(self.failures)}"


def corpus(n_max: int, samples: int, seed: int, exhaustive_n: int = 3, k_max: int = 3) -> list[Dfa]:
    """All DFAs with n <= min(exhaustive_n, n_max), k <= 2, then ``samples`` seeded random ones."""
    out = []
    for n in range(1, min(exhaustive_n, n_max) + 1):
        for k in (1, 2):
            out.extend(enumerate_dfas(SearchSpec(n, k)))
    out.extend(random_corpus(seed, samples, n_max, k_max))
    return out


def oracle_suite(dfas, stepper=make_stepper) -> SuiteResult:
    res = SuiteResult("pruned vs naive oracle")
    for d in dfas:
        res.checked += 1
        if minimize(pruned_determinize(d, stepper=stepper)[0]) != naive_pipeline(d):
            res.failures.append(d)
    return res


def canonical_suite(dfas, witness_ns=(5, 6)) -> SuiteResult:
    res = SuiteResult("chain canonical form")
    targets = list(dfas) + [witness("combined", n) for n in witness_ns]
    for d in targets:
        for s in pruned_determinize(d)[1]:
            res.checked += 1
            if canonical_form_check(s) is None:
                res.failures.append((d, s))
    return res


def reachability_suite(ns=(5, 6, 7)) -> SuiteResult:
    res = SuiteResult("family reachability")
    for n in ns:
        res.checked += sum(1 for _ in family_states(n))
        res.failures.extend(check_reachability(n))
    return res


def distinguishability_suite(ns=(5, 6)) -> SuiteResult:
    res = SuiteResult("family distinguishability")
    for n in ns:
        count = sum(1 for _ in family_states(n))
        res.checked += count * (count - 1) // 2
        res.failures.extend(check_distinguishability(n))
        sc = plus_complement_plus(witness("combined", n), check_form=False).d3min_states
        if sc < count:
            res.failures.append(("sc below family count", n, sc, count))
    return res


def relation_suite(dfas) -> SuiteResult:
    """Star vs plus variants: sizes within one, ε-membership as the case formula says."""
    res = SuiteResult("star/plus relation")
    for d in dfas:
        res.checked += 1
        plus = plus_complement_plus(d, check_form=False)
        star = star_complement_star(d, check_form=False)
        eps_in_l = d.initial in d.finals
        ok = (abs(star.d3min_states - plus.d3min_states) <= 1
              and star.epsilon_in_result
              and plus.epsilon_in_result == (not eps_in_l)
              and equivalent(star.result, with_epsilon(plus.result) if eps_in_l else plus.result))
        if not ok:
            res.failures.append(d)
    return res


def upper_bound_suite(dfas, witness_ns=(5, 6, 7)) -> SuiteResult:
    res = SuiteResult("upper bound f(n)")
    targets = list(dfas) + [witness("combined", n) for n in witness_ns]
    for d in targets:
        res.checked += 1
        size = minimize(pruned_determinize(d)[0]).state_count
        if size > bounds.upper_count(d.state_count):
            res.failures.append((d, size))
    return res


def orbit_closure_failures(d: Dfa) -> list:
    """Ten orbit languages; + and c applied to any must land on one of them up to ε."""
    ten = list(orbit(d).all_ten().items())
    targets = [with_epsilon(t) for _, t in ten]
    bad = []
    for name, lang in ten:
        for op_name, op in (("+", plus_dfa), ("c", complement)):
            image = with_epsilon(op(lang))
            if not any(equivalent(image, t) for t in targets):
                bad.append((name, op_name))
    return bad


def orbit_suite(dfas) -> SuiteResult:
    res = SuiteResult("orbit closure")
    for d in dfas:
        res.checked += 1
        bad = orbit_closure_failures(d)
        if bad:
            res.failures.append((d, bad))
    return res


def bounds_suite(n_max: int = 12) -> SuiteResult:
    res = SuiteResult("bounds consistency")
    w = bounds.lambert_w1_check()
    res.checked += 1
    if abs(w - bounds.W1) > Decimal("1e-12") or abs(w * w.exp() - 1) > Decimal("1e-12"):
        res.failures.append(("W(1)", w))
    prev = None
    for n in range(1, n_max + 1):
        res.checked += 1
        f = bounds.upper_count(n)
        if bounds.a072597(n) != f + 1 or f > bounds.crude_bound(n):
            res.failures.append(("count", n))
        if n >= 5:
            dev = abs(Decimal(bounds.a072597(n)) / bounds.asymptotic_estimate(n) - 1)
            if dev > Decimal("1e-3") or (prev is not None and dev > prev):
                res.failures.append(("asymptotic", n, dev))
            prev = dev
    for n in range(0, 6):
        res.checked += 1
        if math.log2(bounds.dedekind(n)) < math.comb(n, n // 2):
            res.failures.append(("dedekind", n))
    return res


def run_suites(n_max: int = 5, samples: int = 200, seed: int = 7, stepper=make_stepper,
               orbit_samples: int = 50) -> list[SuiteResult]:
    dfas = corpus(n_max, samples, seed)
    small = random_corpus(seed + 1, orbit_samples, min(n_max, 4), 2)
    return [
        oracle_suite(dfas, stepper),
        canonical_suite(dfas),
        reachability_suite(),
        distinguishability_suite(),
        relation_suite(dfas),
        upper_bound_suite(dfas),
        bounds_suite(),
        orbit_suite(small),
    ]
