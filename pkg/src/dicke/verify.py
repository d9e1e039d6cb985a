"""Oracle suite behind ``dicke verify``: dense state vectors against the closed forms."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from . import oracle
from .analysis import entropy, max_schmidt_probability, potential_me_ordering, purity, schmidt_spectrum
from .witness import traced_witness_value, witness_alpha

SPECTRUM_ATOL = 1e-10
IDENTITY_ATOL = 1e-12


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list[tuple] = field(default_factory=list)
    note: str = ""
    informational: bool = False

    @property
    def passed(self) -> bool:
        return self.informational or not self.failures

    def record(self, ok: bool, case: tuple) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(case)


def case_split(n: int, k: int, j: int) -> str:
    """Which of the four induction-step regimes (j vs k, j+k vs n) a cut falls in."""
    return f"{'j<=k' if j <= k else 'j>k'},{'j+k<n' if j + k < n else 'j+k>=n'}"


def check_recurrence(n_max: int, cap: int) -> CheckResult:
    res = CheckResult("recurrence (1 | n-1)")
    for n in range(2, n_max + 1):
        for k in range(n + 1):
            res.record(oracle.verify_recurrence(n, k, cap, IDENTITY_ATOL), (n, k, 1))
    return res


def check_decomposition(n_max: int, cap: int) -> CheckResult:
    res = CheckResult("general decomposition (j | n-j)")
    splits: dict[str, int] = {}
    for n in range(1, n_max + 1):
        for k in range(n + 1):
            for j in range(n + 1):
                res.record(oracle.verify_general_decomposition(n, k, j, cap, IDENTITY_ATOL), (n, k, j))
                if 0 < j < n:
                    label = case_split(n, k, j)
                    splits[label] = splits.get(label, 0) + 1
    res.note = " ".join(f"[{key}]={splits[key]}" for key in sorted(splits))
    return res


def check_spectra(n_max: int, cap: int) -> tuple[CheckResult, CheckResult, CheckResult]:
    spec = CheckResult("spectrum equivalence")
    pur = CheckResult("purity equivalence")
    ent = CheckResult("entropy equivalence")
    for n in range(1, n_max + 1):
        for k in range(n + 1):
            v = oracle.build_dicke(n, k, cap)
            for j in range(n + 1):
                w = oracle.oracle_spectrum(v, j)
                exact = np.sort(np.array(schmidt_spectrum(n, k, j).probs_f64))[::-1]
                ok = w.shape == exact.shape and bool(np.max(np.abs(w - exact)) <= SPECTRUM_ATOL)
                spec.record(ok, (n, k, j))
                pur.record(abs(float(np.sum(w * w)) - float(purity(n, k, j))) <= SPECTRUM_ATOL, (n, k, j))
                e = entropy(n, k, j)
                s_oracle = float(-np.sum(w * np.log2(w)))
                ent.record(abs(s_oracle - e.bits) <= e.abs_error_bound + 1e-9, (n, k, j))
    return spec, pur, ent


def check_block_irrelevance(n_max: int, seed: int) -> CheckResult:
    res = CheckResult("block irrelevance (random subsets)")
    rng = random.Random(seed)
    for n in range(2, min(n_max, 10) + 1):
        for k in range(n + 1):
            size = rng.randint(1, n - 1)
            subset = sorted(rng.sample(range(n), size))
            res.record(oracle.verify_block_irrelevance(n, k, subset), (n, k, tuple(subset)))
    return res


def check_traced_witness(n_max: int) -> CheckResult:
    res = CheckResult("traced-witness sign")
    for n in range(3, n_max + 1):
        for k in range(1, n):
            exact = traced_witness_value(n, k)
            ok = exact < 0
            if n <= 10:
                ok = ok and abs(oracle.oracle_traced_witness(n, k) - float(exact)) <= IDENTITY_ATOL
            res.record(ok, (n, k, n - 1))
    return res


def traced_valid_alpha_report(n_max: int) -> CheckResult:
    res = CheckResult("traced witness with alpha = largest Schmidt probability", informational=True)
    missed = []
    for n in range(3, n_max + 1):
        for k in range(1, n):
            res.cases += 1
            if traced_witness_value(n, k, valid_alpha=True) >= 0:
                missed.append((n, k))
    res.note = f"detected {res.cases - len(missed)}/{res.cases}"
    if missed:
        res.note += f"; undetected e.g. (n,k)={missed[:4]}"
    return res


def alpha_report(n_max: int) -> CheckResult:
    res = CheckResult("largest Schmidt probability sits at j=1", informational=True)
    off = []
    for n in range(2, n_max + 1):
        for k in range(1, n // 2 + 1):
            res.cases += 1
            top, j = max_schmidt_probability(n, k)
            if top != witness_alpha(n, k):
                off.append((n, k, j))
    res.note = f"holds {res.cases - len(off)}/{res.cases}"
    if off:
        res.note += f"; larger at other cuts, (n,k,j)={off[:3]}"
    return res


def ordering_report(n_max: int = 16) -> CheckResult:
    res = CheckResult("potential_me(n,k) <= potential_me(n,n/2) as written", informational=True)
    rows = potential_me_ordering(n_max)
    held = [r for r in rows if r.holds_as_written]
    broken = [(r.n, r.k) for r in rows if not r.holds_as_written]
    res.cases = len(rows)
    res.note = f"holds {len(held)}/{len(rows)}"
    if broken:
        res.note += f"; reversed (k=n/2 is the minimum) e.g. (n,k)={broken[:3]}"
    return res


def run_suite(n_max: int, seed: int = 0, cap: int = oracle.DEFAULT_CAP) -> list[CheckResult]:
    if n_max > cap:
        raise ValueError(f"n-max {n_max} exceeds the oracle cap {cap}")
    if n_max < 1:
        raise ValueError(f"n-max must be >= 1, got {n_max}")
    results = [check_recurrence(n_max, cap), check_decomposition(n_max, cap)]
    results.extend(check_spectra(n_max, cap))
    results.append(check_block_irrelevance(n_max, seed))
    results.append(check_traced_witness(n_max))
    results.append(traced_valid_alpha_report(n_max))
    results.append(alpha_report(n_max))
    results.append(ordering_report())
    return results
