"""Closed-form bipartition analysis of Dicke states |D_n^(k)>.

Every cut (j | n-j) of a Dicke state has a Schmidt decomposition whose
factors are again Dicke states, with hypergeometric Schmidt probabilities.
Spectra and purities are kept as exact fractions; entropies are floats that
carry a first-order bound on the rounding they picked up.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .combinatorics import binomial_row, hypergeom_weight, log2_big

_EPS = 2.0**-53
_INV_LN2 = 1.0 / math.log(2.0)


@dataclass(frozen=True)
class DickeIndex:
    """The pair (n, k): n qubits carrying k excitations."""

    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.k < 0:
            raise ValueError(f"k must be >= 0, got {self.k}")
        if self.k > self.n:
            raise ValueError(f"k exceeds n ({self.k} > {self.n})")

    def canonical(self) -> "DickeIndex":
        """Map k > n/2 to n - k (bit-flip partner, same entanglement)."""
        return self if 2 * self.k <= self.n else DickeIndex(self.n, self.n - self.k)


@dataclass(frozen=True)
class Cut:
    """Bipartition (j | n-j); j counts the qubits in the singled-out block."""

    j: int

    def check(self, index: DickeIndex) -> None:
        if self.j < 0:
            raise ValueError(f"j must be >= 0, got {self.j}")
        if self.j > index.n:
            raise ValueError(f"j exceeds n ({self.j} > {index.n})")


@dataclass(frozen=True)
class SchmidtSpectrum:
    q_min: int
    q_max: int
    probs: tuple[Fraction, ...]

    @property
    def probs_f64(self) -> tuple[float, ...]:
        return tuple(float(p) for p in self.probs)

    def __len__(self) -> int:
        return len(self.probs)


@dataclass(frozen=True)
class EntropyValue:
    """Entropy in bits together with an absolute bound on its rounding error."""

    bits: float
    abs_error_bound: float

    def __float__(self) -> float:
        return self.bits


def _validate(n: int, k: int, j: int) -> DickeIndex:
    index = DickeIndex(n, k)
    Cut(j).check(index)
    return index


def q_bounds(n: int, k: int, j: int) -> tuple[int, int]:
    """Range [q', q''] of block excitation counts that occur in the cut."""
    return max(0, j + k - n), min(j, k)


def schmidt_spectrum(n: int, k: int, j: int) -> SchmidtSpectrum:
    """Exact Schmidt probabilities of |D_n^(k)> across the cut (j | n-j).

    The q-th Schmidt pair is |D_j^(q)>|D_{n-j}^(k-q)>, for q running over
    ``q_bounds(n, k, j)``.
    """
    _validate(n, k, j)
    q_lo, q_hi = q_bounds(n, k, j)
    probs = tuple(hypergeom_weight(n, k, j, q) for q in range(q_lo, q_hi + 1))
    return SchmidtSpectrum(q_lo, q_hi, probs)


def spectrum_entropy(probs) -> EntropyValue:
    """Shannon entropy (bits) of exact probabilities, converted one by one.

    Each fraction is rounded to float before its log is taken. The bound adds
    |d(p log2 p)/dp| times the conversion error of p, the rounding of each
    term, and the rounding of the running sum.
    """
    total = 0.0
    bound = 0.0
    for p in probs:
        if p == 0:
            continue
        pf = float(p)
        lg = math.log2(pf)
        term = -pf * lg
        total += term
        bound += (abs(lg + _INV_LN2) * pf + 4.0 * abs(term)) * _EPS
    bound += len(probs) * abs(total) * _EPS
    return EntropyValue(total, bound)


def max_schmidt_probability(n: int, k: int) -> tuple[Fraction, int]:
    """Largest Schmidt probability over every cut of |D_n^(k)>, and the smallest j attaining it."""
    DickeIndex(n, k)
    best, best_j = Fraction(1), 0
    if 0 < k < n:
        best = Fraction(0)
        for j in range(1, n // 2 + 1):
            top = max(schmidt_spectrum(n, k, j).probs)
            if top > best:
                best, best_j = top, j
    return best, best_j


def entropy(n: int, k: int, j: int) -> EntropyValue:
    """Entanglement entropy (bits) of the cut (j | n-j) of |D_n^(k)>."""
    return spectrum_entropy(schmidt_spectrum(n, k, j).probs)


def binary_entropy(x: float) -> float:
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def entropy_single_qubit(n: int, k: int) -> EntropyValue:
    """Entropy of one qubit against the rest: the binary entropy of k/n."""
    DickeIndex(n, k)
    if n < 2:
        raise ValueError(f"single-qubit split needs n >= 2, got {n}")
    x = k / n
    bits = binary_entropy(x)
    return EntropyValue(bits, 8.0 * _EPS * max(bits, 1.0))


def entropy_upper_bound(n: int) -> float:
    """Generic bound n/2 bits on the entropy of any cut of n qubits."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return n / 2


def s_max(n: int) -> EntropyValue:
    """Largest entropy over all Dicke states and cuts of n qubits (n even).

    Attained at k = j = n/2 and evaluated as

        log2 C(n, n/2) - 2/C(n, n/2) * sum_q C(n/2, q)^2 log2 C(n/2, q)

    with exact binomials, so it stays accurate at n in the thousands.
    """
    if n < 2 or n % 2:
        raise ValueError(f"s_max needs an even n >= 2, got {n}")
    m = n // 2
    row = binomial_row(m)
    central = math.comb(n, m)
    log_central = log2_big(central)
    acc = 0.0
    for c in row:
        if c == 1:
            continue
        acc += (c * c / central) * log2_big(c)
    bits = log_central - 2.0 * acc
    bound = (2.0 * log_central + 2.0 * acc * (m + 4) + 2.0 * abs(bits)) * _EPS
    return EntropyValue(bits, bound)


def even_range(n_lo: int, n_hi: int) -> list[int]:
    if n_lo % 2 or n_hi % 2:
        raise ValueError(f"bounds must be even, got [{n_lo}, {n_hi}]")
    if n_lo < 2 or n_hi < n_lo:
        raise ValueError(f"empty or invalid range [{n_lo}, {n_hi}]")
    return list(range(n_lo, n_hi + 1, 2))


def s_max_fit(n_lo: int, n_hi: int) -> tuple[float, float]:
    """Least-squares line s_max(n) ~ slope * log2(n/2) + intercept over even n."""
    ns = even_range(n_lo, n_hi)
    if len(ns) < 5:
        raise ValueError(f"fit needs at least 5 even points, got {len(ns)} in [{n_lo}, {n_hi}]")
    return fit_against_log(ns, [s_max(n).bits for n in ns])


def fit_against_log(ns, values) -> tuple[float, float]:
    """Ordinary least squares of values against log2(n/2)."""
    x = np.log2(np.asarray(ns, dtype=float) / 2.0)
    slope, intercept = np.polyfit(x, np.asarray(values, dtype=float), 1)
    return float(slope), float(intercept)


def purity(n: int, k: int, j: int) -> Fraction:
    """Exact purity Tr(sigma^2) of the j-qubit reduced state, i.e. sum_q lambda_q^2."""
    _validate(n, k, j)
    q_lo, q_hi = q_bounds(n, k, j)
    left = binomial_row(j)
    right = binomial_row(n - j)
    num = sum((left[q] * right[k - q]) ** 2 for q in range(q_lo, q_hi + 1))
    total = math.comb(n, k)
    return Fraction(num, total * total)


def balanced_cut(n: int) -> int:
    return n // 2


def potential_me(n: int, k: int) -> Fraction:
    """Potential of multipartite entanglement: mean purity of balanced cuts.

    Permutation symmetry makes every balanced cut equivalent, so this is the
    purity of the first floor(n/2) qubits. Odd n uses the (n-1)/2 block,
    which has the same spectrum as the (n+1)/2 block.
    """
    if n < 2:
        raise ValueError(f"potential_me needs n >= 2, got {n}")
    return purity(n, k, balanced_cut(n))


def potential_me_asymptote(n: int) -> float:
    """Large-n form (2 / sqrt(pi)) n^(-1/2) of potential_me(n, n/2)."""
    if n < 2 or n % 2:
        raise ValueError(f"asymptote is defined for even n >= 2, got {n}")
    return 2.0 / math.sqrt(math.pi * n)


def classical_entropy(n: int, k: int) -> float:
    """Entropy log2 C(n, k) of the fully decohered (microcanonical) state."""
    DickeIndex(n, k)
    return log2_big(math.comb(n, k))


@dataclass(frozen=True)
class OrderingRow:
    n: int
    k: int
    potential: Fraction
    potential_half: Fraction

    @property
    def holds_as_written(self) -> bool:
        """Whether potential_me(n, k) <= potential_me(n, n/2)."""
        return self.potential <= self.potential_half


def potential_me_ordering(n_max: int = 16) -> list[OrderingRow]:
    """Compare potential_me(n, k) with potential_me(n, n/2) for even n <= n_max, 1 <= k <= n/2."""
    rows = []
    for n in range(2, n_max + 1, 2):
        half = potential_me(n, n // 2)
        for k in range(1, n // 2 + 1):
            rows.append(OrderingRow(n, k, potential_me(n, k), half))
    return rows
