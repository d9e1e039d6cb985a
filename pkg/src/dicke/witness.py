"""Fidelity-type witnesses W_n^(k) = alpha 1 - |D_n^(k)><D_n^(k)| and their noise robustness.

Two imperfections are combined: white noise with weight p, and a coherent
asymmetry a that tilts the state towards the single ket |0...01...1> of the
same excitation number,

    |phi> = sqrt(1 - a^2) |D_n^(k)> + a |0..01..1>,
    rho   = (1 - p) |phi><phi| + p 1 / 2^n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .analysis import DickeIndex, max_schmidt_probability


@dataclass(frozen=True)
class WitnessScenario:
    index: DickeIndex
    a: float = 0.0
    p: float = 0.0

    def __post_init__(self) -> None:
        if not 0.0 <= self.a <= 1.0:
            raise ValueError(f"asymmetry a must lie in [0, 1], got {self.a}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"noise fraction p must lie in [0, 1], got {self.p}")
        index = self.index.canonical()
        if index.k < 1:
            raise ValueError(f"witness needs 1 <= k <= n-1, got n={index.n}, k={self.index.k}")
        object.__setattr__(self, "index", index)


@dataclass(frozen=True)
class SeparatrixPoint:
    """Noise fraction p at which <W> = 0 for asymmetry a.

    ``clamped`` marks roots that fell outside [0, 1]; ``no_root`` marks grid
    points where the overlap term never exceeds the white-noise floor.
    """

    a: float
    p: float
    clamped: bool = field(default=False)
    no_root: bool = field(default=False)


def _canonical(n: int, k: int) -> DickeIndex:
    index = DickeIndex(n, k).canonical()
    if index.k < 1:
        raise ValueError(f"witness is undefined for separable |D_{n}^({k})>")
    return index


def witness_alpha(n: int, k: int) -> Fraction:
    """Prefactor (n - k)/n of W_n^(k), the single-qubit cut's top Schmidt probability (k <= n/2).

    This is the largest Schmidt probability over all cuts except at half
    filling, where the (2 | n-2) cut reaches n / (2(n-1)); see
    :func:`dicke.analysis.max_schmidt_probability`.
    """
    index = _canonical(n, k)
    return Fraction(index.n - index.k, index.n)


def p_max_white_noise(n: int, k: int) -> float:
    """Largest white-noise fraction still detected for the unperturbed state."""
    index = _canonical(n, k)
    return index.k / (index.n * (1.0 - 2.0**-index.n))


def overlap_term(n: int, k: int, a: float) -> float:
    """B(a) = [sqrt(1 - a^2) + a C(n, k)^(-1/2)]^2, the fidelity of |phi> with |D_n^(k)>."""
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"asymmetry a must lie in [0, 1], got {a}")
    c = 1.0 / math.sqrt(math.comb(n, k))
    return (math.sqrt(1.0 - a * a) + a * c) ** 2


def expectation_asymmetric(n: int, k: int, a: float) -> float:
    """<phi|W_n^(k)|phi> for the noiseless asymmetric state."""
    index = _canonical(n, k)
    alpha = (index.n - index.k) / index.n
    return alpha - overlap_term(index.n, index.k, a)


def expectation_combined(s: WitnessScenario) -> float:
    """Tr(rho W_n^(k)) with both asymmetry a and white noise p."""
    n, k = s.index.n, s.index.k
    alpha = (n - k) / n
    return alpha - s.p / 2.0**n - (1.0 - s.p) * overlap_term(n, k, s.a)


def noise_root(n: int, k: int, b: float) -> float:
    """Unclamped p solving <W> = 0 when the fidelity term equals b (canonical n, k)."""
    alpha = (n - k) / n
    return (b - alpha) / (b - 2.0**-n)


def separatrix_p(n: int, k: int, a: float) -> SeparatrixPoint:
    index = _canonical(n, k)
    n, k = index.n, index.k
    b = overlap_term(n, k, a)
    if b <= 2.0**-n:
        return SeparatrixPoint(a, 0.0, clamped=True, no_root=True)
    p = noise_root(n, k, b)
    if p < 0.0 or p > 1.0:
        return SeparatrixPoint(a, min(max(p, 0.0), 1.0), clamped=True)
    return SeparatrixPoint(a, p)


def separatrix(n: int, k: int, a_grid: Iterable[float]) -> list[SeparatrixPoint]:
    """The curve <W> = 0 in the (a, p) plane; detection holds below it."""
    return [separatrix_p(n, k, float(a)) for a in a_grid]


def separatrix_peak(n: int, k: int) -> tuple[float, float]:
    """Asymmetry a* that maximizes the tolerated noise, and that noise p*.

    p(a) increases with B(a), and sqrt(1 - a^2) + a c peaks at
    a = c / sqrt(1 + c^2) with c = C(n, k)^(-1/2).
    """
    index = _canonical(n, k)
    n, k = index.n, index.k
    inv_c = 1.0 / math.comb(n, k)
    a_star = 1.0 / math.sqrt(math.comb(n, k) + 1)
    p_star = (inv_c + k / n) / (1.0 + inv_c - 2.0**-n)
    return a_star, p_star


def traced_witness_value(n: int, k: int, *, valid_alpha: bool = False) -> Fraction:
    """Witness expectation on |D_n^(k)> with one qubit traced out.

    The reduced state is ((n-k)/n)|D_{n-1}^(k)><.| + (k/n)|D_{n-1}^(k-1)><.|
    and it is tested with W_{n-1}^(k) = ((n-1-k)/(n-1)) 1 - |D_{n-1}^(k)><.|,
    which gives -k / (n (n-1)) for every 1 <= k <= n-1.

    For 2k >= n-1 that prefactor is smaller than the largest Schmidt
    probability of |D_{n-1}^(k)>, so the operator is not a valid witness.
    ``valid_alpha=True`` first flips k > n/2 to n - k and then uses the
    exact largest Schmidt probability of |D_{n-1}^(k)> as alpha; the value
    turns positive for k = n/2 and k = (n-1)/2.
    """
    DickeIndex(n, k)
    if n < 3:
        raise ValueError(f"traced witness needs n >= 3, got {n}")
    if not 1 <= k <= n - 1:
        raise ValueError(f"traced witness needs 1 <= k <= n-1, got k={k}")
    if valid_alpha:
        k = DickeIndex(n, k).canonical().k
        alpha = max_schmidt_probability(n - 1, k)[0]
    else:
        alpha = Fraction(n - 1 - k, n - 1)
    # <D_{n-1}^(k)| rho |D_{n-1}^(k)> keeps only the first mixture weight
    return alpha - Fraction(n - k, n)
