"""Brute-force state-vector checks for the closed forms.

Nothing here imports the closed-form analysis: states are built bit by bit,
spectra come from a cyclic Jacobi eigensolver written out below, and the
Schmidt coefficients used for reconstruction are taken in factorial form.
Basis index convention: qubit 0 is the most significant bit, so the first j
qubits index the rows of the coefficient matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

DEFAULT_CAP = 14
GRAM_CAP = 12
EIG_CUTOFF = 1e-13


@dataclass(frozen=True)
class DickeVector:
    n: int
    k: int
    amplitudes: np.ndarray

    def coefficient_matrix(self, j: int) -> np.ndarray:
        """Amplitudes reshaped to 2^j x 2^(n-j), rows indexed by the first j qubits."""
        if not 0 <= j <= self.n:
            raise ValueError(f"j must lie in [0, {self.n}], got {j}")
        return self.amplitudes.reshape(2**j, 2 ** (self.n - j))


def popcounts(n: int) -> np.ndarray:
    idx = np.arange(2**n, dtype=np.int64)
    counts = np.zeros(2**n, dtype=np.int64)
    for b in range(n):
        counts += (idx >> b) & 1
    return counts


def build_dicke(n: int, k: int, cap: int = DEFAULT_CAP) -> DickeVector:
    """Dense 2^n amplitude vector of |D_n^(k)>."""
    if n < 0 or not 0 <= k <= max(n, 0):
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    if n > cap:
        raise ValueError(f"n={n} exceeds the oracle cap {cap}")
    mask = popcounts(n) == k
    amps = np.where(mask, 1.0 / math.sqrt(math.comb(n, k)), 0.0)
    return DickeVector(n, k, amps)


def _dicke_or_zero(n: int, k: int, cap: int) -> np.ndarray:
    if 0 <= k <= n:
        return build_dicke(n, k, cap).amplitudes
    return np.zeros(2**n)


def jacobi_eigh(a: np.ndarray, tol: float = 1e-15, max_sweeps: int = 60) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of a real symmetric matrix by cyclic Jacobi rotations.

    Returns ``(w, v)`` with ``a @ v[:, i] == w[i] * v[:, i]``; eigenvalues are
    not sorted.
    """
    a = np.array(a, dtype=float, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    m = a.shape[0]
    v = np.eye(m)
    scale = math.sqrt(float(np.sum(a * a))) if m else 0.0
    if m < 2 or scale == 0.0:
        return np.diag(a).copy(), v
    for _ in range(max_sweeps):
        upper = np.triu(a, 1)
        off = math.sqrt(2.0 * float(np.sum(upper * upper)))
        if off <= tol * scale:
            break
        for p in range(m - 1):
            for q in range(p + 1, m):
                apq = a[p, q]
                if abs(apq) <= 1e-300 or abs(apq) < 1e-18 * scale:
                    continue
                app, aqq = a[p, p], a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                a[p, :] = a[:, p]
                a[q, :] = a[:, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    return np.diag(a).copy(), v


def _gram_spectrum(m: np.ndarray) -> np.ndarray:
    # M M^T and M^T M share their nonzero eigenvalues; diagonalize the smaller one
    g = m @ m.T if m.shape[0] <= m.shape[1] else m.T @ m
    w, _ = jacobi_eigh(g)
    w = w[w >= EIG_CUTOFF]
    return np.sort(w)[::-1]


def oracle_spectrum(v: DickeVector, j: int) -> np.ndarray:
    """Nonzero Schmidt probabilities of the cut (first j qubits | rest), descending."""
    return _gram_spectrum(v.coefficient_matrix(j))


def oracle_reduced_density(v: DickeVector, j: int) -> np.ndarray:
    """Reduced density matrix M M^T of the first j qubits."""
    if j > GRAM_CAP:
        raise ValueError(f"j={j} exceeds the reduced-density cap {GRAM_CAP}")
    m = v.coefficient_matrix(j)
    return m @ m.T


def oracle_entropy(v: DickeVector, j: int) -> float:
    w = oracle_spectrum(v, j)
    return float(-np.sum(w * np.log2(w)))


def verify_recurrence(n: int, k: int, cap: int = DEFAULT_CAP, atol: float = 1e-12) -> bool:
    """Check |D_n^k> = sqrt((n-k)/n)|0>|D_{n-1}^k> + sqrt(k/n)|1>|D_{n-1}^{k-1}>."""
    if n < 2:
        raise ValueError(f"recurrence needs n >= 2, got {n}")
    full = build_dicke(n, k, cap).amplitudes
    zero, one = np.array([1.0, 0.0]), np.array([0.0, 1.0])
    rebuilt = math.sqrt((n - k) / n) * np.kron(zero, _dicke_or_zero(n - 1, k, cap))
    rebuilt += math.sqrt(k / n) * np.kron(one, _dicke_or_zero(n - 1, k - 1, cap))
    return bool(np.max(np.abs(full - rebuilt)) <= atol)


def decomposition_coefficient_sq(n: int, k: int, j: int, q: int) -> float:
    """Squared Schmidt coefficient n! / (C(n,k) C(n,j) q! (j-q)! (k-q)! (n-k-j+q)!)."""
    f = math.factorial
    num = f(n)
    den = math.comb(n, k) * math.comb(n, j) * f(q) * f(j - q) * f(k - q) * f(n - k - j + q)
    return num / den


def verify_general_decomposition(n: int, k: int, j: int, cap: int = DEFAULT_CAP, atol: float = 1e-12) -> bool:
    """Rebuild |D_n^k> from sum_q c_q |D_j^q>|D_{n-j}^{k-q}> and compare elementwise."""
    if not 0 <= j <= n:
        raise ValueError(f"j must lie in [0, {n}], got {j}")
    full = build_dicke(n, k, cap).amplitudes
    rebuilt = np.zeros_like(full)
    for q in range(max(0, j + k - n), min(j, k) + 1):
        coef = math.sqrt(decomposition_coefficient_sq(n, k, j, q))
        rebuilt += coef * np.kron(build_dicke(j, q, cap).amplitudes, build_dicke(n - j, k - q, cap).amplitudes)
    return bool(np.max(np.abs(full - rebuilt)) <= atol)


def subset_spectrum(v: DickeVector, subset: Sequence[int]) -> np.ndarray:
    """Schmidt probabilities of an arbitrary qubit subset against its complement."""
    subset = list(subset)
    if len(set(subset)) != len(subset) or any(not 0 <= s < v.n for s in subset):
        raise ValueError(f"invalid qubit subset {subset} for n={v.n}")
    rest = [i for i in range(v.n) if i not in subset]
    tensor = v.amplitudes.reshape([2] * v.n) if v.n else v.amplitudes
    m = np.transpose(tensor, subset + rest).reshape(2 ** len(subset), 2 ** len(rest))
    return _gram_spectrum(m)


def verify_block_irrelevance(n: int, k: int, subset: Sequence[int], atol: float = 1e-10) -> bool:
    """The spectrum of any qubit subset equals that of the first |subset| qubits."""
    if n > 10:
        raise ValueError(f"block-irrelevance check is limited to n <= 10, got {n}")
    v = build_dicke(n, k)
    a = subset_spectrum(v, subset)
    b = oracle_spectrum(v, len(subset))
    return a.shape == b.shape and bool(np.max(np.abs(a - b), initial=0.0) <= atol)


def oracle_traced_witness(n: int, k: int, alpha: float | None = None) -> float:
    """Tr(rho_{n-1} W) with rho_{n-1} from the dense state, W = alpha 1 - |D_{n-1}^k><.|."""
    v = build_dicke(n, k)
    rho = oracle_reduced_density(v, n - 1)
    target = build_dicke(n - 1, k).amplitudes
    if alpha is None:
        alpha = (n - 1 - k) / (n - 1)
    return float(alpha * np.trace(rho) - target @ rho @ target)
