"""Exact integer/rational primitives shared by every closed form.

Python ints are already arbitrary precision and :class:`fractions.Fraction`
keeps rationals in lowest terms with a positive denominator, so those two
stdlib types play the roles of the big integer and big rational here.
"""

from __future__ import annotations

import math
from fractions import Fraction

# Bits kept from the top of an integer before handing it to math.log2.
_MANTISSA_BITS = 64


def binomial(n: int, k: int) -> int:
    """Return C(n, k), with C(n, k) = 0 outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def binomial_row(n: int) -> list[int]:
    """Return the full Pascal row [C(n, 0), ..., C(n, n)]."""
    if n < 0:
        raise ValueError(f"binomial_row needs n >= 0, got n={n}")
    row = [1]
    c = 1
    for i in range(n):
        c = c * (n - i) // (i + 1)
        row.append(c)
    return row


def log2_big(x: int) -> float:
    """Base-2 logarithm of a positive integer of any size.

    Only the leading 64 bits of ``x`` enter the floating-point log; the rest
    is accounted for exactly through the bit length, so the result is good to
    about one ulp of the returned value even for integers far beyond the
    float64 range.
    """
    x = int(x)
    if x <= 0:
        raise ValueError(f"log2_big needs a positive integer, got {x}")
    shift = x.bit_length() - _MANTISSA_BITS
    if shift <= 0:
        return math.log2(x)
    return shift + math.log2(x >> shift)


def hypergeom_weight(n: int, k: int, j: int, q: int) -> Fraction:
    """Schmidt probability of the q-th term for the cut (j | n-j) of |D_n^(k)>.

    Equals C(j, q) C(n-j, k-q) / C(n, k): the chance that a uniformly drawn
    weight-k bitstring puts exactly q ones into the first j positions.
    """
    if not (0 <= k <= n and 0 <= j <= n):
        raise ValueError(f"need 0 <= k, j <= n, got n={n}, k={k}, j={j}")
    q_lo, q_hi = max(0, j + k - n), min(j, k)
    if not q_lo <= q <= q_hi:
        raise ValueError(f"q={q} outside [{q_lo}, {q_hi}] for n={n}, k={k}, j={j}")
    return Fraction(math.comb(j, q) * math.comb(n - j, k - q), math.comb(n, k))
