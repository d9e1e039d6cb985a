import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dicke.analysis import DickeIndex, max_schmidt_probability, schmidt_spectrum
from dicke.oracle import build_dicke, oracle_traced_witness
from dicke.witness import (
    WitnessScenario,
    expectation_asymmetric,
    expectation_combined,
    noise_root,
    overlap_term,
    p_max_white_noise,
    separatrix,
    separatrix_p,
    separatrix_peak,
    traced_witness_value,
    witness_alpha,
)


def scenario(n, k, a=0.0, p=0.0):
    return WitnessScenario(DickeIndex(n, k), a, p)


@st.composite
def canonical_index(draw, n_max=20):
    n = draw(st.integers(2, n_max))
    return n, draw(st.integers(1, n // 2))


unit = st.floats(0.0, 1.0, allow_nan=False)


def test_scenario_canonicalizes_and_validates():
    assert scenario(10, 7).index == DickeIndex(10, 3)
    with pytest.raises(ValueError):
        scenario(10, 0)
    with pytest.raises(ValueError):
        scenario(10, 10)
    with pytest.raises(ValueError):
        scenario(10, 1, a=1.5)
    with pytest.raises(ValueError):
        scenario(10, 1, p=-0.1)


def test_witness_alpha_examples():
    assert witness_alpha(10, 5) == Fraction(1, 2)
    assert witness_alpha(10, 1) == Fraction(9, 10)
    for bad in (0, 10):
        with pytest.raises(ValueError):
            witness_alpha(10, bad)


def test_witness_alpha_vs_exhaustive_schmidt_maximum():
    # j = 1 carries the largest Schmidt probability except at half filling
    for n in range(2, 15):
        for k in range(1, n // 2 + 1):
            top = max(max(schmidt_spectrum(n, k, j).probs) for j in range(1, n))
            assert max_schmidt_probability(n, k)[0] == top
            if 2 * k < n or n == 2:
                assert top == witness_alpha(n, k) == Fraction(n - k, n)
            else:
                assert top == Fraction(n, 2 * (n - 1)) > witness_alpha(n, k)


def test_p_max_values():
    assert p_max_white_noise(10, 1) == pytest.approx(0.10009775171065494, abs=1e-15)
    assert p_max_white_noise(10, 5) == pytest.approx(0.5004887585532747, abs=1e-15)


def test_expectation_asymmetric_examples():
    for n in range(2, 12):
        for k in range(1, n // 2 + 1):
            assert expectation_asymmetric(n, k, 0.0) == pytest.approx(-k / n, abs=1e-15)
    assert expectation_asymmetric(4, 2, 1.0) == pytest.approx(1 / 2 - 1 / 6, abs=1e-15)


@given(st.floats(0.01, 1.0))
def test_half_filling_more_robust_than_w(a):
    n = 10
    assert expectation_asymmetric(n, n // 2, a) < expectation_asymmetric(n, 1, a)


def test_expectation_combined_examples():
    p = p_max_white_noise(10, 1)
    assert abs(expectation_combined(scenario(10, 1, 0.0, p))) < 1e-12
    assert expectation_combined(scenario(10, 3)) == pytest.approx(-0.3, abs=1e-15)
    assert expectation_combined(scenario(10, 3, 1.0, 1.0)) == pytest.approx(0.7 - 2.0**-10, abs=1e-15)


@given(canonical_index(), unit)
def test_combined_reduces_to_asymmetric_at_p0(idx, a):
    n, k = idx
    assert expectation_combined(scenario(n, k, a, 0.0)) == expectation_asymmetric(n, k, a)


@given(canonical_index(), unit, unit, unit)
def test_combined_is_affine_in_p(idx, a, p1, p2):
    n, k = idx
    f = lambda p: expectation_combined(scenario(n, k, a, p))
    mid = 0.5 * (p1 + p2)
    assert f(mid) == pytest.approx(0.5 * (f(p1) + f(p2)), abs=1e-12)


@given(canonical_index(), unit, unit)
def test_flip_invariance(idx, a, p):
    n, k = idx
    assert expectation_combined(scenario(n, k, a, p)) == expectation_combined(scenario(n, n - k, a, p))
    assert expectation_asymmetric(n, k, a) == expectation_asymmetric(n, n - k, a)
    assert p_max_white_noise(n, k) == p_max_white_noise(n, n - k)
    assert separatrix_peak(n, k) == separatrix_peak(n, n - k)


@given(canonical_index())
def test_p_max_is_separatrix_root_at_a0(idx):
    n, k = idx
    pt = separatrix_p(n, k, 0.0)
    assert abs(pt.p - p_max_white_noise(n, k)) < 1e-12
    assert abs(expectation_combined(scenario(n, k, 0.0, pt.p))) < 1e-12


@given(canonical_index(), unit)
def test_unclamped_separatrix_points_zero_the_expectation(idx, a):
    n, k = idx
    pt = separatrix_p(n, k, a)
    if not pt.clamped:
        assert abs(expectation_combined(scenario(n, k, a, pt.p))) < 1e-12


def test_separatrix_reference_points():
    assert separatrix_p(10, 1, 0.0).p == pytest.approx(0.10, abs=0.005)
    assert separatrix_p(10, 1, 0.30).p == pytest.approx(0.18, abs=0.005)
    assert separatrix_p(10, 5, 0.0).p == pytest.approx(0.500, abs=0.0005)
    assert separatrix_p(10, 5, 0.063).p == pytest.approx(0.502, abs=0.0005)


def test_separatrix_clamps_at_full_asymmetry():
    for n in range(3, 21):
        for k in range(1, n // 2 + 1):
            c = math.comb(n, k)
            raw = (1 / c - (n - k) / n) / (1 / c - 2.0**-n)
            assert raw < 0
            pt = separatrix_p(n, k, 1.0)
            assert pt.clamped and pt.p == 0.0 and not pt.no_root


def test_separatrix_preserves_grid_order():
    grid = [0.9, 0.1, 0.5, 0.0]
    assert [pt.a for pt in separatrix(10, 2, grid)] == grid


def test_separatrix_peak_values():
    a, p = separatrix_peak(10, 1)
    assert a == pytest.approx(0.30151134457776363, abs=1e-15)
    assert p == pytest.approx(0.18197974053669806, abs=1e-15)
    a, p = separatrix_peak(10, 5)
    assert a == pytest.approx(0.06286946134619315, abs=1e-15)
    assert p == pytest.approx(0.5024650336140947, abs=1e-15)


def test_peak_beats_zero_asymmetry():
    for n in range(2, 21):
        for k in range(1, n // 2 + 1):
            assert separatrix_peak(n, k)[1] > separatrix_p(n, k, 0.0).p


@pytest.mark.parametrize("n,k", [(10, 1), (10, 5), (6, 2), (15, 7)])
def test_peak_agrees_with_dense_grid(n, k):
    grid = np.linspace(0.0, 1.0, 100_001)
    ps = np.array([pt.p for pt in separatrix(n, k, grid)])
    i = int(np.argmax(ps))
    a_star, p_star = separatrix_peak(n, k)
    assert abs(grid[i] - a_star) <= 1e-5
    assert abs(ps[i] - p_star) <= 1e-6


@given(canonical_index(), st.floats(1e-6, 1.0), st.floats(1e-6, 1.0))
def test_p_increases_with_overlap(idx, u, v):
    n, k = idx
    floor = 2.0**-n
    assert (n - k) / n > floor
    b1, b2 = sorted(floor + (1 - floor) * x for x in (u, v))
    if b2 - b1 > 1e-9:
        assert noise_root(n, k, b2) > noise_root(n, k, b1)


def test_overlap_term_endpoints():
    assert overlap_term(10, 1, 0.0) == 1.0
    assert overlap_term(10, 1, 1.0) == pytest.approx(0.1)


def test_product_states_are_not_flagged():
    for n in range(2, 11):
        ones = np.array([bin(x).count("1") for x in range(2**n)])
        for k in range(1, n // 2 + 1):
            amps = build_dicke(n, k).amplitudes
            diag = (n - k) / n - amps**2
            assert np.all(diag >= 0)
            assert np.all(diag[ones != k] == (n - k) / n)


def test_traced_witness_examples():
    assert traced_witness_value(10, 5) == Fraction(-1, 18)
    assert traced_witness_value(3, 1) == Fraction(-1, 6)
    with pytest.raises(ValueError):
        traced_witness_value(2, 1)


def test_traced_witness_closed_form_and_oracle():
    for n in range(3, 15):
        for k in range(1, n):
            value = traced_witness_value(n, k)
            assert value < 0
            if 2 * k <= n - 1:
                assert value == Fraction(-k, n * (n - 1))
            if n <= 10:
                assert abs(oracle_traced_witness(n, k) - float(value)) < 1e-12


def test_traced_witness_with_valid_alpha():
    for n in range(3, 15):
        for k in range(1, n):
            value = traced_witness_value(n, k, valid_alpha=True)
            kc = min(k, n - k)
            if 2 * kc == n:
                assert value == Fraction(1, 2 * (n - 1))
            elif 2 * kc == n - 1 and n > 3:
                assert value == Fraction(1, n * (n - 2))
            else:
                assert value == Fraction(-kc, n * (n - 1))
            if n <= 10:
                alpha = float(max_schmidt_probability(n - 1, kc)[0])
                assert abs(oracle_traced_witness(n, kc, alpha) - float(value)) < 1e-12
