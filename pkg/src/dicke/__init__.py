"""Exact bipartition analysis of Dicke states."""

from .analysis import (
    Cut,
    DickeIndex,
    EntropyValue,
    SchmidtSpectrum,
    classical_entropy,
    entropy,
    entropy_single_qubit,
    entropy_upper_bound,
    potential_me,
    potential_me_asymptote,
    purity,
    s_max,
    s_max_fit,
    schmidt_spectrum,
)
from .combinatorics import binomial, hypergeom_weight, log2_big
from .witness import (
    SeparatrixPoint,
    WitnessScenario,
    expectation_asymmetric,
    expectation_combined,
    p_max_white_noise,
    separatrix,
    separatrix_peak,
    traced_witness_value,
    witness_alpha,
)

__version__ = "0.1.0"
