"""Prime-state quantum simulation kernels.

Thin wrapper over the compiled extension; everything numerical lives in C++.
"""

from ._core import (
    PrimeTable,
    chebyshev_bias,
    counting_distribution,
    entropy,
    euler_phi,
    hl_twin_estimate,
    is_prime,
    li,
    mr_decompose,
    optimal_iterations,
    oracle_mismatches,
    pauli_expectation,
    pg_analytic,
    preparation_probability,
    prime_state_amplitudes,
    r_max,
    run_grover,
    sieve,
    single_qubit_density,
    success_frequency,
    twin_prime_constant,
    two_site_flip,
)

__all__ = [
    "PrimeTable",
    "chebyshev_bias",
    "counting_distribution",
    "entropy",
    "euler_phi",
    "hl_twin_estimate",
    "is_prime",
    "li",
    "mr_decompose",
    "optimal_iterations",
    "oracle_mismatches",
    "pauli_expectation",
    "pg_analytic",
    "preparation_probability",
    "prime_state_amplitudes",
    "r_max",
    "run_grover",
    "sieve",
    "single_qubit_density",
    "success_frequency",
    "twin_prime_constant",
    "two_site_flip",
]
