import math

import primeq


def test_sieve_and_pi():
    t = primeq.sieve(128)
    assert t.pi(100) == 25
    assert t.is_prime(97)
    assert not t.is_prime(91)


def test_is_prime_matches_known():
    assert primeq.is_prime(2**31 - 1)
    assert not primeq.is_prime(2047)
    d, s = primeq.mr_decompose(221)
    assert (d, s) == (55, 2)


def test_prime_state_n3():
    amps = primeq.prime_state_amplitudes(3)
    nonzero = {i for i, a in enumerate(amps) if a != 0}
    assert nonzero == {2, 3, 5, 7}
    assert all(abs(amps[i] - 0.5) < 1e-15 for i in nonzero)


def test_density_and_entropy():
    rho = primeq.single_qubit_density(8, 0)
    pi = 54  # primes below 256
    assert abs(rho[0][0].real - 1 / pi) < 1e-12
    assert abs(rho[0][1].real - 1 / pi) < 1e-12
    assert abs(rho[1][1].real - (pi - 1) / pi) < 1e-12
    s = primeq.entropy(8, 4)
    assert 0.0 < s < 4 * math.log(2)


def test_grover_roundtrip():
    run = primeq.run_grover(8, primeq.optimal_iterations(256, 54))
    analytic = primeq.pg_analytic(256, 54, run["R"])
    assert abs(run["overlap"] - analytic) < 1e-10
    assert primeq.r_max(45) == 4


def test_counting_distribution_normalized():
    probs = primeq.counting_distribution(256, 54, 8)
    assert abs(sum(probs) - 1.0) < 1e-9


def test_oracle_no_mismatches_small():
    assert primeq.oracle_mismatches(10) == 0


def test_li_and_twin_constant():
    assert abs(primeq.li(100) - 29.080977803962137) < 1e-9
    assert 0.66 < primeq.twin_prime_constant() < 0.6602
