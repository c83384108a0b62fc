#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "primeq/ntheory.hpp"
#include "primeq/prime_state.hpp"
#include "primeq/qstate.hpp"

using namespace primeq;

TEST_CASE("three qubit prime state is exactly half on each prime") {
    ntheory::PrimeTable t = ntheory::sieve(8);
    qstate::QuantumState st = prime_state::build_prime_state(3, t);
    for (uint64_t x = 0; x < 8; ++x) {
        bool p = (x == 2 || x == 3 || x == 5 || x == 7);
        CHECK(st.amp[x].real() == (p ? 0.5 : 0.0));
        CHECK(st.amp[x].imag() == 0.0);
    }
    CHECK(qstate::norm_sq(st) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("odd prime state drops the even prime") {
    ntheory::PrimeTable t = ntheory::sieve(8);
    qstate::QuantumState st = prime_state::build_odd_prime_state(3, t);
    CHECK(st.amp[2].real() == 0.0);
    double a = 1.0 / std::sqrt(3.0);
    for (uint64_t x : {3ull, 5ull, 7ull})
        CHECK(st.amp[x].real() == doctest::Approx(a).epsilon(1e-15));
}

TEST_CASE("prime state norm stays flat through n=16") {
    ntheory::PrimeTable t = ntheory::sieve(1u << 16);
    for (int n : {8, 12, 16}) {
        qstate::QuantumState st = prime_state::build_prime_state(n, t);
        CHECK(qstate::norm_sq(st) == doctest::Approx(1.0).epsilon(1e-13));
        uint64_t nonzero = 0;
        for (const auto& a : st.amp) nonzero += a != std::complex<double>{0.0, 0.0};
        CHECK(nonzero == ntheory::pi(t, (uint64_t(1) << n) - 1));
    }
}

TEST_CASE("preparation bounds") {
    ntheory::PrimeTable t = ntheory::sieve(8);
    CHECK_THROWS_AS(prime_state::build_prime_state(1, t), std::domain_error);
    CHECK_THROWS_AS(prime_state::build_prime_state(25, t), std::domain_error);
    CHECK_THROWS_AS(prime_state::build_prime_state(4, t), std::invalid_argument);
}

TEST_CASE("preparation model for n=8") {
    ntheory::PrimeTable t = ntheory::sieve(256);
    prime_state::PreparationModel pm = prime_state::preparation_probability(8, t);
    CHECK(pm.n == 8);
    CHECK(pm.success_prob == doctest::Approx(54.0 / 256.0).epsilon(1e-15));
    CHECK(pm.normalization_A == doctest::Approx(1.0 / 16.0).epsilon(1e-15));
    CHECK(pm.asymptotic == doctest::Approx(1.0 / (8.0 * std::log(2.0))).epsilon(1e-15));
    // the asymptotic density tracks the exact fraction within a factor of two
    CHECK(pm.success_prob / pm.asymptotic > 0.5);
    CHECK(pm.success_prob / pm.asymptotic < 2.0);
}

TEST_CASE("projector hamiltonian annihilates exactly the primes") {
    ntheory::PrimeTable t = ntheory::sieve(1u << 10);
    CHECK(prime_state::primality_hamiltonian_check(10, t));
    CHECK(prime_state::primality_hamiltonian_check(
        10, t, [](uint64_t x) { return 1.0 + double(x % 7); }));
    CHECK_THROWS_AS(prime_state::primality_hamiltonian_check(
                        10, t, [](uint64_t) { return 0.0; }),
                    std::invalid_argument);
}
