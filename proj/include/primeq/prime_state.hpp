#pragma once

#include <functional>

#include "primeq/ntheory.hpp"
#include "primeq/qstate.hpp"

namespace primeq::prime_state {

// Measurement-based preparation statistics: a uniform state projected by
// a primality test succeeds with probability pi(2^n)/2^n.
struct PreparationModel {
    int n = 0;
    double success_prob = 0.0;
    double normalization_A = 0.0;  // uniform amplitude 1/sqrt(2^n)
    double asymptotic = 0.0;       // 1/(n ln 2)
};

// Equal superposition over all primes below 2^n.
qstate::QuantumState build_prime_state(int n, const ntheory::PrimeTable& table);

// Same with |2> left out; the input convention of the reversible
// primality pipeline, which tests odd numbers only.
qstate::QuantumState build_odd_prime_state(int n, const ntheory::PrimeTable& table);

PreparationModel preparation_probability(int n, const ntheory::PrimeTable& table);

using LambdaRule = std::function<double(uint64_t)>;

// Builds the diagonal operator H with H|p> = 0 for primes and
// H|c> = lambda_rule(c)|c> otherwise, then verifies that its kernel is
// exactly the span of prime basis states (so the prime superposition is
// a ground state). Throws if the rule assigns a non-positive penalty.
bool primality_hamiltonian_check(int n, const ntheory::PrimeTable& table,
                                 const LambdaRule& lambda_rule = {});

}  // namespace primeq::prime_state
