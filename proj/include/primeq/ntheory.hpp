#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace primeq::ntheory {

// Sieve-backed primality bitmap over [0, limit) with cumulative counts
// every 2^16 integers for fast pi(x) queries.
struct PrimeTable {
    uint64_t limit = 0;
    std::vector<uint64_t> bits;
    std::vector<uint64_t> cum;

    bool is_prime(uint64_t x) const {
        return x < limit && ((bits[x >> 6] >> (x & 63)) & 1u);
    }
};

inline constexpr uint64_t kSieveMaxLimit = uint64_t(1) << 34;

PrimeTable sieve(uint64_t limit);

struct MrDecomposition {
    uint64_t x = 0;
    uint64_t d = 0;
    int s = 0;
};

// x - 1 = d * 2^s with d odd.
MrDecomposition mr_decompose(uint64_t x);

enum class Verdict { composite_proven, probable_prime };

// Single-witness strong test: composite_proven iff a^d != 1 (mod x) and
// a^(2^r d) != x-1 (mod x) for every r in [0, s-1]. Requires 1 <= a < x.
Verdict mr_witness_test(uint64_t x, uint64_t a);

struct WitnessSet {
    enum class Mode { deterministic, probabilistic };
    Mode mode = Mode::deterministic;
    std::vector<uint64_t> witnesses;  // fixed list (deterministic mode)
    int k = 0;                        // draws per tested x (probabilistic mode)
    uint64_t seed = 0;

    static WitnessSet deterministic();
    static WitnessSet fixed(std::vector<uint64_t> ws);
    static WitnessSet probabilistic(int k, uint64_t seed);

    // Witnesses to run against a given x. Probabilistic mode draws k values
    // uniformly from [2, x-2], reproducibly keyed on (seed, x).
    std::vector<uint64_t> witnesses_for(uint64_t x) const;
};

bool is_prime(uint64_t x, const WitnessSet& ws);
bool is_prime(uint64_t x);  // deterministic default set

uint64_t pi(const PrimeTable& table, uint64_t x);

// Primes p <= x with p = b (mod a); gcd(a, b) must be 1.
uint64_t pi_ab(const PrimeTable& table, uint64_t a, uint64_t b, uint64_t x);

enum class TwinClass { c1, c3, all };

// Twin pairs (p, p+2) with both members <= x, split by p mod 4.
uint64_t pi_twin(const PrimeTable& table, uint64_t x, TwinClass cls);

struct BiasReport {
    uint64_t x = 0;
    uint64_t pi41 = 0;
    uint64_t pi43 = 0;
    int64_t delta = 0;   // pi43 - pi41
    uint64_t pi2_1 = 0;
    uint64_t pi2_3 = 0;
    int64_t delta2 = 0;  // pi2_3 - pi2_1
};

BiasReport chebyshev_bias(const PrimeTable& table, uint64_t x);

uint64_t euler_phi(uint64_t a);

// Offset logarithmic integral, integral from 2 to x of dt/ln t.
double li(double x);

// Twin prime constant via the Euler product over odd primes p <= 2^24,
// truncated where the tail moves the value by < 1e-8.
double twin_prime_constant();

// Hardy-Littlewood form 2*C2*x/(ln x)^2.
double hl_twin_estimate(double x);

// |pi(x) - Li(x)| / (sqrt(x) * ln x).
double rh_residual(const PrimeTable& table, uint64_t x);

}  // namespace primeq::ntheory
