#pragma once

#include <cstdint>
#include <vector>

#include "primeq/ntheory.hpp"

namespace primeq::qcount {

// Exact outcome distribution of t-bit phase estimation on the Grover
// operator, computed in its two-dimensional invariant plane.
struct CountingDistribution {
    int t = 0;
    double theta = 0.0;
    std::vector<double> probs;  // length 2^t, indexed by outcome y
};

struct CountEstimate {
    uint64_t N = 0;
    uint64_t M = 0;       // true count behind the distribution's angle
    int t = 0;
    uint64_t y_observed = 0;
    double M_tilde = 0.0;
    uint64_t calls = 0;   // 2^t - 1 controlled Grover applications
    double c = 0.0;       // calls / sqrt(N)
    double bound = 0.0;   // (2 pi / c) sqrt(M) + pi^2 / c^2
};

// theta = 2 arcsin(sqrt(M/N)).
double grover_angle(uint64_t N, uint64_t M);

CountingDistribution counting_distribution(uint64_t N, uint64_t M, int t);

// Draw one outcome y, fold 2*pi*y/2^t into [0, pi], return
// M_tilde = N sin^2(theta_tilde/2) with the call accounting.
CountEstimate estimate_M(const CountingDistribution& dist, uint64_t N, uint64_t seed);

// Fraction of `samples` draws with |M_tilde - M| < bound.
double success_frequency(uint64_t N, uint64_t M, int t, int samples, uint64_t seed);

// (2 pi / c) sqrt(x / ln x), the counting accuracy scale for pi(x).
double pi_accuracy_bound(double x, double c);

struct RhRow {
    int n = 0;
    double x = 0.0;
    uint64_t pi = 0;
    double li = 0.0;
    double abs_err = 0.0;   // |pi(x) - Li(x)|
    double qc_bound = 0.0;  // pi_accuracy_bound(x, c)
    double rh_scale = 0.0;  // sqrt(x) ln x
};

std::vector<RhRow> rh_comparison_scan(const ntheory::PrimeTable& table,
                                      int n_min, int n_max, double c);

// Brute-force (t+n)-qubit phase estimation over the full register,
// kept as a cross-check oracle at toy sizes.
CountingDistribution brute_force_counting(int n, int t, const ntheory::PrimeTable& table);

}  // namespace primeq::qcount
