#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "primeq/ntheory.hpp"
#include "primeq/qstate.hpp"

namespace primeq::grover {

struct GroverRun {
    int n = 0;
    uint64_t N = 0;
    uint64_t M = 0;
    int R = 0;
    double theta = 0.0;    // sin(theta/2) = sqrt(M/N)
    double overlap = 0.0;  // P_G after R iterations
};

using Predicate = std::function<bool(uint64_t)>;

// amp[x] -> (-1)^f(x) amp[x].
qstate::QuantumState oracle_sign_flip(const qstate::QuantumState& state,
                                      const Predicate& predicate);

// Reflection about the uniform state: amp -> 2*mean - amp.
qstate::QuantumState diffusion(const qstate::QuantumState& state);

// R = floor(arccos(sqrt(M/N)) / (2 arcsin(sqrt(M/N)))), valid for M <= N/2.
int optimal_iterations(uint64_t N, uint64_t M);

// floor((pi/4) sqrt(n ln 2)), the schedule bound for M = pi(2^n).
int r_max(int n);

// Full statevector run of (diffusion o oracle)^R from the uniform state,
// oracle predicate = sieve primality; overlap against the prime state.
GroverRun run_grover(int n, const ntheory::PrimeTable& table, int R);

// sin^2((2R+1) theta/2) in the two-dimensional invariant plane.
double pg_analytic(uint64_t N, uint64_t M, int R);

struct FigureRow {
    int n = 0;
    bool have_pi = false;  // gap marker when the pi source has no value
    uint64_t M = 0;
    int R = 0;
    int Rmax = 0;
    double PG = 0.0;
};

using PiProvider = std::function<std::optional<uint64_t>(int)>;

// Analytic (n, R, Rmax, PG) rows over a qubit range; rows without a pi
// value are emitted as explicit gaps, never interpolated.
std::vector<FigureRow> figure_scan(int n_min, int n_max, const PiProvider& pi_of_n);

}  // namespace primeq::grover
