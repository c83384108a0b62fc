#include "primeq/qcount.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "primeq/grover.hpp"
#include "primeq/qstate.hpp"

namespace primeq::qcount {

namespace {

constexpr double kPi = std::numbers::pi;

// |(1/T) sum_k e^(ik delta)|^2, the phase-estimation kernel.
double kernel_sq(double delta, uint64_t T) {
    double h = 0.5 * delta;
    double s = std::sin(h);
    if (std::abs(s) < 1e-12) return 1.0;  // coherent peak
    double num = std::sin(double(T) * h);
    double ratio = num / (double(T) * s);
    return ratio * ratio;
}

// Platform-independent uniform double in [0, 1).
double next_uniform(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

uint64_t sample_y(const CountingDistribution& dist, std::mt19937_64& rng) {
    double u = next_uniform(rng);
    double acc = 0.0;
    for (uint64_t y = 0; y + 1 < dist.probs.size(); ++y) {
        acc += dist.probs[y];
        if (u < acc) return y;
    }
    return dist.probs.size() - 1;
}

// In-place radix-2 transform with kernel e^(-2 pi i k y / T).
void fft_forward(std::vector<std::complex<double>>& a) {
    size_t T = a.size();
    for (size_t i = 1, j = 0; i < T; ++i) {
        size_t bit = T >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= T; len <<= 1) {
        std::complex<double> wl = std::polar(1.0, -2.0 * kPi / double(len));
        for (size_t i = 0; i < T; i += len) {
            std::complex<double> w{1.0, 0.0};
            for (size_t k = 0; k < len / 2; ++k) {
                std::complex<double> u = a[i + k];
                std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

CountEstimate map_outcome(const CountingDistribution& dist, uint64_t N, uint64_t y) {
    uint64_t T = uint64_t(1) << dist.t;
    double theta_tilde = 2.0 * kPi * double(y) / double(T);
    if (theta_tilde > kPi) theta_tilde = 2.0 * kPi - theta_tilde;
    double sh = std::sin(0.5 * theta_tilde);
    CountEstimate est;
    est.N = N;
    est.M = uint64_t(std::llround(double(N) * std::pow(std::sin(0.5 * dist.theta), 2)));
    est.t = dist.t;
    est.y_observed = y;
    est.M_tilde = double(N) * sh * sh;
    est.calls = T - 1;
    est.c = double(est.calls) / std::sqrt(double(N));
    est.bound = 2.0 * kPi * std::sqrt(double(est.M)) / est.c + kPi * kPi / (est.c * est.c);
    return est;
}

}  // namespace

double grover_angle(uint64_t N, uint64_t M) {
    if (N == 0 || M > N) throw std::domain_error("grover_angle: requires 0 <= M <= N");
    return 2.0 * std::asin(std::sqrt(double(M) / double(N)));
}

CountingDistribution counting_distribution(uint64_t N, uint64_t M, int t) {
    if (t < 1 || t > 20)
        throw std::out_of_range("counting_distribution: t must be in [1, 20]");
    CountingDistribution dist;
    dist.t = t;
    dist.theta = grover_angle(N, M);
    uint64_t T = uint64_t(1) << t;
    dist.probs.resize(T);
    for (uint64_t y = 0; y < T; ++y) {
        double w = 2.0 * kPi * double(y) / double(T);
        dist.probs[y] =
            0.5 * kernel_sq(dist.theta - w, T) + 0.5 * kernel_sq(-dist.theta - w, T);
    }
    return dist;
}

CountEstimate estimate_M(const CountingDistribution& dist, uint64_t N, uint64_t seed) {
    std::mt19937_64 rng(seed);
    return map_outcome(dist, N, sample_y(dist, rng));
}

double success_frequency(uint64_t N, uint64_t M, int t, int samples, uint64_t seed) {
    if (samples < 1) throw std::domain_error("success_frequency: samples must be >= 1");
    CountingDistribution dist = counting_distribution(N, M, t);
    std::mt19937_64 rng(seed);
    int hits = 0;
    for (int i = 0; i < samples; ++i) {
        CountEstimate est = map_outcome(dist, N, sample_y(dist, rng));
        if (std::abs(est.M_tilde - double(M)) < est.bound) ++hits;
    }
    return double(hits) / double(samples);
}

double pi_accuracy_bound(double x, double c) {
    return 2.0 * kPi / c * std::sqrt(x / std::log(x));
}

std::vector<RhRow> rh_comparison_scan(const ntheory::PrimeTable& table,
                                      int n_min, int n_max, double c) {
    if (n_min < 2 || n_min > n_max)
        throw std::domain_error("rh_comparison_scan: need 2 <= n_min <= n_max");
    if (!(c > 0.0)) throw std::domain_error("rh_comparison_scan: c must be positive");
    std::vector<RhRow> rows;
    rows.reserve(size_t(n_max - n_min + 1));
    for (int n = n_min; n <= n_max; ++n) {
        uint64_t x = uint64_t(1) << n;
        RhRow row;
        row.n = n;
        row.x = double(x);
        row.pi = ntheory::pi(table, x);
        row.li = ntheory::li(row.x);
        row.abs_err = std::abs(double(row.pi) - row.li);
        row.qc_bound = pi_accuracy_bound(row.x, c);
        row.rh_scale = std::sqrt(row.x) * std::log(row.x);
        rows.push_back(row);
    }
    return rows;
}

CountingDistribution brute_force_counting(int n, int t, const ntheory::PrimeTable& table) {
    if (n < 2 || t < 1 || n + t > 20)
        throw std::out_of_range("brute_force_counting: full register capped at n + t <= 20");
    if (table.limit < (uint64_t(1) << n))
        throw std::invalid_argument("brute_force_counting: table must cover [0, 2^n)");
    uint64_t N = uint64_t(1) << n;
    uint64_t T = uint64_t(1) << t;
    uint64_t M = ntheory::pi(table, N - 1);

    // (1/sqrt(T)) sum_y |y> G^y |psi>, rows indexed by the phase register
    std::vector<std::complex<double>> reg(T * N);
    qstate::QuantumState work = qstate::uniform_state(n);
    for (uint64_t y = 0; y < T; ++y) {
        std::copy(work.amp.begin(), work.amp.end(), reg.begin() + ptrdiff_t(y * N));
        if (y + 1 < T) {
            work = grover::oracle_sign_flip(
                work, [&table](uint64_t v) { return table.is_prime(v); });
            work = grover::diffusion(work);
        }
    }

    // Fourier transform on the phase register, column by column; outcome k
    // collects (1/T) sum_y e^(-2 pi i k y / T) G^y |psi>.
    std::vector<std::complex<double>> col(T);
    CountingDistribution dist;
    dist.t = t;
    dist.theta = grover_angle(N, M);
    dist.probs.assign(T, 0.0);
    for (uint64_t x = 0; x < N; ++x) {
        for (uint64_t y = 0; y < T; ++y) col[y] = reg[y * N + x];
        fft_forward(col);
        for (uint64_t k = 0; k < T; ++k) dist.probs[k] += std::norm(col[k]);
    }
    double inv_t2 = 1.0 / (double(T) * double(T));
    for (auto& p : dist.probs) p *= inv_t2;
    return dist;
}

}  // namespace primeq::qcount
