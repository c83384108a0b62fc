#include "primeq/grover.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "primeq/prime_state.hpp"

namespace primeq::grover {

namespace {

constexpr int kMaxSimQubits = 22;

struct Kahan {
    double sum = 0.0, carry = 0.0;
    void add(double v) {
        double y = v - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

std::complex<double> mean_amp(const std::vector<std::complex<double>>& amp) {
    Kahan re, im;
    for (const auto& a : amp) {
        re.add(a.real());
        im.add(a.imag());
    }
    double inv = 1.0 / double(amp.size());
    return {re.sum * inv, im.sum * inv};
}

void oracle_in_place(qstate::QuantumState& state, const Predicate& predicate) {
    for (uint64_t x = 0; x < state.dim(); ++x)
        if (predicate(x)) state.amp[x] = -state.amp[x];
}

void diffusion_in_place(qstate::QuantumState& state) {
    std::complex<double> two_mean = 2.0 * mean_amp(state.amp);
    for (auto& a : state.amp) a = two_mean - a;
}

}  // namespace

qstate::QuantumState oracle_sign_flip(const qstate::QuantumState& state,
                                      const Predicate& predicate) {
    qstate::QuantumState out = state;
    oracle_in_place(out, predicate);
    return out;
}

qstate::QuantumState diffusion(const qstate::QuantumState& state) {
    qstate::QuantumState out = state;
    diffusion_in_place(out);
    return out;
}

int optimal_iterations(uint64_t N, uint64_t M) {
    if (M < 1) throw std::domain_error("optimal_iterations: M must be >= 1");
    if (2 * M > N) throw std::domain_error("optimal_iterations: requires M <= N/2");
    double s = std::sqrt(double(M) / double(N));
    return int(std::floor(std::acos(s) / (2.0 * std::asin(s))));
}

int r_max(int n) {
    if (n < 2) throw std::domain_error("r_max: n must be >= 2");
    return int(std::floor(std::numbers::pi / 4.0 * std::sqrt(double(n) * std::log(2.0))));
}

double pg_analytic(uint64_t N, uint64_t M, int R) {
    if (M < 1 || M > N) throw std::domain_error("pg_analytic: requires 1 <= M <= N");
    double theta = 2.0 * std::asin(std::sqrt(double(M) / double(N)));
    double s = std::sin((2.0 * R + 1.0) * theta / 2.0);
    return s * s;
}

GroverRun run_grover(int n, const ntheory::PrimeTable& table, int R) {
    if (n < qstate::kMinQubits || n > kMaxSimQubits)
        throw std::out_of_range("run_grover: statevector simulation capped at n = 22");
    if (R < 0) throw std::domain_error("run_grover: R must be >= 0");
    if (table.limit < (uint64_t(1) << n))
        throw std::invalid_argument("run_grover: table must cover [0, 2^n)");

    uint64_t N = uint64_t(1) << n;
    uint64_t M = ntheory::pi(table, N - 1);
    qstate::QuantumState state = qstate::uniform_state(n);
    Predicate prime = [&table](uint64_t x) { return table.is_prime(x); };
    for (int r = 0; r < R; ++r) {
        oracle_in_place(state, prime);
        diffusion_in_place(state);
    }

    // overlap with the prime state: all target amplitudes carry 1/sqrt(M)
    Kahan re, im;
    for (uint64_t x = 2; x < N; ++x) {
        if (!table.is_prime(x)) continue;
        re.add(state.amp[x].real());
        im.add(state.amp[x].imag());
    }
    double inv_sqrt_m = 1.0 / std::sqrt(double(M));
    std::complex<double> ov{re.sum * inv_sqrt_m, im.sum * inv_sqrt_m};

    GroverRun run;
    run.n = n;
    run.N = N;
    run.M = M;
    run.R = R;
    run.theta = 2.0 * std::asin(std::sqrt(double(M) / double(N)));
    run.overlap = std::norm(ov);
    return run;
}

std::vector<FigureRow> figure_scan(int n_min, int n_max, const PiProvider& pi_of_n) {
    if (n_min < 2 || n_min > n_max)
        throw std::domain_error("figure_scan: need 2 <= n_min <= n_max");
    if (n_max > 62) throw std::out_of_range("figure_scan: n_max capped at 62");
    std::vector<FigureRow> rows;
    rows.reserve(size_t(n_max - n_min + 1));
    for (int n = n_min; n <= n_max; ++n) {
        FigureRow row;
        row.n = n;
        row.Rmax = r_max(n);
        std::optional<uint64_t> m = pi_of_n(n);
        if (!m) {
            rows.push_back(row);  // explicit gap, never interpolated
            continue;
        }
        uint64_t N = uint64_t(1) << n;
        row.have_pi = true;
        row.M = *m;
        row.R = optimal_iterations(N, *m);
        row.PG = pg_analytic(N, *m, row.R);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace primeq::grover
