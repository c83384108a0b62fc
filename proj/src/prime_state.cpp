#include "primeq/prime_state.hpp"

#include <cmath>
#include <stdexcept>

namespace primeq::prime_state {

namespace {

void check_n(int n) {
    if (n < qstate::kMinQubits || n > qstate::kMaxQubits)
        throw std::domain_error("prime state: n must be in [2, 24]");
}

void check_table(int n, const ntheory::PrimeTable& table) {
    if (table.limit < (uint64_t(1) << n))
        throw std::invalid_argument("prime state: table must cover [0, 2^n)");
}

}  // namespace

qstate::QuantumState build_prime_state(int n, const ntheory::PrimeTable& table) {
    check_n(n);
    check_table(n, table);
    uint64_t N = uint64_t(1) << n;
    uint64_t M = ntheory::pi(table, N - 1);
    qstate::QuantumState st;
    st.n = n;
    st.amp.assign(N, {0.0, 0.0});
    double a = 1.0 / std::sqrt(double(M));
    for (uint64_t x = 2; x < N; ++x)
        if (table.is_prime(x)) st.amp[x] = {a, 0.0};
    return st;
}

qstate::QuantumState build_odd_prime_state(int n, const ntheory::PrimeTable& table) {
    check_n(n);
    check_table(n, table);
    uint64_t N = uint64_t(1) << n;
    uint64_t M = ntheory::pi(table, N - 1) - 1;  // |2> left out
    qstate::QuantumState st;
    st.n = n;
    st.amp.assign(N, {0.0, 0.0});
    double a = 1.0 / std::sqrt(double(M));
    for (uint64_t x = 3; x < N; x += 2)
        if (table.is_prime(x)) st.amp[x] = {a, 0.0};
    return st;
}

PreparationModel preparation_probability(int n, const ntheory::PrimeTable& table) {
    check_n(n);
    check_table(n, table);
    uint64_t N = uint64_t(1) << n;
    PreparationModel model;
    model.n = n;
    model.success_prob = double(ntheory::pi(table, N - 1)) / double(N);
    model.normalization_A = 1.0 / std::sqrt(double(N));
    model.asymptotic = 1.0 / (double(n) * std::log(2.0));
    return model;
}

bool primality_hamiltonian_check(int n, const ntheory::PrimeTable& table,
                                 const LambdaRule& lambda_rule) {
    check_n(n);
    check_table(n, table);
    uint64_t N = uint64_t(1) << n;
    uint64_t M = ntheory::pi(table, N - 1);
    double inv_m = 1.0 / double(M);
    uint64_t kernel = 0;
    double expectation = 0.0;
    for (uint64_t x = 0; x < N; ++x) {
        bool prime = table.is_prime(x);
        double lam = prime ? 0.0 : (lambda_rule ? lambda_rule(x) : 1.0);
        if (!prime && !(lam > 0.0))
            throw std::invalid_argument(
                "primality_hamiltonian_check: penalty must be positive on composites");
        if (lam == 0.0) ++kernel;
        if (prime) expectation += lam * inv_m;  // prime-state weight |amp|^2
    }
    return kernel == M && expectation == 0.0;
}

}  // namespace primeq::prime_state
