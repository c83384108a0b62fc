#include "primeq/qstate.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace primeq::qstate {

namespace {

constexpr int kMaxMaterializedL = 11;  // reduced density capped at 2048^2
constexpr double kEigClamp = 1e-14;
constexpr double kHermTol = 1e-12;
constexpr double kTraceTol = 1e-10;

// Compensated accumulator; the density identities are checked at 1e-12
// after 2^20-term sums, which plain summation does not reliably hit.
struct Kahan {
    double sum = 0.0, carry = 0.0;
    void add(double v) {
        double y = v - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

void check_state(const QuantumState& state) {
    if (state.n < 1 || state.n > kMaxQubits)
        throw std::domain_error("state qubit count out of range");
    if (state.amp.size() != (uint64_t(1) << state.n))
        throw std::invalid_argument("amplitude vector size does not match qubit count");
}

double entropy_of_eigenvalues(const Eigen::VectorXd& ev) {
    Kahan s;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        double lam = ev[i];
        if (lam > kEigClamp) s.add(-lam * std::log(lam));
    }
    return s.sum;
}

EntropyRecord make_record(int n, int l, double nats) {
    EntropyRecord rec;
    rec.n = n;
    rec.l = l;
    rec.entropy_nats = nats;
    rec.entropy_bits = nats / std::log(2.0);
    return rec;
}

}  // namespace

QuantumState zero_state(int n) {
    if (n < kMinQubits || n > kMaxQubits)
        throw std::domain_error("zero_state: n must be in [2, 24]");
    QuantumState st;
    st.n = n;
    st.amp.assign(uint64_t(1) << n, {0.0, 0.0});
    st.amp[0] = {1.0, 0.0};
    return st;
}

QuantumState uniform_state(int n) {
    if (n < kMinQubits || n > kMaxQubits)
        throw std::domain_error("uniform_state: n must be in [2, 24]");
    QuantumState st;
    st.n = n;
    uint64_t dim = uint64_t(1) << n;
    st.amp.assign(dim, {1.0 / std::sqrt(double(dim)), 0.0});
    return st;
}

double norm_sq(const QuantumState& state) {
    check_state(state);
    Kahan s;
    for (const auto& a : state.amp) s.add(std::norm(a));
    return s.sum;
}

DensityMatrix reduced_density(const QuantumState& state, int l) {
    check_state(state);
    if (l < 1 || l >= state.n)
        throw std::domain_error("reduced_density: l must be in [1, n-1]");
    if (l > kMaxMaterializedL)
        throw std::out_of_range("reduced_density: materialized dimension capped at 2^11");
    uint64_t rows = uint64_t(1) << l;
    uint64_t cols = uint64_t(1) << (state.n - l);
    Eigen::Map<const Eigen::Matrix<std::complex<double>, Eigen::Dynamic,
                                   Eigen::Dynamic, Eigen::RowMajor>>
        A(state.amp.data(), Eigen::Index(rows), Eigen::Index(cols));
    DensityMatrix rho;
    rho.dim = int(rows);
    rho.entries = A * A.adjoint();
    return rho;
}

DensityMatrix single_qubit_density(const QuantumState& state, int i) {
    check_state(state);
    if (i < 0 || i >= state.n)
        throw std::domain_error("single_qubit_density: qubit index out of range");
    uint64_t bit = uint64_t(1) << i;
    uint64_t low_mask = bit - 1;
    uint64_t half = uint64_t(1) << (state.n - 1);
    Kahan r00, r11, r01re, r01im;
    for (uint64_t base = 0; base < half; ++base) {
        uint64_t x = ((base & ~low_mask) << 1) | (base & low_mask);
        std::complex<double> a0 = state.amp[x];
        std::complex<double> a1 = state.amp[x | bit];
        r00.add(std::norm(a0));
        r11.add(std::norm(a1));
        std::complex<double> cross = a0 * std::conj(a1);
        r01re.add(cross.real());
        r01im.add(cross.imag());
    }
    DensityMatrix rho;
    rho.dim = 2;
    rho.entries.resize(2, 2);
    rho.entries(0, 0) = {r00.sum, 0.0};
    rho.entries(1, 1) = {r11.sum, 0.0};
    rho.entries(0, 1) = {r01re.sum, r01im.sum};
    rho.entries(1, 0) = std::conj(rho.entries(0, 1));
    return rho;
}

EntropyRecord von_neumann_entropy(const DensityMatrix& rho) {
    if (rho.dim < 1 || rho.entries.rows() != rho.dim || rho.entries.cols() != rho.dim)
        throw std::invalid_argument("von_neumann_entropy: malformed density matrix");
    double herm = (rho.entries - rho.entries.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kHermTol)
        throw std::invalid_argument("von_neumann_entropy: input is not Hermitian");
    double trace = rho.entries.trace().real();
    if (std::abs(trace - 1.0) > kTraceTol)
        throw std::invalid_argument("von_neumann_entropy: trace must be 1");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.entries,
                                                           Eigen::EigenvaluesOnly);
    int l = 0;
    while ((1 << (l + 1)) <= rho.dim) ++l;
    if ((1 << l) != rho.dim) l = 0;
    return make_record(0, l, entropy_of_eigenvalues(solver.eigenvalues()));
}

EntropyRecord bipartition_entropy(const QuantumState& state, int l) {
    check_state(state);
    if (l < 1 || l >= state.n)
        throw std::domain_error("bipartition_entropy: l must be in [1, n-1]");
    int side = std::min(l, state.n - l);
    if (side > kMaxMaterializedL)
        throw std::out_of_range("bipartition_entropy: Gram side capped at 2^11");
    uint64_t rows = uint64_t(1) << l;
    uint64_t cols = uint64_t(1) << (state.n - l);
    Eigen::Map<const Eigen::Matrix<std::complex<double>, Eigen::Dynamic,
                                   Eigen::Dynamic, Eigen::RowMajor>>
        A(state.amp.data(), Eigen::Index(rows), Eigen::Index(cols));
    Eigen::MatrixXcd gram;
    if (l <= state.n - l)
        gram = A * A.adjoint();
    else
        gram = A.adjoint() * A;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
    return make_record(state.n, l, entropy_of_eigenvalues(solver.eigenvalues()));
}

double pauli_expectation(const QuantumState& state, int i, Axis axis) {
    DensityMatrix rho = single_qubit_density(state, i);
    switch (axis) {
        case Axis::z: return rho.entries(0, 0).real() - rho.entries(1, 1).real();
        case Axis::x: return 2.0 * rho.entries(0, 1).real();
        default: return 2.0 * rho.entries(1, 0).imag();
    }
}

double two_site_flip_expectation(const QuantumState& state, int i, int j) {
    check_state(state);
    if (i == j) throw std::domain_error("two_site_flip_expectation: i and j must differ");
    if (i < 0 || i >= state.n || j < 0 || j >= state.n)
        throw std::domain_error("two_site_flip_expectation: qubit index out of range");
    int lo = std::min(i, j), hi = std::max(i, j);
    uint64_t lo_mask = (uint64_t(1) << lo) - 1;
    uint64_t mid_width = uint64_t(hi - lo - 1);
    uint64_t mid_mask = ((uint64_t(1) << mid_width) - 1) << lo;
    uint64_t quarter = uint64_t(1) << (state.n - 2);
    Kahan acc;
    for (uint64_t base = 0; base < quarter; ++base) {
        uint64_t low = base & lo_mask;
        uint64_t mid = (base & mid_mask) << 1;
        uint64_t high = (base >> (hi - 1)) << (hi + 1);
        uint64_t x0 = high | mid | low;
        uint64_t xa = x0 | (uint64_t(1) << j);  // bit i = 0, bit j = 1
        uint64_t xb = x0 | (uint64_t(1) << i);
        acc.add((std::conj(state.amp[xa]) * state.amp[xb]).real());
    }
    return 4.0 * acc.sum;
}

}  // namespace primeq::qstate
