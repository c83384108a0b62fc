#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace primeq::qstate {

// Dense statevector over n qubits. Index x encodes |x> with qubit i the
// bit of weight 2^i, so qubit 0 is the least significant bit.
struct QuantumState {
    int n = 0;
    std::vector<std::complex<double>> amp;

    uint64_t dim() const { return uint64_t(1) << n; }
};

inline constexpr int kMinQubits = 2;
inline constexpr int kMaxQubits = 24;

QuantumState zero_state(int n);   // |0...0>
QuantumState uniform_state(int n);

double norm_sq(const QuantumState& state);

struct DensityMatrix {
    int dim = 0;
    Eigen::MatrixXcd entries;
};

struct EntropyRecord {
    int n = 0;  // 0 when the record is not tied to a bipartition
    int l = 0;
    double entropy_nats = 0.0;
    double entropy_bits = 0.0;
};

// Partial trace over the last n-l qubits: rho(l) = A A^dagger with A the
// amplitude vector reshaped to 2^l x 2^(n-l), row index = the l most
// significant bits ("first l qubits"). Materialized dim is capped at 2^11.
DensityMatrix reduced_density(const QuantumState& state, int l);

DensityMatrix single_qubit_density(const QuantumState& state, int i);

EntropyRecord von_neumann_entropy(const DensityMatrix& rho);

// S(rho(l)) through the Gram matrix of the smaller side of the cut,
// usable for any l even when rho(l) itself is too large to materialize.
EntropyRecord bipartition_entropy(const QuantumState& state, int l);

enum class Axis { x, y, z };

double pauli_expectation(const QuantumState& state, int i, Axis axis);

// <sx_i sx_j + sy_i sy_j>: couples basis pairs differing exactly in bits
// i and j with opposite values.
double two_site_flip_expectation(const QuantumState& state, int i, int j);

}  // namespace primeq::qstate
