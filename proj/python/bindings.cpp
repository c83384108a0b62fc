#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "primeq/grover.hpp"
#include "primeq/mr_oracle.hpp"
#include "primeq/ntheory.hpp"
#include "primeq/prime_state.hpp"
#include "primeq/qcount.hpp"
#include "primeq/qstate.hpp"

namespace py = pybind11;
using namespace primeq;

namespace {

ntheory::PrimeTable table_for(int n) { return ntheory::sieve(uint64_t(1) << n); }

qstate::QuantumState state_for(int n) {
    ntheory::PrimeTable t = table_for(n);
    return prime_state::build_prime_state(n, t);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "prime-state quantum simulation kernels";

    py::class_<ntheory::PrimeTable>(m, "PrimeTable")
        .def_readonly("limit", &ntheory::PrimeTable::limit)
        .def("is_prime", &ntheory::PrimeTable::is_prime, py::arg("x"))
        .def("pi", [](const ntheory::PrimeTable& t, uint64_t x) { return ntheory::pi(t, x); },
             py::arg("x"));

    m.def("sieve", &ntheory::sieve, py::arg("limit"));
    m.def("is_prime", [](uint64_t x) { return ntheory::is_prime(x); }, py::arg("x"));
    m.def("mr_decompose", [](uint64_t x) {
        ntheory::MrDecomposition d = ntheory::mr_decompose(x);
        return py::make_tuple(d.d, d.s);
    }, py::arg("x"));
    m.def("euler_phi", &ntheory::euler_phi, py::arg("x"));
    m.def("li", &ntheory::li, py::arg("x"));
    m.def("twin_prime_constant", &ntheory::twin_prime_constant);
    m.def("hl_twin_estimate", &ntheory::hl_twin_estimate, py::arg("x"));
    m.def("chebyshev_bias", [](uint64_t limit, uint64_t x) {
        ntheory::PrimeTable t = ntheory::sieve(limit);
        ntheory::BiasReport r = ntheory::chebyshev_bias(t, x);
        py::dict d;
        d["x"] = r.x;
        d["pi41"] = r.pi41;
        d["pi43"] = r.pi43;
        d["delta"] = r.delta;
        d["pi2_1"] = r.pi2_1;
        d["pi2_3"] = r.pi2_3;
        d["delta2"] = r.delta2;
        return d;
    }, py::arg("limit"), py::arg("x"));

    m.def("prime_state_amplitudes", [](int n) {
        qstate::QuantumState st = state_for(n);
        return st.amp;
    }, py::arg("n"));
    m.def("preparation_probability", [](int n) {
        prime_state::PreparationModel pm = prime_state::preparation_probability(n, table_for(n));
        py::dict d;
        d["n"] = pm.n;
        d["success_prob"] = pm.success_prob;
        d["normalization_A"] = pm.normalization_A;
        d["asymptotic"] = pm.asymptotic;
        return d;
    }, py::arg("n"));

    m.def("single_qubit_density", [](int n, int i) {
        qstate::DensityMatrix rho = qstate::single_qubit_density(state_for(n), i);
        std::vector<std::vector<std::complex<double>>> rows(2);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) rows[r].push_back(rho.entries(r, c));
        return rows;
    }, py::arg("n"), py::arg("i"));
    m.def("entropy", [](int n, int l) {
        return qstate::bipartition_entropy(state_for(n), l).entropy_nats;
    }, py::arg("n"), py::arg("l"));
    m.def("pauli_expectation", [](int n, int i, char axis) {
        qstate::Axis ax = axis == 'x' ? qstate::Axis::x
                          : axis == 'y' ? qstate::Axis::y
                                        : qstate::Axis::z;
        return qstate::pauli_expectation(state_for(n), i, ax);
    }, py::arg("n"), py::arg("i"), py::arg("axis"));
    m.def("two_site_flip", [](int n, int i, int j) {
        return qstate::two_site_flip_expectation(state_for(n), i, j);
    }, py::arg("n"), py::arg("i"), py::arg("j"));

    m.def("optimal_iterations", &grover::optimal_iterations, py::arg("N"), py::arg("M"));
    m.def("r_max", &grover::r_max, py::arg("n"));
    m.def("pg_analytic", &grover::pg_analytic, py::arg("N"), py::arg("M"), py::arg("R"));
    m.def("run_grover", [](int n, int R) {
        ntheory::PrimeTable t = table_for(n);
        grover::GroverRun run = grover::run_grover(n, t, R);
        py::dict d;
        d["n"] = run.n;
        d["N"] = run.N;
        d["M"] = run.M;
        d["R"] = run.R;
        d["theta"] = run.theta;
        d["overlap"] = run.overlap;
        return d;
    }, py::arg("n"), py::arg("R"));

    m.def("counting_distribution", [](uint64_t N, uint64_t M, int t) {
        return qcount::counting_distribution(N, M, t).probs;
    }, py::arg("N"), py::arg("M"), py::arg("t"));
    m.def("success_frequency", &qcount::success_frequency, py::arg("N"), py::arg("M"),
          py::arg("t"), py::arg("samples"), py::arg("seed"));

    m.def("oracle_mismatches", [](int n) {
        ntheory::PrimeTable t = table_for(n);
        ntheory::WitnessSet ws = ntheory::WitnessSet::deterministic();
        return mr_oracle::oracle_equivalence_scan(n, ws, t).mismatches.size();
    }, py::arg("n"));
}
