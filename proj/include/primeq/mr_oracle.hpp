#pragma once

#include <cstdint>
#include <vector>

#include "primeq/ntheory.hpp"
#include "primeq/qstate.hpp"

namespace primeq::mr_oracle {

// One compute/mark/uncompute pass of the reversible primality pipeline
// for a single odd basis value, recorded register by register.
struct TestSlot {
    uint64_t a = 0;
    int r = 0;
    int ancilla = 1;  // dropped to 0 on probable-prime evidence
};

struct OracleTranscript {
    uint64_t x = 0;
    uint64_t d = 0;
    int s = 0;
    std::vector<uint64_t> witnesses_used;     // those passing the a < x guard
    std::vector<uint64_t> witnesses_skipped;  // guard rejections
    std::vector<TestSlot> tests;
    int global = 1;          // 0 iff the verdict is probable prime
    bool phase_flip = false;
    bool restored = false;   // ancillae back to initial values after uncompute
    bool all_skipped = false;
};

OracleTranscript pipeline(uint64_t x, const ntheory::WitnessSet& ws, int n);

struct MismatchRow {
    uint64_t x = 0;
    bool expected = false;
    bool got = false;
    std::vector<uint64_t> witnesses;
};

struct EquivalenceReport {
    int n = 0;
    uint64_t tested = 0;
    std::vector<MismatchRow> mismatches;
    bool all_restored = true;
    uint64_t flagged_all_skipped = 0;
};

// Pipeline phase flip vs. sieve primality for every odd x < 2^n.
EquivalenceReport oracle_equivalence_scan(int n, const ntheory::WitnessSet& ws,
                                          const ntheory::PrimeTable& table);

// Sign flip driven by the pipeline verdict; even basis states pass
// through unflipped (the pipeline tests odd inputs only).
qstate::QuantumState apply_pipeline_oracle(const qstate::QuantumState& state,
                                           const ntheory::WitnessSet& ws);

struct GateBudget {
    int n = 0;
    double witnesses = 0.0;           // worst case n^2 under the GRH cap
    double tests_per_witness = 0.0;   // at most n
    double modexp_ops_per_test = 0.0; // n^3
    double total = 0.0;               // n^6 worst case
    double deterministic_total = 0.0; // 7-witness practical count, 7 n^4
};

GateBudget gate_budget(int n);

}  // namespace primeq::mr_oracle
