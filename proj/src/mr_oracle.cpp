#include "primeq/mr_oracle.hpp"

#include <stdexcept>

namespace primeq::mr_oracle {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return uint64_t((unsigned __int128)a * b % m);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Evidence that x is a probable prime for slot (a, r): the r = 0 slot
// carries both a^d = 1 and a^d = -1, higher slots only a^(2^r d) = -1.
bool slot_evidence(uint64_t x, uint64_t d, uint64_t a, int r) {
    uint64_t v = powmod(a, d, x);
    if (r == 0) return v == 1 || v == x - 1;
    for (int k = 0; k < r; ++k) v = mulmod(v, v, x);
    return v == x - 1;
}

}  // namespace

OracleTranscript pipeline(uint64_t x, const ntheory::WitnessSet& ws, int n) {
    if (n < 2 || n > 63) throw std::out_of_range("pipeline: bit width out of range");
    if (x % 2 == 0) throw std::domain_error("pipeline: x must be odd");
    if (x < 3 || x >= (uint64_t(1) << n))
        throw std::out_of_range("pipeline: need 3 <= x < 2^n");

    OracleTranscript tr;
    tr.x = x;
    ntheory::MrDecomposition dec = ntheory::mr_decompose(x);
    tr.d = dec.d;
    tr.s = dec.s;

    std::vector<uint64_t> candidates = ws.witnesses_for(x);
    uint64_t cap = uint64_t(n) * uint64_t(n);
    if (candidates.size() > cap) candidates.resize(cap);

    bool some_witness_proves = false;
    for (uint64_t a : candidates) {
        if (a >= x) {
            tr.witnesses_skipped.push_back(a);
            continue;
        }
        tr.witnesses_used.push_back(a);
        uint64_t v = powmod(a, dec.d, x);
        bool witness_proves = true;
        for (int r = 0; r < dec.s; ++r) {
            bool evidence = r == 0 ? (v == 1 || v == x - 1) : (v == x - 1);
            if (r + 1 < dec.s) v = mulmod(v, v, x);
            tr.tests.push_back({a, r, evidence ? 0 : 1});
            if (evidence) witness_proves = false;
        }
        if (witness_proves) some_witness_proves = true;
    }

    tr.all_skipped = tr.witnesses_used.empty();
    // A witness whose every slot stayed up has proven compositeness; with
    // no witness executed the verdict conservatively stays composite.
    tr.global = (!tr.all_skipped && !some_witness_proves) ? 0 : 1;
    tr.phase_flip = tr.global == 0;

    // Uncompute pass: every mark was an XOR against recomputable evidence,
    // so replaying the slots in reverse must lift each ancilla back to 1.
    // tr.tests keeps the forward marks for inspection.
    bool restored = true;
    for (auto it = tr.tests.rbegin(); it != tr.tests.rend(); ++it) {
        int evidence = slot_evidence(x, dec.d, it->a, it->r) ? 1 : 0;
        restored = restored && (it->ancilla ^ evidence) == 1;
    }
    tr.restored = restored;
    return tr;
}

EquivalenceReport oracle_equivalence_scan(int n, const ntheory::WitnessSet& ws,
                                          const ntheory::PrimeTable& table) {
    if (n < 2 || n > 20) throw std::out_of_range("oracle_equivalence_scan: n must be in [2, 20]");
    uint64_t N = uint64_t(1) << n;
    if (table.limit < N)
        throw std::invalid_argument("oracle_equivalence_scan: table must cover [0, 2^n)");
    EquivalenceReport rep;
    rep.n = n;
    for (uint64_t x = 1; x < N; x += 2) {
        bool expected = table.is_prime(x);
        bool got = false;
        if (x >= 3) {
            OracleTranscript tr = pipeline(x, ws, n);
            got = tr.phase_flip;
            rep.all_restored = rep.all_restored && tr.restored;
            if (tr.all_skipped) ++rep.flagged_all_skipped;
            if (got != expected)
                rep.mismatches.push_back({x, expected, got, tr.witnesses_used});
        } else if (expected) {
            rep.mismatches.push_back({x, expected, got, {}});
        }
        ++rep.tested;
    }
    return rep;
}

qstate::QuantumState apply_pipeline_oracle(const qstate::QuantumState& state,
                                           const ntheory::WitnessSet& ws) {
    qstate::QuantumState out = state;
    for (uint64_t x = 3; x < out.dim(); x += 2)
        if (pipeline(x, ws, out.n).phase_flip) out.amp[x] = -out.amp[x];
    return out;
}

GateBudget gate_budget(int n) {
    if (n < 2) throw std::domain_error("gate_budget: n must be >= 2");
    GateBudget b;
    b.n = n;
    double nd = double(n);
    b.witnesses = nd * nd;
    b.tests_per_witness = nd;
    b.modexp_ops_per_test = nd * nd * nd;
    b.total = b.witnesses * b.tests_per_witness * b.modexp_ops_per_test;
    b.deterministic_total = 7.0 * nd * b.modexp_ops_per_test;
    return b;
}

}  // namespace primeq::mr_oracle
