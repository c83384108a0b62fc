#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "primeq/mr_oracle.hpp"
#include "primeq/ntheory.hpp"
#include "primeq/prime_state.hpp"

using namespace primeq;
using ntheory::WitnessSet;

TEST_CASE("pipeline on a prime leaves every ancilla dropped and flips") {
    mr_oracle::OracleTranscript tr =
        mr_oracle::pipeline(97, WitnessSet::deterministic(), 7);
    CHECK(tr.x == 97);
    CHECK(tr.d == 3);
    CHECK(tr.s == 5);
    CHECK(tr.global == 0);
    CHECK(tr.phase_flip);
    CHECK(tr.restored);
    CHECK_FALSE(tr.all_skipped);
    CHECK(tr.witnesses_used.size() == 7);
}

TEST_CASE("pipeline proves 221 composite") {
    mr_oracle::OracleTranscript tr =
        mr_oracle::pipeline(221, WitnessSet::deterministic(), 8);
    CHECK(tr.global == 1);
    CHECK_FALSE(tr.phase_flip);
    CHECK(tr.restored);
}

TEST_CASE("strong liar slips through a single-witness pipeline") {
    mr_oracle::OracleTranscript tr = mr_oracle::pipeline(2047, WitnessSet::fixed({2}), 11);
    CHECK(tr.global == 0);  // wrongly claims probable prime
    CHECK(tr.phase_flip);
    CHECK(tr.restored);
    // adding witness 3 repairs the verdict
    tr = mr_oracle::pipeline(2047, WitnessSet::fixed({2, 3}), 11);
    CHECK(tr.global == 1);
    CHECK_FALSE(tr.phase_flip);
}

TEST_CASE("all witnesses out of range is flagged, not misread as prime") {
    mr_oracle::OracleTranscript tr = mr_oracle::pipeline(3, WitnessSet::fixed({5, 7}), 4);
    CHECK(tr.all_skipped);
    CHECK(tr.global == 1);
    CHECK_FALSE(tr.phase_flip);
    CHECK(tr.restored);
    CHECK(tr.witnesses_skipped == std::vector<uint64_t>{5, 7});
}

TEST_CASE("transcript slots record per-round evidence") {
    // 25 - 1 = 3 * 2^3; witness 7: 7^3 = 343 = 18 (mod 25), 18^2 = 24 = -1
    mr_oracle::OracleTranscript tr = mr_oracle::pipeline(25, WitnessSet::fixed({7}), 5);
    REQUIRE(tr.tests.size() == 3);
    CHECK(tr.tests[0].ancilla == 1);  // r=0: neither 1 nor -1
    CHECK(tr.tests[1].ancilla == 0);  // r=1 hits -1
    CHECK(tr.global == 0);            // 7 is a strong liar for 25
    CHECK(tr.restored);
}

TEST_CASE("pipeline input validation") {
    CHECK_THROWS_AS(mr_oracle::pipeline(8, WitnessSet::deterministic(), 4),
                    std::domain_error);
    CHECK_THROWS_AS(mr_oracle::pipeline(1, WitnessSet::deterministic(), 4),
                    std::out_of_range);
    CHECK_THROWS_AS(mr_oracle::pipeline(17, WitnessSet::deterministic(), 4),
                    std::out_of_range);  // 17 >= 2^4
}

TEST_CASE("equivalence scan with the deterministic set is exact at n=12") {
    ntheory::PrimeTable t = ntheory::sieve(1u << 12);
    mr_oracle::EquivalenceReport rep =
        mr_oracle::oracle_equivalence_scan(12, WitnessSet::deterministic(), t);
    CHECK(rep.tested == (1u << 11));
    CHECK(rep.mismatches.empty());
    CHECK(rep.all_restored);
    CHECK(rep.flagged_all_skipped == 0);
}

TEST_CASE("equivalence scan exposes the base-2 strong pseudoprimes") {
    ntheory::PrimeTable t = ntheory::sieve(1u << 12);
    mr_oracle::EquivalenceReport rep =
        mr_oracle::oracle_equivalence_scan(12, WitnessSet::fixed({2}), t);
    std::vector<uint64_t> xs;
    for (const auto& row : rep.mismatches) {
        xs.push_back(row.x);
        CHECK_FALSE(row.expected);
        CHECK(row.got);
    }
    CHECK(xs == std::vector<uint64_t>{2047, 3277, 4033});

    ntheory::PrimeTable t11 = ntheory::sieve(1u << 11);
    rep = mr_oracle::oracle_equivalence_scan(11, WitnessSet::fixed({2}), t11);
    REQUIRE(rep.mismatches.size() == 1);
    CHECK(rep.mismatches[0].x == 2047);
}

TEST_CASE("oracle application flips prime amplitudes and nothing else") {
    ntheory::PrimeTable t = ntheory::sieve(64);
    qstate::QuantumState st = qstate::uniform_state(6);
    qstate::QuantumState out =
        mr_oracle::apply_pipeline_oracle(st, WitnessSet::deterministic());
    for (uint64_t x = 0; x < 64; ++x) {
        double expect = t.is_prime(x) && x != 2 ? -1.0 : 1.0;
        CHECK(out.amp[x].real() == doctest::Approx(expect / 8.0).epsilon(1e-15));
    }
}

TEST_CASE("gate budget scales as stated") {
    mr_oracle::GateBudget b = mr_oracle::gate_budget(10);
    CHECK(b.n == 10);
    CHECK(b.witnesses == 100.0);
    CHECK(b.tests_per_witness == 10.0);
    CHECK(b.modexp_ops_per_test == 1000.0);
    CHECK(b.total == 1e6);
    CHECK(b.deterministic_total == 7e4);
}
