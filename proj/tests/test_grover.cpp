#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "primeq/grover.hpp"
#include "primeq/ntheory.hpp"
#include "primeq/qstate.hpp"

using namespace primeq;

TEST_CASE("oracle flips marked amplitudes only") {
    qstate::QuantumState st = qstate::uniform_state(3);
    qstate::QuantumState out =
        grover::oracle_sign_flip(st, [](uint64_t x) { return x == 5; });
    for (uint64_t x = 0; x < 8; ++x)
        CHECK(out.amp[x].real() ==
              doctest::Approx((x == 5 ? -1.0 : 1.0) / std::sqrt(8.0)));
}

TEST_CASE("diffusion reflects about the mean") {
    qstate::QuantumState st{1, {{1.0, 0.0}, {0.0, 0.0}}};
    qstate::QuantumState out = grover::diffusion(st);
    CHECK(out.amp[0].real() == doctest::Approx(0.0));
    CHECK(out.amp[1].real() == doctest::Approx(1.0));
}

TEST_CASE("iteration schedule") {
    CHECK(grover::optimal_iterations(256, 54) == 1);
    CHECK(grover::optimal_iterations(4, 2) == 0);
    CHECK(grover::optimal_iterations(1u << 20, 82025) == 2);
    CHECK_THROWS_AS(grover::optimal_iterations(8, 5), std::domain_error);
    CHECK_THROWS_AS(grover::optimal_iterations(8, 0), std::domain_error);
}

TEST_CASE("iteration cap r_max") {
    CHECK(grover::r_max(2) == 0);
    CHECK(grover::r_max(5) == 1);
    CHECK(grover::r_max(30) == 3);
    CHECK(grover::r_max(45) == 4);
    CHECK_THROWS_AS(grover::r_max(1), std::domain_error);
}

TEST_CASE("analytic success probability spot values") {
    CHECK(grover::pg_analytic(4, 2, 0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(grover::pg_analytic(16, 6, 0) == doctest::Approx(0.375).epsilon(1e-14));
    CHECK(grover::pg_analytic(256, 54, 1) ==
          doctest::Approx(0.9807357788085938).epsilon(1e-12));
}

TEST_CASE("simulated grover matches the analytic overlap") {
    ntheory::PrimeTable t = ntheory::sieve(1u << 10);
    for (int n : {4, 6, 8, 10}) {
        uint64_t N = uint64_t(1) << n;
        uint64_t M = ntheory::pi(t, N - 1);
        for (int R = 0; R <= 4; ++R) {
            grover::GroverRun run = grover::run_grover(n, t, R);
            CHECK(run.M == M);
            CHECK(run.overlap ==
                  doctest::Approx(grover::pg_analytic(N, M, R)).epsilon(1e-12));
        }
    }
}

TEST_CASE("grover state stays in the two dimensional invariant plane") {
    ntheory::PrimeTable t = ntheory::sieve(256);
    qstate::QuantumState st = qstate::uniform_state(8);
    auto is_p = [&](uint64_t x) { return t.is_prime(x); };
    for (int k = 0; k < 3; ++k) {
        st = grover::diffusion(grover::oracle_sign_flip(st, is_p));
        std::set<long long> values;
        for (const auto& a : st.amp) values.insert(llround(a.real() * 1e12));
        CHECK(values.size() <= 2);
    }
}

TEST_CASE("figure scan reports gaps without interpolating") {
    grover::PiProvider provider = [](int n) -> std::optional<uint64_t> {
        if (n == 4) return std::nullopt;
        return ntheory::pi(ntheory::sieve(uint64_t(1) << n), (uint64_t(1) << n) - 1);
    };
    auto rows = grover::figure_scan(3, 5, provider);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].have_pi);
    CHECK(rows[0].R == 0);
    CHECK(rows[0].Rmax == 1);
    CHECK(rows[0].PG == doctest::Approx(0.5).epsilon(1e-14));
    CHECK_FALSE(rows[1].have_pi);
    CHECK(rows[1].Rmax == 1);
    CHECK(rows[2].have_pi);
    CHECK(rows[2].PG == doctest::Approx(0.34375).epsilon(1e-14));
}

TEST_CASE("run_grover bounds") {
    ntheory::PrimeTable t = ntheory::sieve(16);
    CHECK_THROWS_AS(grover::run_grover(23, t, 1), std::out_of_range);
    CHECK_THROWS_AS(grover::run_grover(4, t, -1), std::domain_error);
    CHECK_THROWS_AS(grover::run_grover(5, t, 1), std::invalid_argument);
}
