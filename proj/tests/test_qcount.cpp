#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "primeq/ntheory.hpp"
#include "primeq/qcount.hpp"

using namespace primeq;

namespace {

double success_mass(const qcount::CountingDistribution& dist, uint64_t N, uint64_t M) {
    uint64_t T = uint64_t(1) << dist.t;
    double calls = double(T - 1);
    double c = calls / std::sqrt(double(N));
    double bound = 2.0 * std::numbers::pi / c * std::sqrt(double(M)) +
                   std::numbers::pi * std::numbers::pi / (c * c);
    double tot = 0.0;
    for (uint64_t y = 0; y < T; ++y) {
        double tt = 2.0 * std::numbers::pi * double(y) / double(T);
        if (tt > std::numbers::pi) tt = 2.0 * std::numbers::pi - tt;
        double mt = double(N) * std::sin(tt / 2) * std::sin(tt / 2);
        if (std::abs(mt - double(M)) < bound) tot += dist.probs[y];
    }
    return tot;
}

}  // namespace

TEST_CASE("grover angle") {
    CHECK(qcount::grover_angle(4, 1) == doctest::Approx(std::numbers::pi / 3).epsilon(1e-14));
    CHECK(qcount::grover_angle(4, 4) == doctest::Approx(std::numbers::pi).epsilon(1e-14));
    CHECK_THROWS_AS(qcount::grover_angle(4, 5), std::domain_error);
}

TEST_CASE("counting distribution is a normalized probability vector") {
    qcount::CountingDistribution d = qcount::counting_distribution(256, 54, 8);
    CHECK(d.probs.size() == 256);
    double tot = 0.0;
    for (double p : d.probs) {
        CHECK(p >= 0.0);
        tot += p;
    }
    CHECK(tot == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("distribution peaks at the phase bins flanking theta") {
    qcount::CountingDistribution d = qcount::counting_distribution(256, 54, 8);
    uint64_t T = 256;
    double target = d.theta * double(T) / (2.0 * std::numbers::pi);
    uint64_t best = 0;
    for (uint64_t y = 1; y < T / 2; ++y)
        if (d.probs[y] > d.probs[best]) best = y;
    CHECK(std::abs(double(best) - target) <= 1.0);
}

TEST_CASE("exact angle collapses the distribution to two bins") {
    // M = N/2 gives theta = pi/2, exactly representable with t >= 2
    qcount::CountingDistribution d = qcount::counting_distribution(64, 32, 4);
    CHECK(d.probs[4] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(d.probs[12] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("success masses match the reference table") {
    ntheory::PrimeTable t = ntheory::sieve(1u << 12);
    struct Row { int n, t; double mass; };
    const Row rows[] = {
        {8, 8, 0.98344},  {8, 10, 0.81302},  {8, 12, 0.95661},
        {10, 8, 0.82420}, {10, 10, 0.84320}, {10, 12, 0.81792},
        {12, 8, 0.99941}, {12, 10, 0.98466}, {12, 12, 0.85044},
    };
    for (const Row& r : rows) {
        uint64_t N = uint64_t(1) << r.n;
        uint64_t M = ntheory::pi(t, N - 1);
        qcount::CountingDistribution d = qcount::counting_distribution(N, M, r.t);
        CHECK(success_mass(d, N, M) == doctest::Approx(r.mass).epsilon(2e-5));
    }
}

TEST_CASE("estimates are reproducible and within range") {
    qcount::CountingDistribution d = qcount::counting_distribution(256, 54, 8);
    qcount::CountEstimate a = qcount::estimate_M(d, 256, 7);
    qcount::CountEstimate b = qcount::estimate_M(d, 256, 7);
    CHECK(a.y_observed == b.y_observed);
    CHECK(a.M_tilde == b.M_tilde);
    CHECK(a.calls == 255);
    CHECK(a.c == doctest::Approx(255.0 / 16.0).epsilon(1e-14));
    CHECK(a.M_tilde >= 0.0);
    CHECK(a.M_tilde <= 256.0);
    CHECK(a.bound ==
          doctest::Approx(2 * std::numbers::pi / a.c * std::sqrt(54.0) +
                          std::numbers::pi * std::numbers::pi / (a.c * a.c))
              .epsilon(1e-12));
}

TEST_CASE("sampled success frequency sits near the analytic mass") {
    qcount::CountingDistribution d = qcount::counting_distribution(256, 54, 8);
    double mass = success_mass(d, 256, 54);
    double freq = qcount::success_frequency(256, 54, 8, 4000, 20260819);
    CHECK(std::abs(freq - mass) < 0.03);  // ~5 sigma at 4000 draws
}

TEST_CASE("brute force register simulation reproduces the analytic law") {
    ntheory::PrimeTable t = ntheory::sieve(64);
    qcount::CountingDistribution brute = qcount::brute_force_counting(4, 4, t);
    uint64_t M = ntheory::pi(t, 15);
    qcount::CountingDistribution ana = qcount::counting_distribution(16, M, 4);
    double tv = 0.0;
    for (size_t y = 0; y < brute.probs.size(); ++y)
        tv += std::abs(brute.probs[y] - ana.probs[y]);
    CHECK(tv / 2 < 1e-10);
}

TEST_CASE("accuracy bound formula") {
    double b = qcount::pi_accuracy_bound(1024.0, 2.0 * std::numbers::pi);
    CHECK(b == doctest::Approx(std::sqrt(1024.0 / std::log(1024.0))).epsilon(1e-14));
}

TEST_CASE("rh comparison rows keep the counting bound above the rh scale gap") {
    ntheory::PrimeTable t = ntheory::sieve((1u << 12) + 2);
    auto rows = qcount::rh_comparison_scan(t, 10, 12, 2.0 * std::numbers::pi);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].pi == 172);
    CHECK(rows[1].pi == 309);
    CHECK(rows[2].pi == 564);
    for (const auto& r : rows) {
        CHECK(r.li == doctest::Approx(ntheory::li(r.x)).epsilon(1e-12));
        CHECK(r.qc_bound < r.rh_scale);
        CHECK(r.abs_err < r.rh_scale);
    }
}

TEST_CASE("distribution bounds") {
    CHECK_THROWS_AS(qcount::counting_distribution(256, 54, 0), std::out_of_range);
    CHECK_THROWS_AS(qcount::counting_distribution(256, 54, 21), std::out_of_range);
    CHECK_THROWS_AS(qcount::counting_distribution(256, 300, 8), std::domain_error);
}
