#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "spinfid/moments.hpp"

using namespace spinfid;
using Catch::Matchers::WithinAbs;

namespace {

// Independent cross-check: fixed 2000-point trapezoid on u in [0, 8 gamma].
double trapezoid_moment(int k, double gamma, double eta, double theta) {
    const int points = 2000;
    const double hi = 8.0 * gamma;
    double sum = 0.0;
    for (int i = 0; i < points; ++i) {
        const double u = hi * i / (points - 1);
        double f = std::exp(-(u / gamma) * (u / gamma));
        const double x = wigner_cosine_u(u, eta, theta);
        for (int j = 0; j < k; ++j) f *= x;
        sum += (i == 0 || i == points - 1) ? 0.5 * f : f;
    }
    return sum * (hi / (points - 1)) * 2.0 / (gamma * std::sqrt(M_PI));
}

}  // namespace

TEST_CASE("no boost gives unit moments", "[moments]") {
    for (int k : {1, 2, 3}) {
        for (double gamma : {1.0, 20.0}) {
            for (double theta : {0.0, 0.7}) {
                CHECK_THAT(wigner_moment(k, {gamma}, 0.0, theta), WithinAbs(1.0, 1e-12));
            }
        }
    }
}

TEST_CASE("narrow wave packets give unit moments", "[moments]") {
    for (int k : {1, 2, 3}) {
        CHECK_THAT(wigner_moment(k, {1e-5}, 3.0, 0.4), WithinAbs(1.0, 1e-8));
    }
    CHECK_THAT(asymptotic_moment(1, {1e-5}), WithinAbs(1.0, 1e-8));
}

TEST_CASE("collinear boost gives unit moments", "[moments]") {
    for (int k : {1, 2, 3}) {
        for (double eta : {1.0, 40.0}) {
            CHECK_THAT(wigner_moment(k, {20.0}, eta, M_PI / 2), WithinAbs(1.0, 1e-12));
        }
    }
}

TEST_CASE("adaptive moments match a dense trapezoid", "[moments]") {
    const double adaptive = wigner_moment(1, {20.0}, 4.0, 0.0);
    CHECK_THAT(adaptive, WithinAbs(trapezoid_moment(1, 20.0, 4.0, 0.0), 1e-8));
    CHECK_THAT(adaptive, WithinAbs(0.22544826469884, 1e-9));
    CHECK(adaptive > 0.0);
    CHECK(adaptive < 1.0);

    for (int k : {2, 3}) {
        CHECK_THAT(wigner_moment(k, {20.0}, 4.0, 0.0),
                   WithinAbs(trapezoid_moment(k, 20.0, 4.0, 0.0), 1e-8));
    }
    // independently computed anchor
    CHECK_THAT(wigner_moment(1, {20.0}, 5.0, 0.0), WithinAbs(0.204400772902, 1e-9));
}

TEST_CASE("unit integrand is self-normalized", "[moments]") {
    for (double gamma : {1.0, 5.0, 20.0}) {
        const double norm = detail::gaussian_average([](double) { return 1.0; }, {gamma}, {});
        CHECK_THAT(norm, WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("moments stay in bounds", "[moments]") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> gam(0.1, 30.0);
    std::uniform_real_distribution<double> rap(0.0, 10.0);
    std::uniform_real_distribution<double> ang(0.0, M_PI / 2);
    std::uniform_int_distribution<int> order(1, 3);
    for (int i = 0; i < 60; ++i) {
        const double m = wigner_moment(order(rng), {gam(rng)}, rap(rng), ang(rng));
        REQUIRE(std::abs(m) <= 1.0 + 1e-12);
    }
    for (int i = 0; i < 30; ++i) {
        const double m = wigner_moment(order(rng), {gam(rng)}, rap(rng), 0.0);
        REQUIRE(m > 0.0);
        REQUIRE(m <= 1.0 + 1e-12);
    }
}

TEST_CASE("second moment dominates the squared mean", "[moments]") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> gam(0.5, 25.0);
    std::uniform_real_distribution<double> rap(0.0, 10.0);
    std::uniform_real_distribution<double> ang(0.0, M_PI / 2);
    for (int i = 0; i < 40; ++i) {
        const WaveletWidth width{gam(rng)};
        const double eta = rap(rng);
        const double theta = ang(rng);
        const WignerMoments m = compute_moments(width, eta, theta);
        REQUIRE(m.m2 >= m.m1 * m.m1 - 1e-12);
    }
}

TEST_CASE("third moment below second where the integrand is positive", "[moments]") {
    for (double gamma : {1.0, 20.0}) {
        for (double eta : {0.5, 5.0}) {
            const WignerMoments m = compute_moments({gamma}, eta, 0.0);
            CHECK(m.m2 >= m.m3 - 1e-12);
        }
    }
}

TEST_CASE("moments decay monotonically with the boost", "[moments]") {
    for (double gamma : {5.0, 20.0}) {
        WignerMoments prev = compute_moments({gamma}, 0.0, 0.0);
        for (int i = 1; i <= 20; ++i) {
            const WignerMoments cur = compute_moments({gamma}, 0.5 * i, 0.0);
            REQUIRE(cur.m1 <= prev.m1 + 1e-12);
            REQUIRE(cur.m2 <= prev.m2 + 1e-12);
            REQUIRE(cur.m3 <= prev.m3 + 1e-12);
            prev = cur;
        }
    }
}

TEST_CASE("moments at eta = 40 sit on the asymptote", "[moments]") {
    for (double gamma : {1.0, 5.0, 20.0}) {
        for (int k : {1, 2, 3}) {
            const double finite = wigner_moment(k, {gamma}, 40.0, 0.0);
            const double limit = asymptotic_moment(k, {gamma});
            REQUIRE_THAT(finite, WithinAbs(limit, 1e-6));
            REQUIRE(limit > 0.0);
        }
    }
    CHECK_THAT(asymptotic_moment(1, {20.0}), WithinAbs(0.19207981874787, 1e-9));
}

TEST_CASE("narrower packets keep the mean closer to one", "[moments]") {
    const double m_narrow = wigner_moment(1, {1.0}, 5.0, 0.0);
    const double m_mid = wigner_moment(1, {5.0}, 5.0, 0.0);
    const double m_wide = wigner_moment(1, {20.0}, 5.0, 0.0);
    CHECK(m_narrow > m_mid);
    CHECK(m_mid > m_wide);
}

TEST_CASE("asymptotic moments are ordered in the power", "[moments]") {
    const WignerMoments a = compute_asymptotic_moments({20.0});
    CHECK(a.m3 <= a.m2);
    CHECK(a.m2 <= a.m1);
    CHECK(a.m3 > 0.0);
}

TEST_CASE("moment input validation and convergence failure", "[moments]") {
    CHECK_THROWS_AS(wigner_moment(0, {20.0}, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(wigner_moment(4, {20.0}, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(wigner_moment(1, {-1.0}, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(wigner_moment(1, {20.0}, -1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(WignerMoments{}.get(4), std::invalid_argument);

    QuadratureSettings strict;
    strict.max_subdivisions = 1;
    strict.rel_tol = 1e-14;
    strict.abs_tol = 1e-16;
    CHECK_THROWS_AS(wigner_moment(1, {20.0}, 5.0, 0.0, strict), QuadratureError);
}
