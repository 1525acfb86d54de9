#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "ddl/cutoff.hpp"
#include "ddl/weights.hpp"

using namespace ddl;

TEST_CASE("chi + phi + psi is a partition of unity") {
    for (auto [eps, tau] : std::vector<std::pair<double, double>>{
             {0.5, 2.5}, {0.2, 3.0}, {1.0, 9.0}}) {
        CutoffFamily fam(eps, tau);
        for (int i = 0; i <= 4000; ++i) {
            const double x = -2.0 * tau + i * (4.0 * tau / 4000.0);
            CHECK(std::abs(fam.chi(x) + fam.phi(x) + fam.psi(x) - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("chi ramps monotonically across [eps, tau]") {
    CutoffFamily fam(0.5, 2.5);
    CHECK(fam.chi(0.5) == 0.0);
    CHECK(fam.chi(2.5) == 1.0);
    double prev = -1.0;
    for (int i = 0; i <= 500; ++i) {
        const double x = 0.5 + i * (2.0 / 500.0);
        CHECK(fam.chi(x) >= prev - 1e-15);
        prev = fam.chi(x);
    }
}

TEST_CASE("chi' meets the plateau lower bound on [2 eps, tau - eps]") {
    for (auto [eps, tau] : std::vector<std::pair<double, double>>{
             {0.5, 2.5}, {0.3, 2.0}, {1.0, 9.0}}) {
        CutoffFamily fam(eps, tau);
        const double bound = fam.plateau();
        CHECK(bound >= 1.0 / (10.0 * (tau - eps)));  // the printed lower bound
        for (int i = 0; i <= 1000; ++i) {
            const double x = 2.0 * eps + i * ((tau - 3.0 * eps) / 1000.0);
            CHECK(fam.chi_deriv(x, 1) >= bound - 1e-12);
        }
    }
}

TEST_CASE("cutoff family rejects tau < 5 eps") {
    CHECK_THROWS(CutoffFamily(0.5, 2.0));
    CHECK_THROWS(CutoffFamily(-0.1, 2.0));
    CHECK_NOTHROW(CutoffFamily(0.5, 2.5));
}

TEST_CASE("p' = 2 b rho^2 for the exponential approximants") {
    for (double b : {0.25, 0.5, 1.0})
        for (double eta : {0.0, 1e-3, 0.1}) {
            ExpWeightFamily w(b, eta);
            for (int i = -40; i <= 40; ++i) {
                const double x = i * 0.5;
                if (eta == 0.0 && b * x > 300.0) continue;
                const double lhs = w.p_deriv(x, 1);
                const double rhs = 2.0 * b * w.rho(x) * w.rho(x);
                CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
            }
        }
}

TEST_CASE("q, rho, p collapse to e^{bx} when eta = 0") {
    ExpWeightFamily w(0.5, 0.0);
    for (double x : {-3.0, 0.0, 1.7, 10.0}) {
        CHECK(w.q(x) == doctest::Approx(std::exp(0.5 * x)).epsilon(1e-14));
        CHECK(w.rho(x) == doctest::Approx(std::exp(0.5 * x)).epsilon(1e-14));
        CHECK(w.p(x) == doctest::Approx(std::exp(x)).epsilon(1e-14));
    }
}

TEST_CASE("saturated family stays bounded for large bx") {
    ExpWeightFamily w(1.0, 1e-4);
    CHECK(std::isfinite(w.q(500.0)));
    CHECK(w.q(500.0) == doctest::Approx(1.0 / std::sqrt(1e-4)).epsilon(1e-9));
    CHECK(w.rho(500.0) < 1e-200);  // rho ~ e^{-bx}/eta decays again
}

TEST_CASE("truncated weight pins <t> inside and 2N outside") {
    for (int N = 1; N <= 16; ++N) {
        TruncatedWeight w(N, 1);
        const double t = 0.5 * N;
        CHECK(w.radial(t) == doctest::Approx(std::sqrt(1.0 + t * t)).epsilon(1e-12));
        CHECK(w.radial(3.5 * N) == doctest::Approx(2.0 * N).epsilon(1e-12));
        CHECK(w.radial(100.0 * N) == doctest::Approx(2.0 * N).epsilon(1e-12));
    }
}

TEST_CASE("truncated weight derivative bounds plateau across N") {
    double worst1 = 0.0, worst2 = 0.0, worst3 = 0.0;
    std::vector<double> sup1(17, 0.0);
    for (int N = 1; N <= 16; ++N) {
        TruncatedWeight w(N, 1);
        double prev = 0.0;
        for (int i = 0; i <= 2000; ++i) {
            const double t = i * (4.0 * N / 2000.0);
            const double v = w.radial(t);
            CHECK(v >= prev - 1e-12);  // nondecreasing
            prev = v;
            sup1[N] = std::max(sup1[N], std::abs(w.radial_deriv(t, 1)));
            worst2 = std::max(worst2, std::abs(w.radial_deriv(t, 2)));
            worst3 = std::max(worst3, std::abs(w.radial_deriv(t, 3)));
        }
        CHECK(sup1[N] <= 1.0 + 1e-9);
        worst1 = std::max(worst1, sup1[N]);
    }
    // uniform-in-N caps: the whole point of the truncation
    CHECK(worst1 <= 1.0 + 1e-9);
    CHECK(worst2 < 10.0);
    CHECK(worst3 < 100.0);
}

TEST_CASE("derivative of w_N^r stays uniformly bounded for fractional r") {
    for (double r : {0.25, 0.5, 0.75}) {
        double lo = 1e300, hi = 0.0;
        for (int N = 4; N <= 16; ++N) {
            TruncatedWeight w(N, 1);
            double sup = 0.0;
            for (int i = 0; i <= 2000; ++i) {
                const double t = i * (4.0 * N / 2000.0);
                const double d =
                    r * std::pow(w.radial(t), r - 1.0) * w.radial_deriv(t, 1);
                sup = std::max(sup, std::abs(d));
            }
            lo = std::min(lo, sup);
            hi = std::max(hi, sup);
            CHECK(sup <= r + 1e-9);  // w >= 1 and |w'| <= 1
        }
        CHECK(hi / lo < 1.5);  // plateau, not growth in N
    }
}

TEST_CASE("2d truncated weight reduces to the radial profile") {
    TruncatedWeight w(4, 2);
    CHECK(w.eval({3.0, 4.0}) == doctest::Approx(w.radial(5.0)).epsilon(1e-12));
    CHECK(w.eval({0.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-12));
}
