#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "ddl/ensemble.hpp"
#include "ddl/psido.hpp"

using namespace ddl;

TEST_CASE("quantization matches the dense Kohn-Nirenberg sum at 16 points") {
    auto g = make_grid(1, 10.0, 16);
    const Field f = make_ensemble(g, 1, 7).front();
    const Symbol a = symbol_product(1.0, 1.0, {1.0}, 0.5);
    const cvec got = quantize_apply_c(a, f);
    const cvec& fhat = f.spectral();
    const int n = 16;
    double err = 0.0;
    for (int j = 0; j < n; ++j) {
        std::complex<double> acc{0.0, 0.0};
        for (int k = 0; k < n; ++k) {
            const double x = g->coord(0, j);
            const double xi = g->wavenumbers(0)[k];
            const double ph = 2.0 * M_PI * j * k / n;
            acc += a.eval(&x, &xi, 1) * fhat[k] *
                   std::complex<double>(std::cos(ph), std::sin(ph));
        }
        err = std::max(err, std::abs(acc / double(n) - got[j]));
    }
    CHECK(err < 1e-10);
}

TEST_CASE("x-independent symbols act as Fourier multipliers") {
    auto g = make_grid(1, 20.0, 64);
    const Field f = make_ensemble(g, 1, 3).front();
    const Field via_symbol = quantize_apply(symbol_bessel(1.5), f);
    const Field via_mult = apply_bessel(f, 1.5);
    CHECK((via_symbol - via_mult).max_abs() < 1e-11 * via_mult.max_abs());
}

TEST_CASE("xi-independent symbols act by pointwise multiplication") {
    auto g = make_grid(1, 20.0, 64);
    const Field f = make_ensemble(g, 1, 4).front();
    const Symbol a = symbol_bracket_x(2.0, {1.0}, 0.3);
    const Field got = quantize_apply(a, f);
    double err = 0.0;
    for (int j = 0; j < 64; ++j) {
        const double x = g->coord(0, j) + 0.3;
        const double w = std::pow(1.0 + x * x, 1.0);
        err = std::max(err, std::abs(got.phys()[j] - w * f.phys()[j]));
    }
    CHECK(err < 1e-10);
}

TEST_CASE("quantization is linear") {
    auto g = make_grid(1, 20.0, 64);
    const auto ens = make_ensemble(g, 2, 5);
    const Symbol a = symbol_product(1.0, 1.0, {1.0}, 0.0);
    const Field lhs = quantize_apply(a, ens[0] + ens[1] * 2.0);
    const Field rhs = quantize_apply(a, ens[0]) + quantize_apply(a, ens[1]) * 2.0;
    CHECK((lhs - rhs).max_abs() < 1e-10 * rhs.max_abs());
}

TEST_CASE("composition remainder drops by one order per term") {
    auto g = make_grid(1, 20.0, 64);
    const auto ens = make_ensemble(g, 8, 1);
    const Symbol a = symbol_bessel(1.0);
    const Symbol b = symbol_bracket_x(1.0, {1.0}, 0.0);
    double prev = 1e300;
    for (int N = 1; N <= 3; ++N) {
        const Symbol cN = compose_expansion(a, b, N);
        double worst = 0.0;
        for (const Field& f : ens) {
            const Field bf = quantize_apply(b, f);
            cvec lhs = quantize_apply_c(a, bf);
            const cvec rhs = quantize_apply_c(cN, f);
            for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] -= rhs[i];
            worst = std::max(worst, cnorm(*g, lhs));
        }
        CHECK(worst < prev);
        prev = worst;
    }
    CHECK_THROWS(compose_expansion(a, b, 0));
    CHECK_THROWS(compose_expansion(a, b, 5));
}

TEST_CASE("continuity ratios are stable under grid refinement") {
    auto g64 = make_grid(1, 20.0, 64);
    auto g128 = make_grid(1, 20.0, 128);
    const auto e64 = make_ensemble(g64, 20, 1);
    const auto e128 = make_ensemble(g128, 20, 1);
    for (const Symbol& s :
         {symbol_bessel(1.0), symbol_bracket_x(1.0, {1.0}, 0.0),
          symbol_product(1.0, 1.0, {1.0}, 0.0),
          symbol_cutoff_product(1.0, 1.0, {1.0}, 0.0, 0.5, 4.0)}) {
        double m64 = 0.0, m128 = 0.0;
        for (const Field& f : e64) m64 = std::max(m64, continuity_ratio(s, f));
        for (const Field& f : e128) m128 = std::max(m128, continuity_ratio(s, f));
        CHECK(std::abs(m128 - m64) / m64 <= 0.20);
    }
}

TEST_CASE("seminorm scan flags a misdeclared order as divergent") {
    auto g = make_grid(1, 20.0, 64);
    Symbol honest = symbol_bessel(1.0);
    CHECK_FALSE(class_seminorms(honest, *g, 1).any_divergent);
    Symbol lying = symbol_bessel(1.0);
    lying.m = 0.0;  // claims boundedness in xi that <xi>^1 does not have
    CHECK(class_seminorms(lying, *g, 1).any_divergent);
}

TEST_CASE("commutator factorization remainder shrinks with N") {
    auto g = make_grid(1, 20.0, 64);
    const auto ens = make_ensemble(g, 8, 2);
    const Multiplier chi = multiplier_cutoff(0.5, 2.5, {1.0}, 0.0);
    const Symbol a = symbol_bessel(1.0);
    double prev = 1e300;
    for (int N = 1; N <= 3; ++N) {
        const auto fac = commutator_factorize(chi, a, N, ens);
        CHECK(fac.remainder_bound < prev);
        prev = fac.remainder_bound;
    }
}

TEST_CASE("interpolation inequality holds on a held-out ensemble") {
    auto g = make_grid(1, 20.0, 64);
    const auto ensA = make_ensemble(g, 100, 1);
    const auto ensB = make_ensemble(g, 100, 2);
    const auto fc = fit_and_check(ensA, ensB, [](const Field& f) {
        return interpolation_check(f, 1.0, 1.0, 0.5, {1.0}, 0.0).ratio;
    });
    CHECK(fc.c_star > 0.0);
    CHECK(fc.violation <= 1.05);
}

TEST_CASE("multiplier-only interpolation is log-convexity of Sobolev norms") {
    // f supported where <sigma.x + omega> ~ 1: lhs collapses to ||J^{(1-theta)a} f||
    auto g = make_grid(1, 200.0, 1024);
    const Field f = Field::sample(g, [](double x) {
        return std::exp(-x * x) * std::cos(2.0 * x);
    });
    const double lhs = apply_bessel(f, 1.0).l2_norm();
    const double rhs =
        std::pow(apply_bessel(f, 2.0).l2_norm(), 0.5) * std::pow(f.l2_norm(), 0.5);
    CHECK(lhs <= rhs * (1.0 + 1e-12));
}

TEST_CASE("ensemble generation is order-independent and reproducible") {
    auto g = make_grid(1, 20.0, 64);
    const auto a = make_ensemble(g, 5, 42);
    const auto b = make_ensemble(g, 3, 42);
    for (int i = 0; i < 3; ++i)
        CHECK((a[i] - b[i]).max_abs() == 0.0);
}
