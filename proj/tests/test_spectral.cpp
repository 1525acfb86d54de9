#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "ddl/fourier.hpp"
#include "ddl/grid.hpp"

using namespace ddl;
using cplx = std::complex<double>;

namespace {

Field random_field(GridPtr g, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> v(g->size());
    for (double& x : v) x = u(rng);
    return Field(g, std::move(v));
}

}  // namespace

TEST_CASE("multiplier matches the dense DFT on a 16-point grid") {
    auto g = make_grid(1, 10.0, 16);
    const Field f = random_field(g, 7);
    const int n = 16;
    const Field got = apply_bessel(f, 1.5);

    // direct O(n^2) transform, multiplier, inverse
    const auto& xi = g->wavenumbers(0);
    for (int j = 0; j < n; ++j) {
        cplx acc{0.0, 0.0};
        for (int k = 0; k < n; ++k) {
            cplx fhat{0.0, 0.0};
            for (int l = 0; l < n; ++l) {
                const double ph = -2.0 * M_PI * l * k / n;
                fhat += f.phys()[l] * cplx(std::cos(ph), std::sin(ph));
            }
            const double m = std::pow(1.0 + xi[k] * xi[k], 0.75);
            const double ph = 2.0 * M_PI * j * k / n;
            acc += m * fhat * cplx(std::cos(ph), std::sin(ph));
        }
        CHECK(std::abs(acc.real() / double(n) - got.phys()[j]) < 1e-10);
    }
}

TEST_CASE("single mode pins the sign convention of the linear group") {
    // KdV: each mode advances by exp(i xi^3 t), so cos(xi x) -> cos(xi(x + xi^2 t))
    auto g = make_grid(1, 2.0 * M_PI, 64);
    const double xi = 3.0;
    const Field u0 = Field::sample(g, [&](double x) { return std::cos(xi * x); });
    const double t = 0.37;
    const Field ut = linear_propagate(u0, t, Model::KdV);
    for (int j = 0; j < 64; ++j) {
        const double x = g->coord(0, j);
        CHECK(ut.phys()[j] ==
              doctest::Approx(std::cos(xi * (x + xi * xi * t))).epsilon(1e-12));
    }
}

TEST_CASE("single ZK mode advances by xi1 |xi|^2") {
    auto g = make_grid(2, 2.0 * M_PI, 32);
    const double x1 = 2.0, x2 = 3.0;
    const Field u0 = Field::sample(
        g, [&](double x, double y) { return std::cos(x1 * x + x2 * y); });
    const double t = 0.11;
    const double rate = x1 * (x1 * x1 + x2 * x2);
    const Field ut = linear_propagate(u0, t, Model::ZK);
    double err = 0.0;
    for (int i = 0; i < 32; ++i)
        for (int j = 0; j < 32; ++j) {
            const double x = g->coord(0, i), y = g->coord(1, j);
            err = std::max(err, std::abs(ut.phys()[i * 32 + j] -
                                         std::cos(x1 * x + x2 * y + rate * t)));
        }
    CHECK(err < 1e-12);
}

TEST_CASE("Parseval ties the physical and spectral norms") {
    for (int dim : {1, 2}) {
        auto g = make_grid(dim, 17.0, dim == 1 ? 128 : 32);
        const Field f = random_field(g, 11 + dim);
        double spec = 0.0;
        for (const cplx& z : f.spectral()) spec += std::norm(z);
        spec = std::sqrt(spec / double(g->size()) * g->cell_volume());
        CHECK(f.l2_norm() == doctest::Approx(spec).epsilon(1e-12));
    }
}

TEST_CASE("linear group composes and inverts") {
    auto g = make_grid(1, 30.0, 128);
    const Field f = random_field(g, 3);
    for (Model m : {Model::KdV}) {
        const Field a = linear_propagate(linear_propagate(f, 0.3, m), 0.5, m);
        const Field b = linear_propagate(f, 0.8, m);
        CHECK((a - b).max_abs() < 1e-10 * f.max_abs());
        const Field back = linear_propagate(linear_propagate(f, 0.8, m), -0.8, m);
        CHECK((back - f).max_abs() < 1e-10);
    }
    CHECK((linear_propagate(f, 0.0, Model::KdV) - f).max_abs() < 1e-13);
}

TEST_CASE("linear group preserves the l2 norm on resolved data") {
    auto g = make_grid(2, 25.0, 32);
    const Field f = Field::sample(g, [](double x, double y) {
        return std::exp(-(x * x + y * y) / 6.0) * (1.0 + 0.3 * std::sin(x));
    });
    const Field ut = linear_propagate(f, 1.7, Model::ZK);
    CHECK(ut.l2_norm() == doctest::Approx(f.l2_norm()).epsilon(1e-12));
}

TEST_CASE("spectral derivative is exact on trig data") {
    auto g = make_grid(1, 2.0 * M_PI, 64);
    const Field f = Field::sample(g, [](double x) { return std::sin(4.0 * x); });
    const Field d3 = apply_derivative(f, {3, 0});
    for (int j = 0; j < 64; ++j)
        CHECK(d3.phys()[j] ==
              doctest::Approx(-64.0 * std::cos(4.0 * g->coord(0, j)))
                  .epsilon(1e-11));
    CHECK_THROWS(apply_derivative(f, {kMaxDerivativeOrder + 1, 0}));
}

TEST_CASE("2/3 mask zeroes exactly the top third of modes") {
    auto g = make_grid(1, 10.0, 96);
    cvec spec(96, cplx(1.0, 0.0));
    dealias_spectrum(*g, spec);
    int kept = 0;
    for (const cplx& z : spec) kept += z != cplx(0.0, 0.0);
    CHECK(kept <= 65);  // |k| <= n/3
    CHECK(kept >= 63);
    CHECK(spec[0] == cplx(1.0, 0.0));
    CHECK(spec[48] == cplx(0.0, 0.0));  // Nyquist
}

TEST_CASE("bessel potential composes additively") {
    auto g = make_grid(1, 20.0, 128);
    const Field f = random_field(g, 9);
    const Field a = apply_bessel(apply_bessel(f, 0.75), 1.25);
    const Field b = apply_bessel(f, 2.0);
    CHECK((a - b).max_abs() < 1e-10 * b.max_abs());
}
