#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ddl/cone.hpp"
#include "ddl/diagnostics.hpp"
#include "ddl/solver.hpp"

using namespace ddl;

namespace {

Field centered_bump(GridPtr g, double width) {
    if (g->dim() == 1)
        return Field::sample(g, [width](double x) {
            return std::exp(-x * x / (width * width));
        });
    return Field::sample(g, [width](double x, double y) {
        return std::exp(-(x * x + y * y) / (width * width));
    });
}

MovingRegion halfspace(double kappa, double nu) {
    MovingRegion reg;
    reg.cone = ConeVector{{1.0}, nu, 0.0};
    reg.offset = kappa;
    return reg;
}

Trajectory kdv_trajectory(GridPtr g, const Field& u0, double dt, double t_end,
                          int stride) {
    SolverConfig sc;
    sc.model = Model::KdV;
    sc.dt = dt;
    sc.t_end = t_end;
    sc.snapshot_stride = stride;
    Solver solver(g, sc);
    Trajectory traj;
    solver.evolve(u0, [&](double t, const Field& u) { traj.push_back({t, u}); });
    return traj;
}

}  // namespace

TEST_CASE("r_s matches the printed tradeoff formula on a 20-point grid") {
    int checked = 0;
    for (double r : {1.0, 1.5, 2.0, 3.0}) {
        const double fl = std::floor(2.0 * r);
        for (double s = 0.0; s <= fl && checked < 20; s += 0.5, ++checked) {
            const double expect =
                std::max((1.0 - s / fl) * r, r - std::ceil(s) / 2.0);
            CHECK(r_exponent(r, s) == expect);  // bitwise, no tolerance
        }
    }
    CHECK(checked >= 20);
    // endpoints: full decay at s=0, half of it left at s=floor(2r)
    CHECK(r_exponent(2.0, 0.0) == 2.0);
    CHECK(r_exponent(2.0, 4.0) == 0.0);
    CHECK(r_exponent(1.5, 3.0) == 0.0);
}

TEST_CASE("algebraic cone condition coincides with positivity of M") {
    const auto good = cone_check({1.0, 1.0});
    CHECK(good.ok);
    CHECK(good.min_eig == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-12));

    CHECK(cone_check({1.0, 0.0}).ok);
    CHECK_FALSE(cone_check({1.0, 2.0}).ok);   // sqrt(3) < 2
    CHECK(cone_check({1.0, 2.0}).min_eig <= 0.0);
    CHECK_FALSE(cone_check({-1.0, 0.0}).ok);  // sigma_1 < 0
    CHECK_THROWS(cone_check({0.0, 0.0}));

    // verdict equivalence on a sweep of directions
    for (int i = 0; i <= 40; ++i) {
        const double s2 = -3.0 + i * 0.15;
        const auto c = cone_check({1.0, s2});
        CHECK(c.ok == (c.min_eig > 0.0));
    }
}

TEST_CASE("smoothed indicator is dominated by the sharp one") {
    auto g = make_grid(1, 60.0, 256);
    const Field u = centered_bump(g, 4.0);
    const MovingRegion reg = halfspace(-5.0, 1.0);
    const WeightSpec w{WeightKind::Poly, 2.0, 0.0, 0.0};
    for (double t : {0.0, 0.5, 1.0}) {
        const auto n = weighted_halfspace_norm(u, reg, t, w);
        CHECK(n.smoothed <= n.sharp * (1.0 + 1e-12));
        CHECK(n.sharp > 0.0);
    }
}

TEST_CASE("halfspace norm grows monotonically as the region expands") {
    auto g = make_grid(1, 60.0, 256);
    const Field u = centered_bump(g, 4.0);
    const WeightSpec w{WeightKind::Poly, 1.0, 0.0, 0.0};
    // larger nu at fixed t sweeps the threshold further left
    double prev = -1.0;
    for (double nu : {0.5, 1.0, 2.0, 4.0}) {
        const auto n = weighted_halfspace_norm(u, halfspace(-2.0, nu), 1.0, w);
        CHECK(n.sharp >= prev);
        prev = n.sharp;
    }
    // and the frozen field is monotone in t for the same reason
    const MovingRegion reg = halfspace(-2.0, 1.0);
    prev = -1.0;
    for (double t : {0.0, 1.0, 2.0, 4.0}) {
        const auto n = weighted_halfspace_norm(u, reg, t, w);
        CHECK(n.sharp >= prev);
        prev = n.sharp;
    }
}

TEST_CASE("time reversal (nu < 0) is rejected at validation") {
    MovingRegion reg = halfspace(0.0, -1.0);
    CHECK_THROWS(validate_region(reg));
    reg = halfspace(0.0, 1.0);
    CHECK_NOTHROW(validate_region(reg));
    reg.kind = RegionKind::Strip;
    reg.gamma = 2.0;
    reg.kappa = -2.0;  // unordered bounds
    CHECK_THROWS(validate_region(reg));
}

TEST_CASE("quadrature leaning on the periodic seam is rejected") {
    auto g = make_grid(1, 60.0, 256);
    // mass parked at the box edge
    const Field u = Field::sample(g, [](double x) {
        return std::exp(-(x - 29.0) * (x - 29.0));
    });
    const WeightSpec w{WeightKind::Poly, 2.0, 0.0, 0.0};
    CHECK_THROWS_WITH_AS(weighted_halfspace_norm(u, halfspace(0.0, 1.0), 0.0, w),
                         doctest::Contains("seam"), std::runtime_error);
}

TEST_CASE("bounded_verdict separates plateaus from growth") {
    CHECK(bounded_verdict({1.0, 1.1, 1.05, 1.08, 1.02, 1.0}));
    CHECK(bounded_verdict({5.0, 4.0, 3.0, 2.0, 1.0, 0.5}));
    CHECK(bounded_verdict({0.0, 1e-16, 2e-16, 3e-15, 4e-15, 5e-15}));
    // 10x the first value trips the cap
    CHECK_FALSE(bounded_verdict({1.0, 2.0, 4.0, 6.0, 8.0, 10.0}));
    // monotone growth > 5% across the final third trips the tail clause
    CHECK_FALSE(bounded_verdict(
        {1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 2.0, 2.4, 2.9, 3.5, 4.2}));
}

TEST_CASE("gain scan reports one bounded row per requested s") {
    auto g = make_grid(1, 60.0, 256);
    Trajectory traj = kdv_trajectory(g, centered_bump(g, 4.0) * 0.3, 1e-3, 0.2, 50);
    MovingRegion reg = halfspace(-8.0, 0.5);
    const auto rows = gain_of_regularity_scan(traj, reg, 1.0, {0.0, 0.5, 1.0}, 0.05);
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) {
        CHECK(row.r_s == r_exponent(1.0, row.s));
        CHECK(row.sup > 0.0);
        CHECK(row.bounded);
        CHECK(row.times.size() == row.values.size());
    }
}

TEST_CASE("strip smoothing integral is finite and positive") {
    auto g = make_grid(1, 60.0, 256);
    Trajectory traj = kdv_trajectory(g, centered_bump(g, 4.0) * 0.3, 1e-3, 0.2, 50);
    MovingRegion reg = halfspace(0.0, 0.5);
    reg.kind = RegionKind::Strip;
    reg.gamma = -6.0;
    reg.kappa = 6.0;
    const double val = strip_smoothing_integral(traj, reg, 2, 0.05);
    CHECK(val > 0.0);
    CHECK(std::isfinite(val));
}

TEST_CASE("energy identity residual halves when dt halves") {
    // 512 points keeps the spatial error floor below the O(dt^2) term
    auto g = make_grid(1, 100.0, 512);
    const Field u0 = Field::sample(g, [](double x) {
        const double s = 1.0 / std::cosh(0.5 * x);
        return 3.0 * s * s;
    });
    for (int weighted = 0; weighted < 2; ++weighted) {
        BOperator B;
        EnergyWeight w;
        if (weighted) {
            B.kind = BOperator::Kind::Deriv;
            B.beta = {1, 0};
            w.unit = false;
            w.cone = ConeVector{{1.0}, 1.0, 0.0};
            w.kappa = -10.0;
        }
        double res[2];
        int i = 0;
        for (double dt : {0.02, 0.01}) {
            Trajectory traj = kdv_trajectory(g, u0, dt, 0.4, 1);
            double worst = 0.0;
            for (double r : energy_identity_residual(traj, Model::KdV, B, w))
                worst = std::max(worst, std::abs(r));
            res[i++] = worst;
        }
        CHECK(res[1] / res[0] <= 0.6);
    }
}

TEST_CASE("identity B with unit weight conserves the discrete energy") {
    auto g = make_grid(1, 100.0, 256);
    const Field u0 = Field::sample(g, [](double x) {
        const double s = 1.0 / std::cosh(0.5 * x);
        return 3.0 * s * s;
    });
    Trajectory traj = kdv_trajectory(g, u0, 0.01, 0.2, 1);
    // E = int u^2 is conserved, so each term combination nearly cancels
    BOperator B;
    EnergyWeight w;
    for (double r : energy_identity_residual(traj, Model::KdV, B, w))
        CHECK(std::abs(r) < 1e-6);
}
