#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ddl/ground_state.hpp"
#include "ddl/solver.hpp"

using namespace ddl;

namespace {

Field kdv_soliton(GridPtr g, double c, double x0) {
    return Field::sample(g, [c, x0](double x) {
        const double s = 1.0 / std::cosh(0.5 * std::sqrt(c) * (x - x0));
        return 3.0 * c * s * s;
    });
}

double max_err_vs_shifted(const Field& u, double c, double x0, double t) {
    const Grid& g = *u.grid();
    double err = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
        const double x = g.coord(0, int(j));
        const double s = 1.0 / std::cosh(0.5 * std::sqrt(c) * (x - x0 - c * t));
        err = std::max(err, std::abs(u.phys()[j] - 3.0 * c * s * s));
    }
    return err;
}

}  // namespace

TEST_CASE("KdV soliton translates at speed c") {
    auto g = make_grid(1, 100.0, 512);
    SolverConfig sc;
    sc.model = Model::KdV;
    sc.dt = 1e-3;
    sc.t_end = 0.5;
    Solver solver(g, sc);
    const Field u0 = kdv_soliton(g, 1.0, -10.0);
    const Field ut = solver.evolve(u0);
    CHECK(max_err_vs_shifted(ut, 1.0, -10.0, 0.5) < 1e-8);
}

TEST_CASE("conserved quantities drift at round-off only") {
    auto g = make_grid(1, 100.0, 512);
    SolverConfig sc;
    sc.model = Model::KdV;
    sc.dt = 1e-3;
    sc.t_end = 0.5;
    Solver solver(g, sc);
    const Field u0 = kdv_soliton(g, 1.0, 0.0);
    const Conserved before = conserved(u0, Model::KdV);
    const Conserved after = conserved(solver.evolve(u0), Model::KdV);
    CHECK(std::abs(after.mass - before.mass) < 1e-10 * std::abs(before.mass));
    CHECK(std::abs(after.l2 - before.l2) < 1e-10 * before.l2);
    CHECK(std::abs(after.hamiltonian - before.hamiltonian) <
          1e-8 * std::abs(before.hamiltonian));
}

TEST_CASE("ETDRK4 error drops at least 8x when dt halves") {
    auto g = make_grid(1, 100.0, 512);
    double errs[2];
    int i = 0;
    for (double dt : {0.02, 0.01}) {
        SolverConfig sc;
        sc.model = Model::KdV;
        sc.dt = dt;
        sc.t_end = 1.0;
        Solver solver(g, sc);
        errs[i++] = max_err_vs_shifted(solver.evolve(kdv_soliton(g, 1.0, -10.0)),
                                       1.0, -10.0, 1.0);
    }
    CHECK(errs[0] / errs[1] >= 8.0);
}

TEST_CASE("IMEX-CN cross-checks the ETDRK4 trajectory") {
    auto g = make_grid(1, 100.0, 256);
    const Field u0 = kdv_soliton(g, 1.0, 0.0);
    Field sol[2];
    int i = 0;
    for (Integrator integ : {Integrator::ETDRK4, Integrator::IMEXCN}) {
        SolverConfig sc;
        sc.model = Model::KdV;
        sc.dt = 2e-4;
        sc.t_end = 0.1;
        sc.integrator = integ;
        sol[i++] = Solver(g, sc).evolve(u0);
    }
    CHECK((sol[0] - sol[1]).max_abs() < 1e-6 * sol[0].max_abs());
}

TEST_CASE("dealiasing does not perturb resolved dynamics") {
    auto g = make_grid(1, 100.0, 512);
    const Field u0 = kdv_soliton(g, 1.0, 0.0);
    Field sol[2];
    int i = 0;
    for (Dealias d : {Dealias::TwoThirds, Dealias::None}) {
        SolverConfig sc;
        sc.model = Model::KdV;
        sc.dt = 1e-3;
        sc.t_end = 0.5;
        sc.dealias = d;
        sol[i++] = Solver(g, sc).evolve(u0);
    }
    CHECK((sol[0] - sol[1]).max_abs() < 1e-9 * sol[0].max_abs());
}

TEST_CASE("solver rejects invalid configurations") {
    auto g1 = make_grid(1, 100.0, 512);
    auto g2 = make_grid(2, 40.0, 64);
    SolverConfig sc;
    sc.model = Model::KdV;
    sc.dt = -1e-3;
    CHECK_THROWS(Solver(g1, sc));
    sc.dt = 1.0;  // dt * max|xi|^3 far beyond the phase limit
    CHECK_THROWS(Solver(g1, sc));
    sc.dt = 1e-3;
    CHECK_THROWS(Solver(g2, sc));  // KdV on a 2d grid
}

TEST_CASE("evolution sampling hits t=0, the stride, and t_end") {
    auto g = make_grid(1, 100.0, 256);
    SolverConfig sc;
    sc.model = Model::KdV;
    sc.dt = 1e-3;
    sc.t_end = 0.05;
    sc.snapshot_stride = 10;
    Solver solver(g, sc);
    std::vector<double> ts;
    solver.evolve(kdv_soliton(g, 1.0, 0.0),
                  [&](double t, const Field&) { ts.push_back(t); });
    REQUIRE(ts.size() == 6);
    CHECK(ts.front() == 0.0);
    CHECK(ts.back() == doctest::Approx(0.05).epsilon(1e-12));
}

TEST_CASE("ground state satisfies its equation to 1e-9") {
    auto g = make_grid(2, 40.0, 128);
    const GroundState gs = ground_state(g, 1.0);
    CHECK(gs.residual < 1e-9);
    CHECK(gs.delta > 0.8);
    CHECK(gs.delta < 1.2);
    CHECK(gs.Q.max_abs() > 1.0);  // nontrivial solution, not the zero fixed point
    for (double v : gs.Q.phys()) CHECK(v > -1e-8);  // positivity
}

TEST_CASE("ground state obeys the scaling law Q_c = c Q(sqrt(c) x)") {
    auto g1 = make_grid(2, 40.0, 256);
    auto g4 = make_grid(2, 20.0, 128);
    const GroundState q1 = ground_state(g1, 1.0);
    const GroundState q4 = ground_state(g4, 4.0);
    // box/points chosen so sqrt(4) x lands back on the coarse grid
    double err = 0.0;
    for (int i = 0; i < 128; ++i)
        for (int j = 0; j < 128; ++j)
            err = std::max(err, std::abs(q4.Q.phys()[std::size_t(i) * 128 + j] -
                                         4.0 * q1.Q.phys()[std::size_t(2 * i) * 256 +
                                                           2 * j]));
    CHECK(err < 1e-6);
}

TEST_CASE("ground state rejects impossible setups") {
    CHECK_THROWS(ground_state(make_grid(1, 40.0, 128), 1.0));
    CHECK_THROWS(ground_state(make_grid(2, 40.0, 128), -1.0));
    CHECK_THROWS(ground_state(make_grid(2, 10.0, 64), 1.0));  // tail hits the box
}
