#include "ddl/ground_state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ddl/fourier.hpp"

namespace ddl {

namespace {

// (c - Lap)^{-1}: multiplier 1/(c + |xi|^2)
Field invert_helmholtz(const Field& f, double c) {
    return apply_multiplier(f, [c](const std::array<double, 2>& xi) {
        return std::complex<double>(1.0 / (c + xi[0] * xi[0] + xi[1] * xi[1]), 0.0);
    });
}

Field laplacian(const Field& f) {
    return apply_derivative(f, {2, 0}) + apply_derivative(f, {0, 2});
}

}  // namespace

GroundState ground_state(GridPtr grid, double c, int max_iters) {
    if (grid->dim() != 2)
        throw std::invalid_argument("ground_state: 2d grid required");
    if (!(c > 0.0)) throw std::invalid_argument("ground_state: c must be > 0");
    const double L = std::min(grid->box_length(0), grid->box_length(1));
    if (std::exp(-std::sqrt(c) * 0.5 * L) >= 1e-8)
        throw std::invalid_argument(
            "ground_state: box too small, exp(-sqrt(c) L/2) must be < 1e-8");

    const double rc = std::sqrt(c);
    Field u = Field::sample(grid, [c, rc](double x, double y) {
        return 3.0 * c * std::exp(-0.5 * rc * (x * x + y * y));
    });

    GroundState gs;
    gs.c = c;
    double s = 0.0;
    for (int it = 0; it < max_iters; ++it) {
        const Field half_sq = u.pointwise_mul(u) * 0.5;
        const Field cu = u * c - laplacian(u);  // (c - Lap) u
        const double num = inner(cu, u);
        const double den = inner(half_sq, u);
        if (!(den > 0.0))
            throw std::runtime_error("ground_state: degenerate iterate");
        s = num / den;
        u = invert_helmholtz(half_sq, c) * (s * s);

        const Field res = laplacian(u) - u * c + u.pointwise_mul(u) * 0.5;
        const double rel = res.l2_norm() / u.l2_norm();
        gs.residual_history.push_back(rel);
        gs.iterations = it + 1;
        if (std::abs(s - 1.0) < 1e-12 && rel < 1e-9) {
            gs.residual = rel;
            break;
        }
        gs.residual = rel;
    }
    if (!(std::abs(s - 1.0) < 1e-12 && gs.residual < 1e-9)) {
        std::string hist;
        const std::size_t n = gs.residual_history.size();
        for (std::size_t i = n > 8 ? n - 8 : 0; i < n; ++i)
            hist += " " + std::to_string(gs.residual_history[i]);
        throw std::runtime_error(
            "ground_state: no convergence after " + std::to_string(max_iters) +
            " iterations; trailing residuals:" + hist);
    }
    gs.Q = u;

    // decay rate: least-squares slope of log Q along the positive x1 axis on
    // the mid-range annulus [L/8, L/4]
    const int n0 = grid->points(0);
    const int j1c = grid->points(1) / 2;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (int j0 = n0 / 2; j0 < n0; ++j0) {
        const double r = grid->coord(0, j0);
        if (r < L / 8.0 || r > L / 4.0) continue;
        const double q = u.phys()[grid->index(j0, j1c)];
        if (!(q > 0.0)) continue;
        const double lq = std::log(q);
        sx += r;
        sy += lq;
        sxx += r * r;
        sxy += r * lq;
        ++cnt;
    }
    if (cnt >= 2) gs.delta = -(cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    return gs;
}

}  // namespace ddl
