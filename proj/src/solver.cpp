#include "ddl/solver.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ddl/kernels.hpp"

namespace ddl {

using cplx = std::complex<double>;

namespace {

// linear phase rate: d_t uhat = i * rate * uhat
double phase_rate(Model model, double xi0, double xi1) {
    if (model == Model::KdV) return xi0 * xi0 * xi0;
    return xi0 * (xi0 * xi0 + xi1 * xi1);
}

bool all_finite(const cvec& v) {
    for (const auto& z : v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

}  // namespace

Conserved conserved(const Field& u, Model model) {
    Conserved c;
    c.mass = u.mass();
    c.l2 = inner(u, u);
    const Field ux = apply_derivative(u, {1, 0});
    double grad2 = inner(ux, ux);
    if (model == Model::ZK) {
        const Field uy = apply_derivative(u, {0, 1});
        grad2 += inner(uy, uy);
    }
    const double cube = inner(u, u.pointwise_mul(u));
    c.hamiltonian = 0.5 * grad2 - cube / 6.0;
    return c;
}

Solver::Solver(GridPtr grid, SolverConfig cfg) : grid_(grid), cfg_(cfg) {
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("solver: dt must be > 0");
    if (cfg.t_end < 0.0) throw std::invalid_argument("solver: t_end must be >= 0");
    const int want = cfg.model == Model::KdV ? 1 : 2;
    if (grid->dim() != want)
        throw std::invalid_argument("solver: model/grid dimension mismatch");

    const std::size_t n = grid->size();
    lam_.resize(n);
    ax_.resize(n);
    mask_.assign(n, 1.0);
    {
        cvec ones(n, {1.0, 0.0});
        dealias_spectrum(*grid, ones);
        for (std::size_t i = 0; i < n; ++i) mask_[i] = ones[i].real();
    }
    const int n1 = grid->dim() == 2 ? grid->points(1) : 1;
    for (std::size_t i = 0; i < n; ++i) {
        const int k0 = int(i / n1), k1 = int(i % n1);
        const double xi0 = grid->wavenumbers(0)[k0];
        const double xi1 = grid->dim() == 2 ? grid->wavenumbers(1)[k1] : 0.0;
        const double rate = phase_rate(cfg.model, xi0, xi1);
        lam_[i] = {0.0, rate};
        ax_[i] = {0.0, xi0};
        max_rate_ = std::max(max_rate_, std::abs(rate));
    }
    const double limit =
        cfg.integrator == Integrator::ETDRK4 ? kEtdrk4PhaseLimit : kImexPhaseLimit;
    if (cfg.dt * max_rate_ > limit)
        throw std::invalid_argument(
            "solver: dt * max phase rate " + std::to_string(cfg.dt * max_rate_) +
            " exceeds the stability constant " + std::to_string(limit));

    if (cfg.integrator == Integrator::ETDRK4) {
        const double h = cfg.dt;
        const int M = 32;
        e_.resize(n);
        e2_.resize(n);
        qw_.assign(n, {0, 0});
        f1_.assign(n, {0, 0});
        f2_.assign(n, {0, 0});
        f3_.assign(n, {0, 0});
        for (std::size_t i = 0; i < n; ++i) {
            const cplx lh = lam_[i] * h;
            e_[i] = std::exp(lh);
            e2_[i] = std::exp(0.5 * lh);
            cplx q{0, 0}, f1{0, 0}, f2{0, 0}, f3{0, 0};
            for (int m = 0; m < M; ++m) {
                const double th = 2.0 * M_PI * (m + 0.5) / M;
                const cplx z = lh + cplx(std::cos(th), std::sin(th));
                const cplx ez = std::exp(z), ez2 = std::exp(0.5 * z);
                const cplx z2 = z * z, z3 = z2 * z;
                q += (ez2 - 1.0) / z;
                f1 += (-4.0 - z + ez * (4.0 - 3.0 * z + z2)) / z3;
                f2 += (2.0 + z + ez * (-2.0 + z)) / z3;
                f3 += (-4.0 - 3.0 * z - z2 + ez * (4.0 - z)) / z3;
            }
            const double w = h / M;
            qw_[i] = q * w;
            f1_[i] = f1 * w;
            f2_[i] = f2 * w;
            f3_[i] = f3 * w;
        }
    }
}

void Solver::nonlinear(const cvec& v, cvec& out) const {
    const cvec u = fft_backward(*grid_, v);
    cvec sq(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double ur = u[i].real();
        sq[i] = {ur * ur, 0.0};
    }
    out = fft_forward(*grid_, sq);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= -0.5 * ax_[i];
    if (cfg_.dealias == Dealias::TwoThirds)
        for (std::size_t i = 0; i < out.size(); ++i) out[i] *= mask_[i];
}

void Solver::etdrk4_step(cvec& v) const {
    const std::size_t n = v.size();
    cvec nv(n), a(n), na(n), b(n), nb(n), c(n), nc(n);
    nonlinear(v, nv);
    for (std::size_t i = 0; i < n; ++i) a[i] = e2_[i] * v[i] + qw_[i] * nv[i];
    nonlinear(a, na);
    for (std::size_t i = 0; i < n; ++i) b[i] = e2_[i] * v[i] + qw_[i] * na[i];
    nonlinear(b, nb);
    for (std::size_t i = 0; i < n; ++i)
        c[i] = e2_[i] * a[i] + qw_[i] * (2.0 * nb[i] - nv[i]);
    nonlinear(c, nc);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = e_[i] * v[i] + f1_[i] * nv[i] + 2.0 * f2_[i] * (na[i] + nb[i]) +
               f3_[i] * nc[i];
}

void Solver::imex_step(cvec& v, const cvec& nprev, cvec& ncur) const {
    nonlinear(v, ncur);
    const double h = cfg_.dt;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const cplx hl = 0.5 * h * lam_[i];
        v[i] = ((1.0 + hl) * v[i] +
                h * (1.5 * ncur[i] - 0.5 * nprev[i])) /
               (1.0 - hl);
    }
}

Field Solver::step(const Field& u) const {
    cvec v = u.spectral();
    if (cfg_.integrator == Integrator::ETDRK4) {
        etdrk4_step(v);
    } else {
        cvec nprev, ncur;
        nonlinear(v, nprev);
        imex_step(v, nprev, ncur);
    }
    if (!all_finite(v))
        throw std::runtime_error("solver: field lost finiteness during step");
    return Field::from_spectral(grid_, v);
}

Field Solver::evolve(const Field& u0,
                     const std::function<void(double, const Field&)>& on_sample) const {
    const double steps_real = cfg_.t_end / cfg_.dt;
    const long long nsteps = std::llround(steps_real);
    if (std::abs(steps_real - double(nsteps)) > 1e-8 * std::max(1.0, steps_real))
        throw std::invalid_argument("solver: t_end must be a multiple of dt");

    cvec v = u0.spectral();
    if (on_sample) on_sample(0.0, u0);
    cvec nprev;
    if (cfg_.integrator == Integrator::IMEXCN) nonlinear(v, nprev);
    for (long long s = 0; s < nsteps; ++s) {
        if (cfg_.integrator == Integrator::ETDRK4) {
            etdrk4_step(v);
        } else {
            cvec ncur;
            imex_step(v, nprev, ncur);
            nprev.swap(ncur);
        }
        if (!all_finite(v))
            throw std::runtime_error("solver: field lost finiteness at t = " +
                                     std::to_string(s * cfg_.dt) +
                                     " (last valid time)");
        const bool last = s + 1 == nsteps;
        if (on_sample &&
            (last || (cfg_.snapshot_stride > 0 && (s + 1) % cfg_.snapshot_stride == 0))) {
            on_sample((s + 1) * cfg_.dt, Field::from_spectral(grid_, v));
        }
    }
    return Field::from_spectral(grid_, v);
}

}  // namespace ddl
