#include "ddl/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ddl/kernels.hpp"

namespace ddl {

namespace {

std::vector<double> sigma_dot_x(const Grid& g, const ConeVector& cone) {
    std::vector<double> s(g.size());
    const int n1 = g.dim() == 2 ? g.points(1) : 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const int j0 = int(i / n1), j1 = int(i % n1);
        double v = cone.sigma[0] * g.coord(0, j0);
        if (g.dim() == 2 && cone.sigma.size() > 1)
            v += cone.sigma[1] * g.coord(1, j1);
        s[i] = v;
    }
    return s;
}

// Reject quadratures whose integrand leans on the periodic seam: more than
// 1% of the mass within the outer 5% of the sigma.x range.
void seam_guard(const std::vector<double>& svals,
                const std::vector<double>& integrand, bool both_edges = true) {
    const auto [lo, hi] = std::minmax_element(svals.begin(), svals.end());
    const double span = *hi - *lo;
    const double band = 0.05 * span;
    double total = 0.0, edge = 0.0;
    for (std::size_t i = 0; i < svals.size(); ++i) {
        total += integrand[i];
        if ((both_edges && svals[i] < *lo + band) || svals[i] > *hi - band)
            edge += integrand[i];
    }
    if (total > 1e-300 && edge > 0.01 * total)
        throw std::runtime_error(
            "seam violation: weighted mass touches the periodic boundary");
}

double poly_or_exp(const WeightSpec& w, double arg) {
    if (w.kind == WeightKind::Poly) return std::pow(1.0 + arg * arg, 0.5 * w.r);
    if (w.eta <= 0.0) return std::exp(w.b * arg);
    return 1.0 / std::sqrt(std::exp(-2.0 * w.b * arg) + w.eta);
}

double lerp_fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const int n = int(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

Field nonlinear_term(const Field& u, Model model) {
    // u d_x1 u as the solver computes it: 1/2 d_x1 of the dealiased u^2
    const Grid& g = *u.grid();
    cvec sq(g.size());
    for (std::size_t i = 0; i < sq.size(); ++i) {
        const double v = u.phys()[i];
        sq[i] = {v * v, 0.0};
    }
    cvec hat = fft_forward(g, sq);
    dealias_spectrum(g, hat);
    const int n1 = g.dim() == 2 ? g.points(1) : 1;
    for (std::size_t i = 0; i < hat.size(); ++i) {
        const double xi0 = g.wavenumbers(0)[int(i / n1)];
        hat[i] *= std::complex<double>(0.0, 0.5 * xi0);
    }
    (void)model;
    return Field::from_spectral(u.grid(), hat);
}

Field linear_term(const Field& u, Model model) {
    if (model == Model::KdV) return apply_derivative(u, {3, 0});
    return apply_derivative(u, {3, 0}) + apply_derivative(u, {1, 2});
}

}  // namespace

void validate_region(const MovingRegion& reg) {
    validate_cone(reg.cone);
    if (reg.kind == RegionKind::Strip && !(reg.gamma < reg.kappa))
        throw std::invalid_argument("region: strip bounds must satisfy gamma < kappa");
    if (!(reg.eps > 0.0) || !(reg.tau >= 5.0 * reg.eps))
        throw std::invalid_argument("region: need eps > 0 and tau >= 5 eps");
}

HalfspaceNorm weighted_halfspace_norm(const Field& u, const MovingRegion& reg,
                                      double t, const WeightSpec& w,
                                      bool running) {
    validate_region(reg);
    const Grid& g = *u.grid();
    const auto svals = sigma_dot_x(g, reg.cone);
    const CutoffFamily chi(reg.eps, reg.tau);
    const double shift = running ? reg.cone.nu * t : 0.0;

    std::vector<double> sharp_i(g.size()), smooth_i(g.size());
    for (std::size_t i = 0; i < svals.size(); ++i) {
        const double wv = poly_or_exp(w, svals[i] + shift);
        const double wu2 = wv * wv * u.phys()[i] * u.phys()[i];
        double ind = 0.0, sm = 0.0;
        if (reg.kind == RegionKind::HalfSpace) {
            const double z = svals[i] - reg.threshold(t);
            ind = z > 0.0 ? 1.0 : 0.0;
            sm = chi.chi(z);
        } else {
            ind = (svals[i] > reg.lo(t) && svals[i] < reg.hi(t)) ? 1.0 : 0.0;
            const double c = chi.chi(svals[i] - reg.lo(t)) *
                             (1.0 - chi.chi(svals[i] - reg.hi(t)));
            sm = c;
        }
        sharp_i[i] = ind * wu2;
        smooth_i[i] = sm * sm * wu2;
    }
    seam_guard(svals, sharp_i);

    HalfspaceNorm out;
    const double h = g.cell_volume();
    for (std::size_t i = 0; i < sharp_i.size(); ++i) {
        out.sharp += sharp_i[i];
        out.smoothed += smooth_i[i];
    }
    out.sharp *= h;
    out.smoothed *= h;
    return out;
}

double r_exponent(double r, double s) {
    const double fl = std::floor(2.0 * r);
    return std::max((1.0 - s / fl) * r, r - std::ceil(s) / 2.0);
}

bool bounded_verdict(const std::vector<double>& vals) {
    if (vals.empty()) return true;
    const double first = vals.front();
    const double vmax = *std::max_element(vals.begin(), vals.end());
    if (vmax <= 1e-14) return true;
    if (vmax > 5.0 * first) return false;
    // significant monotone growth over the final third?
    const std::size_t start = vals.size() - std::max<std::size_t>(vals.size() / 3, 2);
    if (start >= vals.size() - 1) return true;
    bool increasing = true;
    for (std::size_t i = start; i + 1 < vals.size(); ++i)
        if (vals[i + 1] <= vals[i]) increasing = false;
    if (increasing && vals.back() > 1.05 * vals[start]) return false;
    return true;
}

std::vector<ScanRow> gain_of_regularity_scan(const Trajectory& traj,
                                             const MovingRegion& reg, double r,
                                             const std::vector<double>& s_grid,
                                             double delta) {
    validate_region(reg);
    if (!(delta > 0.0))
        throw std::invalid_argument("gain_of_regularity_scan: delta > 0 required");
    const double cap = std::floor(2.0 * r);
    std::vector<ScanRow> rows;
    for (double s : s_grid) {
        if (s < 0.0 || s > cap)
            throw std::invalid_argument(
                "gain_of_regularity_scan: s must lie in [0, floor(2r)]");
        ScanRow row;
        row.s = s;
        row.r_s = r_exponent(r, s);
        const CutoffFamily chi(reg.eps, reg.tau);
        for (const TimedField& tf : traj) {
            if (tf.t < delta) continue;
            const Field js = apply_bessel(tf.u, s);
            const Grid& g = *js.grid();
            const auto svals = sigma_dot_x(g, reg.cone);
            std::vector<double> wgt(g.size());
            for (std::size_t i = 0; i < wgt.size(); ++i) {
                const double run = svals[i] + reg.cone.nu * tf.t;
                const double c = chi.chi(svals[i] - reg.threshold(tf.t));
                wgt[i] = std::pow(1.0 + run * run, row.r_s) * c * c;
            }
            const double val =
                g.cell_volume() * kern::weighted_sum_sq(wgt, js.phys());
            row.times.push_back(tf.t);
            row.values.push_back(val);
            row.sup = std::max(row.sup, val);
        }
        row.bounded = bounded_verdict(row.values);
        rows.push_back(std::move(row));
    }
    return rows;
}

double strip_smoothing_integral(const Trajectory& traj, const MovingRegion& reg,
                                int order, double delta) {
    validate_region(reg);
    if (reg.kind != RegionKind::Strip)
        throw std::invalid_argument("strip_smoothing_integral: strip region required");
    if (order < 0 || order > kMaxDerivativeOrder)
        throw std::invalid_argument("strip_smoothing_integral: order beyond cap");
    std::vector<double> ts, vals;
    for (const TimedField& tf : traj) {
        if (tf.t < delta) continue;
        const Field ju = apply_bessel(tf.u, double(order));
        const Grid& g = *ju.grid();
        const auto svals = sigma_dot_x(g, reg.cone);
        std::vector<double> integ(g.size());
        for (std::size_t i = 0; i < integ.size(); ++i) {
            const bool in = svals[i] > reg.lo(tf.t) && svals[i] < reg.hi(tf.t);
            integ[i] = in ? ju.phys()[i] * ju.phys()[i] : 0.0;
        }
        seam_guard(svals, integ);
        double v = 0.0;
        for (double x : integ) v += x;
        ts.push_back(tf.t);
        vals.push_back(v * g.cell_volume());
    }
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i)
        acc += 0.5 * (vals[i] + vals[i + 1]) * (ts[i + 1] - ts[i]);
    return acc;
}

std::vector<ExpScanRow> exp_smoothing_scan(const Trajectory& traj,
                                           const MovingRegion& reg, double b,
                                           const std::vector<MultiIndex>& betas,
                                           double delta, double eta) {
    validate_region(reg);
    if (!(b > 0.0)) throw std::invalid_argument("exp_smoothing_scan: b > 0 required");
    std::vector<ExpScanRow> rows;
    for (const MultiIndex& beta : betas) {
        if (beta[0] + beta[1] > kMaxDerivativeOrder)
            throw std::invalid_argument("exp_smoothing_scan: beta beyond cap");
        ExpScanRow row;
        row.beta = beta;
        for (const TimedField& tf : traj) {
            if (tf.t < delta) continue;
            const Field du = apply_derivative(tf.u, beta);
            const WeightSpec w{WeightKind::Exp, 0.0, b, eta};
            const HalfspaceNorm n = weighted_halfspace_norm(du, reg, tf.t, w);
            row.times.push_back(tf.t);
            row.values.push_back(n.sharp);
            row.sup = std::max(row.sup, n.sharp);
        }
        row.bounded = bounded_verdict(row.values);
        rows.push_back(std::move(row));
    }
    return rows;
}

GrowthFit linear_weighted_growth_check(const Field& f, double r,
                                       const std::vector<double>& t_grid,
                                       Model model) {
    const Grid& g = *f.grid();
    std::vector<double> w(g.size()), radial(g.size());
    const int n1 = g.dim() == 2 ? g.points(1) : 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const int j0 = int(i / n1), j1 = int(i % n1);
        double r2 = g.coord(0, j0) * g.coord(0, j0);
        if (g.dim() == 2) r2 += g.coord(1, j1) * g.coord(1, j1);
        radial[i] = std::sqrt(r2);
        w[i] = std::pow(1.0 + r2, 0.5 * r);
    }

    GrowthFit fit;
    for (double t : t_grid) {
        const Field st = linear_propagate(f, t, model);
        std::vector<double> integ(g.size());
        for (std::size_t i = 0; i < integ.size(); ++i)
            integ[i] = w[i] * w[i] * st.phys()[i] * st.phys()[i];
        seam_guard(radial, integ, /*both_edges=*/false);  // radial: only the outer edge wraps
        double v = 0.0;
        for (double x : integ) v += x;
        fit.times.push_back(t);
        fit.values.push_back(std::sqrt(v * g.cell_volume()));
    }

    // slope on the tail (upper half of the t grid)
    std::vector<double> lx, ly;
    for (std::size_t i = fit.times.size() / 2; i < fit.times.size(); ++i) {
        lx.push_back(std::log(std::sqrt(1.0 + fit.times[i] * fit.times[i])));
        ly.push_back(std::log(std::max(fit.values[i], 1e-300)));
    }
    fit.slope = lx.size() >= 2 ? lerp_fit_slope(lx, ly) : 0.0;

    const double bracket = apply_bessel(f, 2.0 * r).l2_norm() +
                           Field(f.grid(), [&] {
                               std::vector<double> p(g.size());
                               for (std::size_t i = 0; i < p.size(); ++i)
                                   p[i] = w[i] * f.phys()[i];
                               return p;
                           }()).l2_norm();
    for (std::size_t i = 0; i < fit.times.size(); ++i) {
        const double tb = std::pow(1.0 + fit.times[i] * fit.times[i], 0.5 * r);
        fit.constant = std::max(fit.constant, fit.values[i] / (tb * bracket));
    }
    return fit;
}

Field apply_B(const Field& u, const BOperator& B) {
    switch (B.kind) {
        case BOperator::Kind::Identity: return u;
        case BOperator::Kind::Deriv: return apply_derivative(u, B.beta);
        default: return apply_bessel(u, B.s);
    }
}

std::vector<double> energy_identity_residual(const Trajectory& traj, Model model,
                                             const BOperator& B,
                                             const EnergyWeight& w) {
    if (traj.size() < 3)
        throw std::invalid_argument("energy_identity_residual: need >= 3 snapshots");
    const double dt = traj[1].t - traj[0].t;
    for (std::size_t i = 0; i + 1 < traj.size(); ++i)
        if (std::abs(traj[i + 1].t - traj[i].t - dt) > 1e-9 * std::max(1.0, dt))
            throw std::invalid_argument(
                "energy_identity_residual: snapshots must be at stride 1");
    if (!w.unit) validate_cone(w.cone);

    const Grid& g = *traj.front().u.grid();
    const auto svals = w.unit ? std::vector<double>() : sigma_dot_x(g, w.cone);
    const CutoffFamily chi(w.eps, w.tau);

    std::vector<double> energy(traj.size());
    std::vector<Field> bu;
    bu.reserve(traj.size());
    for (std::size_t k = 0; k < traj.size(); ++k) {
        bu.push_back(apply_B(traj[k].u, B));
        std::vector<double> c2(g.size(), 1.0);
        if (!w.unit)
            for (std::size_t i = 0; i < c2.size(); ++i) {
                const double a = svals[i] + w.cone.nu * traj[k].t + w.kappa;
                c2[i] = chi.chi(a) * chi.chi(a);
            }
        energy[k] = g.cell_volume() * kern::weighted_sum_sq(c2, bu[k].phys());
    }

    std::vector<double> res;
    for (std::size_t k = 1; k + 1 < traj.size(); ++k) {
        const double dE = (energy[k + 1] - energy[k - 1]) / (4.0 * dt);
        std::vector<double> c2(g.size(), 1.0), dc2(g.size(), 0.0);
        if (!w.unit)
            for (std::size_t i = 0; i < c2.size(); ++i) {
                const double a = svals[i] + w.cone.nu * traj[k].t + w.kappa;
                const double c = chi.chi(a);
                c2[i] = c * c;
                dc2[i] = 2.0 * c * chi.chi_deriv(a, 1) * w.cone.nu;
            }
        const double a1 = g.cell_volume() * kern::weighted_sum_sq(dc2, bu[k].phys());
        const Field lb = linear_term(bu[k], model);
        const Field nb = apply_B(nonlinear_term(traj[k].u, model), B);
        double a2 = 0.0, a3 = 0.0;
        for (std::size_t i = 0; i < c2.size(); ++i) {
            a2 += lb.phys()[i] * bu[k].phys()[i] * c2[i];
            a3 += nb.phys()[i] * bu[k].phys()[i] * c2[i];
        }
        a2 *= g.cell_volume();
        a3 *= g.cell_volume();
        res.push_back(dE - 0.5 * a1 + a2 + a3);
    }
    return res;
}

bool DiagnosticsReport::all_pass() const {
    for (const Verdict& v : verdicts)
        if (!v.pass) return false;
    return true;
}

}  // namespace ddl
