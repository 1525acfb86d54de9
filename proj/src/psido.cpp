#include "ddl/psido.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ddl/kernels.hpp"

namespace ddl {

namespace {

constexpr double kFallbackStep = 1e-2;  // FD step for symbols without a.deriv

std::vector<MultiIndex> multi_indices(int dim, int max_total) {
    std::vector<MultiIndex> out;
    if (dim == 1) {
        for (int a = 0; a <= max_total; ++a) out.push_back({a, 0});
    } else {
        for (int t = 0; t <= max_total; ++t)
            for (int a0 = t; a0 >= 0; --a0) out.push_back({a0, t - a0});
    }
    return out;
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

cplx inv_i_pow(int k) {
    // 1 / i^k = (-i)^k
    switch (k & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, -1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, 1.0};
    }
}

cplx i_pow(int k) {
    switch (k & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

double bracket_of(double u) { return std::sqrt(1.0 + u * u); }

Field weight_field(GridPtr grid, const std::vector<double>& sigma, double omega,
                   double p) {
    if (grid->dim() == 1) {
        const double s0 = sigma.empty() ? 0.0 : sigma[0];
        return Field::sample(grid, [&](double x) {
            return std::pow(bracket_of(s0 * x + omega), p);
        });
    }
    const double s0 = sigma.empty() ? 0.0 : sigma[0];
    const double s1 = sigma.size() > 1 ? sigma[1] : 0.0;
    return Field::sample(grid, [&](double x0, double x1) {
        return std::pow(bracket_of(s0 * x0 + s1 * x1 + omega), p);
    });
}

}  // namespace

cvec quantize_apply_c(const Symbol& a, const Field& f) {
    const Grid& g = *f.grid();
    const std::size_t K = g.size();
    const cvec& fhat = f.spectral();

    const int n0 = g.points(0);
    const int n1 = g.dim() == 2 ? g.points(1) : 1;

    // per-axis twiddles e^{2 pi i j k / n}
    auto twiddle = [](int n) {
        cvec t(std::size_t(n) * n);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const double ph = 2.0 * M_PI * double((long long)j * k % n) / n;
                t[std::size_t(j) * n + k] = {std::cos(ph), std::sin(ph)};
            }
        return t;
    };
    const cvec t0 = twiddle(n0);
    const cvec t1 = g.dim() == 2 ? twiddle(n1) : cvec{};

    cvec out(K);
    const std::size_t chunk = std::max<std::size_t>(1, (1 << 22) / std::max<std::size_t>(K, 1));
    cvec atab(chunk * K), ptab(chunk * K);
    for (std::size_t row0 = 0; row0 < K; row0 += chunk) {
        const std::size_t rows = std::min(chunk, K - row0);
        for (std::size_t r = 0; r < rows; ++r) {
            const std::size_t j = row0 + r;
            const int j0 = int(j / n1), j1 = int(j % n1);
            double x[2] = {g.coord(0, j0),
                           g.dim() == 2 ? g.coord(1, j1) : 0.0};
            for (std::size_t k = 0; k < K; ++k) {
                const int k0 = int(k / n1), k1 = int(k % n1);
                double xi[2] = {g.wavenumbers(0)[k0],
                                g.dim() == 2 ? g.wavenumbers(1)[k1] : 0.0};
                atab[r * K + k] = a.eval(x, xi, g.dim());
                cplx ph = t0[std::size_t(j0) * n0 + k0];
                if (g.dim() == 2) ph *= t1[std::size_t(j1) * n1 + k1];
                ptab[r * K + k] = ph;
            }
        }
        kern::quantize_rows(rows, K, atab, fhat, ptab,
                            std::span<cplx>(out.data() + row0, rows));
    }
    return out;
}

Field quantize_apply(const Symbol& a, const Field& f) {
    cvec c = quantize_apply_c(a, f);
    std::vector<double> re(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) re[i] = c[i].real();
    return Field(f.grid(), std::move(re));
}

double cnorm(const Grid& g, const cvec& u) {
    double s = 0.0;
    for (const cplx& v : u) s += std::norm(v);
    return std::sqrt(g.cell_volume() * s);
}

SeminormTable class_seminorms(const Symbol& a, const Grid& g, int max_order) {
    if (max_order < 0 || max_order > 3)
        throw std::invalid_argument("class_seminorms: max_order in [0,3]");
    const int dim = g.dim();
    const double hx = g.spacing(0);
    const double hxi = 2.0 * M_PI / g.box_length(0);

    // subsample the (x, xi) product scan to keep it affordable in 2d
    const int target = dim == 1 ? 128 : 12;
    std::vector<std::vector<int>> xs(dim), ks(dim);
    for (int ax = 0; ax < dim; ++ax) {
        const int n = g.points(ax);
        const int stride = std::max(1, n / target);
        for (int j = 0; j < n; j += stride) {
            xs[ax].push_back(j);
            ks[ax].push_back(j);
        }
    }

    const auto alphas = multi_indices(dim, max_order);
    SeminormTable table;
    constexpr int kBins = 8;

    for (const auto& alpha : alphas) {
        for (const auto& beta : alphas) {
            SeminormEntry e;
            e.alpha = alpha;
            e.beta = beta;
            const int ta = alpha[0] + alpha[1], tb = beta[0] + beta[1];
            std::array<double, kBins> binmax{};
            std::array<bool, kBins> seen{};
            double bximax = 1.0;
            for (int ax = 0; ax < dim; ++ax) {
                const double top = std::abs(g.wavenumbers(ax)[g.points(ax) / 2]);
                bximax = std::max(bximax, bracket_of(top * std::sqrt(double(dim))));
            }
            auto scan_xi = [&](const double* x, double wx) {
                const int n1k = dim == 2 ? int(ks[1].size()) : 1;
                for (std::size_t i0 = 0; i0 < ks[0].size(); ++i0)
                    for (int i1 = 0; i1 < n1k; ++i1) {
                        double xi[2] = {g.wavenumbers(0)[ks[0][i0]], 0.0};
                        if (dim == 2) xi[1] = g.wavenumbers(1)[ks[1][i1]];
                        const double bxi =
                            bracket_of(std::sqrt(xi[0] * xi[0] + xi[1] * xi[1]));
                        const double wxi = std::pow(bxi, a.m - tb);
                        const cplx d = symbol_deriv(a, x, xi, dim, alpha.data(),
                                                    beta.data(), hx, hxi);
                        const double ratio = std::abs(d) / (wx * wxi);
                        int b = int(kBins * (bxi - 1.0) / (bximax - 1.0 + 1e-300));
                        b = std::clamp(b, 0, kBins - 1);
                        binmax[b] = std::max(binmax[b], ratio);
                        seen[b] = true;
                        e.c = std::max(e.c, ratio);
                    }
            };
            const int n1x = dim == 2 ? int(xs[1].size()) : 1;
            for (std::size_t i0 = 0; i0 < xs[0].size(); ++i0)
                for (int i1 = 0; i1 < n1x; ++i1) {
                    double x[2] = {g.coord(0, xs[0][i0]), 0.0};
                    if (dim == 2) x[1] = g.coord(1, xs[1][i1]);
                    double u = a.omega;
                    for (int i = 0; i < dim && i < int(a.sigma.size()); ++i)
                        u += a.sigma[i] * x[i];
                    const double wx = std::pow(bracket_of(u), a.q - ta);
                    scan_xi(x, wx);
                }
            // divergence: the shell maxima keep climbing toward the boundary
            std::vector<double> shells;
            for (int b = 0; b < kBins; ++b)
                if (seen[b]) shells.push_back(binmax[b]);
            if (shells.size() >= 4) {
                const std::size_t half = shells.size() / 2;
                bool inc = true;
                for (std::size_t i = half; i + 1 < shells.size(); ++i)
                    if (shells[i + 1] <= shells[i]) inc = false;
                if (inc && shells.back() > 1.3 * shells[half]) e.divergent = true;
            }
            table.any_divergent = table.any_divergent || e.divergent;
            table.entries.push_back(e);
        }
    }
    return table;
}

Symbol compose_expansion(const Symbol& a, const Symbol& b, int N) {
    if (N < 1 || N > 4)
        throw std::invalid_argument("compose_expansion: N in [1,4]");
    Symbol c;
    c.name = a.name + "#" + b.name;
    c.m = a.m + b.m;
    c.q = a.q + b.q;
    c.sigma = a.sigma.empty() ? b.sigma : a.sigma;
    c.omega = a.sigma.empty() ? b.omega : a.omega;
    c.eval = [a, b, N](const double* x, const double* xi, int dim) {
        static const int zero[2] = {0, 0};
        cplx s{0.0, 0.0};
        for (const auto& beta : multi_indices(dim, N - 1)) {
            const int k = beta[0] + beta[1];
            const cplx coeff =
                inv_i_pow(k) / (factorial(beta[0]) * factorial(beta[1]));
            const cplx da = symbol_deriv(a, x, xi, dim, zero, beta.data(),
                                         kFallbackStep, kFallbackStep);
            const cplx db = symbol_deriv(b, x, xi, dim, beta.data(), zero,
                                         kFallbackStep, kFallbackStep);
            s += coeff * da * db;
        }
        return s;
    };
    return c;
}

Multiplier multiplier_constant(double c) {
    Multiplier g;
    g.eval = [c](const double*, int) { return c; };
    g.deriv = [c](const double*, int dim, const int* alpha) {
        int t = 0;
        for (int i = 0; i < dim; ++i) t += alpha[i];
        return t == 0 ? c : 0.0;
    };
    return g;
}

Multiplier multiplier_cutoff(double eps, double tau, std::vector<double> sigma,
                             double omega) {
    auto cf = std::make_shared<CutoffFamily>(eps, tau);
    Multiplier g;
    g.eval = [cf, sigma, omega](const double* x, int dim) {
        double u = omega;
        for (int i = 0; i < dim && i < int(sigma.size()); ++i) u += sigma[i] * x[i];
        return cf->chi(u);
    };
    g.deriv = [cf, sigma, omega](const double* x, int dim, const int* alpha) {
        double u = omega;
        int t = 0;
        double sp = 1.0;
        for (int i = 0; i < dim && i < int(sigma.size()); ++i) {
            u += sigma[i] * x[i];
            t += alpha[i];
            for (int cnt = 0; cnt < alpha[i]; ++cnt) sp *= sigma[i];
        }
        return sp * cf->chi_deriv(u, t);
    };
    return g;
}

Field sample_multiplier(const Multiplier& g, GridPtr grid) {
    if (grid->dim() == 1)
        return Field::sample(grid, [&](double x) { return g.eval(&x, 1); });
    return Field::sample(grid, [&](double x0, double x1) {
        double x[2] = {x0, x1};
        return g.eval(x, 2);
    });
}

Field sample_multiplier_deriv(const Multiplier& g, GridPtr grid,
                              const MultiIndex& alpha) {
    if (grid->dim() == 1)
        return Field::sample(grid, [&](double x) {
            return g.deriv(&x, 1, alpha.data());
        });
    return Field::sample(grid, [&](double x0, double x1) {
        double x[2] = {x0, x1};
        return g.deriv(x, 2, alpha.data());
    });
}

CommutatorFactorization commutator_factorize(const Multiplier& g, const Symbol& a,
                                             int N,
                                             const std::vector<Field>& ensemble) {
    if (N < 1 || N > 4)
        throw std::invalid_argument("commutator_factorize: N in [1,4]");
    CommutatorFactorization out;
    out.N = N;

    for (int k = 1; k < N; ++k) {
        // correction_k f = sum_{|beta|=k} i^k/beta! Psi_{d^beta_xi a}(d^beta g f).
        // The i^k/beta! come from inverting the composition series: expanding
        // each Psi_{d^beta a}(d^beta g .) by the product rule and demanding
        // that all mixed terms up to order N cancel yields the coefficients
        // of e^{-z/i}.
        out.corrections.push_back([g, a, k](const Field& f) {
            const GridPtr grid = f.grid();
            const int dim = grid->dim();
            cvec acc(grid->size(), {0.0, 0.0});
            for (const auto& beta : multi_indices(dim, k)) {
                if (beta[0] + beta[1] != k) continue;
                const cplx coeff = i_pow(k) /
                                   (factorial(beta[0]) * factorial(beta[1]));
                Symbol da;
                da.m = a.m - k;
                da.eval = [a, beta](const double* x, const double* xi, int d) {
                    static const int zero[2] = {0, 0};
                    return symbol_deriv(a, x, xi, d, zero, beta.data(),
                                        kFallbackStep, kFallbackStep);
                };
                const Field gf = sample_multiplier_deriv(g, grid, beta)
                                     .pointwise_mul(f);
                const cvec term = quantize_apply_c(da, gf);
                for (std::size_t i = 0; i < acc.size(); ++i)
                    acc[i] += coeff * term[i];
            }
            return acc;
        });
    }

    auto corrections = out.corrections;
    out.remainder = [g, a, corrections](const Field& f) {
        const GridPtr grid = f.grid();
        const Field gs = sample_multiplier(g, grid);
        cvec lhs = quantize_apply_c(a, f);  // g * Psi_a f
        for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] *= gs.phys()[i];
        const cvec mid = quantize_apply_c(a, gs.pointwise_mul(f));
        for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] -= mid[i];
        for (const auto& corr : corrections) {
            const cvec c = corr(f);
            for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] -= c[i];
        }
        return lhs;
    };

    double bound = 0.0;
    for (const Field& f : ensemble) {
        const cvec r = out.remainder(f);
        const double nf = f.l2_norm();
        if (nf > 0.0) bound = std::max(bound, cnorm(*f.grid(), r) / nf);
    }
    out.remainder_bound = bound;
    return out;
}

InterpReport interpolation_check(const Field& f, double a, double b, double theta,
                                 const std::vector<double>& sigma, double omega) {
    if (!(a > 0.0) || !(b > 0.0) || !(theta > 0.0) || !(theta < 1.0))
        throw std::invalid_argument("interpolation_check: need a,b>0, theta in (0,1)");
    const GridPtr grid = f.grid();
    InterpReport rep;
    rep.lhs = weight_field(grid, sigma, omega, theta * b)
                  .pointwise_mul(apply_bessel(f, (1.0 - theta) * a))
                  .l2_norm();
    const double wb = weight_field(grid, sigma, omega, b).pointwise_mul(f).l2_norm();
    const double ja = apply_bessel(f, a).l2_norm();
    rep.rhs = std::pow(wb, theta) * std::pow(ja, 1.0 - theta);
    rep.ratio = rep.rhs > 0.0 ? rep.lhs / rep.rhs : 0.0;
    return rep;
}

double continuity_ratio(const Symbol& a, const Field& f) {
    const double num = cnorm(*f.grid(), quantize_apply_c(a, f));
    const double den = weight_field(f.grid(), a.sigma, a.omega, a.q)
                           .pointwise_mul(apply_bessel(f, a.m))
                           .l2_norm();
    return den > 0.0 ? num / den : 0.0;
}

}  // namespace ddl
