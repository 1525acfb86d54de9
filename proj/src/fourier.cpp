#include "ddl/fourier.hpp"

#include <cmath>
#include <stdexcept>

#include "ddl/kernels.hpp"

namespace ddl {

namespace {

// Build the multiplier table over all modes and apply it.
Field apply_table(const Field& f,
                  const std::function<std::complex<double>(double, double)>& m) {
    const Grid& g = *f.grid();
    cvec spec = f.spectral();
    cvec mult(g.size());
    const auto& xi0 = g.wavenumbers(0);
    if (g.dim() == 1) {
        for (int k = 0; k < g.points(0); ++k) mult[k] = m(xi0[k], 0.0);
    } else {
        const auto& xi1 = g.wavenumbers(1);
        for (int k0 = 0; k0 < g.points(0); ++k0)
            for (int k1 = 0; k1 < g.points(1); ++k1)
                mult[g.index(k0, k1)] = m(xi0[k0], xi1[k1]);
    }
    kern::mul_inplace(spec, mult);
    return Field::from_spectral(f.grid(), spec);
}

}  // namespace

Field apply_multiplier(
    const Field& f,
    const std::function<std::complex<double>(const std::array<double, 2>&)>& m) {
    return apply_table(f, [&](double a, double b) {
        return m(std::array<double, 2>{a, b});
    });
}

Field apply_bessel(const Field& f, double s) {
    if (!f.finite()) throw std::invalid_argument("apply_bessel: non-finite input");
    if (s == 0.0) return f;
    return apply_table(f, [s](double x0, double x1) {
        return std::complex<double>(std::pow(1.0 + x0 * x0 + x1 * x1, 0.5 * s), 0.0);
    });
}

Field apply_derivative(const Field& f, const MultiIndex& beta) {
    const int order = beta[0] + beta[1];
    if (beta[0] < 0 || beta[1] < 0 || order > kMaxDerivativeOrder)
        throw std::invalid_argument("derivative order outside [0, 6]");
    if (order == 0) return f;
    const Grid& g = *f.grid();
    // Odd derivatives have no real-valued counterpart at the Nyquist mode.
    std::array<double, 2> nyq{g.wavenumbers(0)[g.points(0) / 2],
                              g.dim() == 2 ? g.wavenumbers(1)[g.points(1) / 2] : 0.0};
    return apply_table(f, [&](double x0, double x1) -> std::complex<double> {
        if ((beta[0] % 2 == 1 && x0 == nyq[0]) ||
            (beta[1] % 2 == 1 && x1 == nyq[1]))
            return {0.0, 0.0};
        std::complex<double> m{1.0, 0.0};
        const std::complex<double> i0{0.0, x0}, i1{0.0, x1};
        for (int k = 0; k < beta[0]; ++k) m *= i0;
        for (int k = 0; k < beta[1]; ++k) m *= i1;
        return m;
    });
}

Field linear_propagate(const Field& f, double t, Model model) {
    const Grid& g = *f.grid();
    if (model == Model::ZK && g.dim() != 2)
        throw std::invalid_argument("ZK linear group needs a 2d grid");
    if (model == Model::KdV && g.dim() != 1)
        throw std::invalid_argument("KdV linear group needs a 1d grid");
    return apply_table(f, [&](double x0, double x1) {
        const double phase = (model == Model::KdV)
                                 ? x0 * x0 * x0 * t
                                 : x0 * (x0 * x0 + x1 * x1) * t;
        return std::complex<double>(std::cos(phase), std::sin(phase));
    });
}

void dealias_spectrum(const Grid& g, cvec& spec) {
    for (int a = 0; a < g.dim(); ++a) {
        const int n = g.points(a);
        const int keep = n / 3;  // retain |k| <= N/3
        if (g.dim() == 1) {
            for (int k = 0; k < n; ++k) {
                int kk = (k < n / 2) ? k : k - n;
                if (std::abs(kk) > keep) spec[k] = 0.0;
            }
        } else {
            for (int k0 = 0; k0 < g.points(0); ++k0)
                for (int k1 = 0; k1 < g.points(1); ++k1) {
                    int k = (a == 0) ? k0 : k1;
                    int kk = (k < n / 2) ? k : k - n;
                    if (std::abs(kk) > keep) spec[g.index(k0, k1)] = 0.0;
                }
        }
    }
}

}  // namespace ddl
