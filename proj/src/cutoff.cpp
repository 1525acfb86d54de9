#include "ddl/cutoff.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace ddl {

namespace {
constexpr double kEdge = 1e-6;

template <class T>
T step_expr(const T& z) {
    using std::exp;
    // f(z) / (f(z) + f(1-z)) with f(z) = exp(-1/z)
    T fz = exp(-1.0 / z);
    T fz1 = exp(-1.0 / (1.0 - z));
    return fz / (fz + fz1);
}
}  // namespace

double smooth_step(double z) {
    if (z <= kEdge) return 0.0;
    if (z >= 1.0 - kEdge) return 1.0;
    return step_expr(z);
}

Jet4 smooth_step_jet(double z) {
    if (z <= kEdge) return Jet4(0.0);
    if (z >= 1.0 - kEdge) return Jet4(1.0);
    return step_expr(Jet4::variable(z));
}

namespace {

constexpr int kTableN = 8192;
std::vector<double> s1_table;  // S1 at nodes i/kTableN
std::once_flag s1_once;

void build_table() {
    s1_table.resize(kTableN + 1);
    s1_table[0] = 0.0;
    const double h = 1.0 / kTableN;
    // Composite Simpson on each node interval (8 panels)
    for (int i = 0; i < kTableN; ++i) {
        const double a = i * h;
        double acc = 0.0;
        const int m = 8;
        const double hh = h / m;
        for (int p = 0; p < m; ++p) {
            const double x0 = a + p * hh;
            acc += (smooth_step(x0) + 4.0 * smooth_step(x0 + 0.5 * hh) +
                    smooth_step(x0 + hh)) * (hh / 6.0);
        }
        s1_table[i + 1] = s1_table[i] + acc;
    }
    // By symmetry the full integral is exactly 1/2; remove quadrature drift.
    const double corr = 0.5 - s1_table[kTableN];
    for (int i = 1; i <= kTableN; ++i)
        s1_table[i] += corr * (double(i) / kTableN);
}

}  // namespace

double smooth_step_integral(double zeta) {
    if (zeta <= 0.0) return 0.0;
    if (zeta >= 1.0) return zeta - 0.5;
    std::call_once(s1_once, build_table);
    const double t = zeta * kTableN;
    const int i = std::min(int(t), kTableN - 1);
    const double h = 1.0 / kTableN;
    const double x0 = i * h;
    const double u = (zeta - x0) / h;
    // Cubic Hermite with analytic endpoint slopes
    const double y0 = s1_table[i], y1 = s1_table[i + 1];
    const double d0 = smooth_step(x0) * h, d1 = smooth_step(x0 + h) * h;
    const double u2 = u * u, u3 = u2 * u;
    return (2 * u3 - 3 * u2 + 1) * y0 + (u3 - 2 * u2 + u) * d0 +
           (-2 * u3 + 3 * u2) * y1 + (u3 - u2) * d1;
}

CutoffFamily::CutoffFamily(double eps, double tau) : eps_(eps), tau_(tau) {
    if (!(eps > 0.0)) throw std::invalid_argument("cutoff: eps must be > 0");
    if (!(tau >= 5.0 * eps))
        throw std::invalid_argument("cutoff: tau >= 5*eps required");
}

double CutoffFamily::chi(double x) const {
    const double c = plateau();
    return c * eps_ * (smooth_step_integral((x - eps_) / eps_) -
                       smooth_step_integral((x - tau_ + eps_) / eps_));
}

double CutoffFamily::chi_deriv(double x, int j) const {
    if (j < 0 || j > 4) throw std::invalid_argument("chi derivative order in [0,4]");
    if (j == 0) return chi(x);
    const double c = plateau();
    const Jet4 up = smooth_step_jet((x - eps_) / eps_);
    const Jet4 dn = smooth_step_jet((x - tau_ + eps_) / eps_);
    const double scale = std::pow(eps_, -(j - 1));
    return c * (up.deriv(j - 1) - dn.deriv(j - 1)) * scale;
}

double CutoffFamily::psi(double x) const {
    return 1.0 - smooth_step((x - 0.25 * eps_) / (0.25 * eps_));
}

double CutoffFamily::phi(double x) const { return 1.0 - chi(x) - psi(x); }

}  // namespace ddl
