#include "ddl/weights.hpp"

#include <cmath>
#include <stdexcept>

namespace ddl {

double PolyWeight::eval_arg(double z) const {
    const double c = cutoff->chi(z);
    if (c == 0.0) return 0.0;
    return std::pow(std::sqrt(1.0 + z * z), r) * c;
}

double PolyWeight::eval(const std::vector<double>& x, double t) const {
    return eval_arg(arg(x, t));
}

ExpWeightFamily::ExpWeightFamily(double b_, double eta_) : b(b_), eta(eta_) {
    if (!(b > 0.0)) throw std::invalid_argument("exp weight: b must be > 0");
    if (eta < 0.0) throw std::invalid_argument("exp weight: eta must be >= 0");
}

double ExpWeightFamily::q(double x) const {
    if (eta == 0.0) return std::exp(b * x);
    // e^{bx}/sqrt(1+eta e^{2bx}) = 1/sqrt(e^{-2bx} + eta)
    return 1.0 / std::sqrt(std::exp(-2.0 * b * x) + eta);
}

double ExpWeightFamily::rho(double x) const {
    if (eta == 0.0) return std::exp(b * x);
    return std::exp(-b * x) / (std::exp(-2.0 * b * x) + eta);
}

double ExpWeightFamily::p(double x) const {
    if (eta == 0.0) return std::exp(2.0 * b * x);
    return 1.0 / (std::exp(-2.0 * b * x) + eta);
}

double ExpWeightFamily::p_deriv(double x, int j) const {
    if (j < 0 || j > 3) throw std::invalid_argument("p derivative order in [0,3]");
    if (j == 0) return p(x);
    auto xv = Jet<3>::variable(x);
    Jet<3> pj;
    if (eta == 0.0)
        pj = exp(xv * (2.0 * b));
    else
        pj = inv(exp(xv * (-2.0 * b)) + eta);
    return pj.deriv(j);
}

TruncatedWeight::TruncatedWeight(int N_, int dim_) : N(N_), dim(dim_) {
    if (N < 1) throw std::invalid_argument("truncated weight: N >= 1");
    a_ = std::sqrt(1.0 + double(N) * N);
    b0_ = std::sqrt(1.0 + 9.0 * double(N) * N);
    theta_ = (2.0 * N - a_) / (b0_ - a_);
}

namespace {
// int_0^zeta step((A - u)/w) du = w * (S1(A/w) - S1((A - zeta)/w))
double ramp_integral(double A, double w, double zeta) {
    return w * (smooth_step_integral(A / w) - smooth_step_integral((A - zeta) / w));
}
}  // namespace

Jet<3> TruncatedWeight::radial_jet(double t) const {
    // w(t) = F(<t>) with F the identity smoothly saturating at 2N
    auto tv = Jet<3>::variable(t);
    auto y = bracket(tv);  // <t>
    if (y.value() <= a_) return y;
    if (y.value() >= b0_) return Jet<3>(2.0 * N);

    const double span = b0_ - a_;
    const double A = theta_ + 0.25, w = 0.5;
    // F(y) = a + span * I((y-a)/span), I' = step((A - zeta)/w)
    auto zeta = (y - a_) / span;
    // value of I via the table, derivatives via the analytic step
    const double Ival = ramp_integral(A, w, zeta.value());
    Jet4 sj = smooth_step_jet((A - zeta.value()) / w);
    // Chain I(zeta) as a Taylor series in zeta around zeta0
    std::array<double, 4> g;
    g[0] = Ival;
    g[1] = sj.deriv(0);
    g[2] = -sj.deriv(1) / w / 2.0;
    g[3] = sj.deriv(2) / (w * w) / 6.0;
    auto I = compose(g, zeta);
    return I * span + a_;
}

double TruncatedWeight::radial(double t) const { return radial_jet(t).value(); }

double TruncatedWeight::radial_deriv(double t, int j) const {
    if (j < 0 || j > 3) throw std::invalid_argument("radial derivative order in [0,3]");
    return radial_jet(t).deriv(j);
}

double TruncatedWeight::eval(const std::vector<double>& x) const {
    double s = 0.0;
    for (double v : x) s += v * v;
    return radial(std::sqrt(s));
}

PolyWeight make_poly_weight(double r, double eps, double tau, ConeVector cone) {
    if (r < 0.0) throw std::invalid_argument("poly weight: r >= 0");
    validate_cone(cone);
    PolyWeight w;
    w.r = r;
    w.cutoff = std::make_shared<CutoffFamily>(eps, tau);
    w.cone = std::move(cone);
    return w;
}

ExpWeightFamily exp_weight_family(double b, double eta) {
    return ExpWeightFamily(b, eta);
}

TruncatedWeight truncated_weight(int N, int dim) {
    return TruncatedWeight(N, dim);
}

}  // namespace ddl
