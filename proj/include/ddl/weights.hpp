#ifndef DDL_WEIGHTS_HPP
#define DDL_WEIGHTS_HPP

#include <memory>
#include <vector>

#include "ddl/cone.hpp"
#include "ddl/cutoff.hpp"
#include "ddl/jet.hpp"

namespace ddl {

// Moving polynomial weight <sigma.x + nu t + kappa>^r chi(sigma.x + nu t + kappa).
struct PolyWeight {
    double r = 0.0;
    std::shared_ptr<const CutoffFamily> cutoff;
    ConeVector cone;

    // Evaluate at weight argument z = sigma.x + nu t + kappa.
    double eval_arg(double z) const;
    double eval(const std::vector<double>& x, double t) const;
    double arg(const std::vector<double>& x, double t) const {
        return cone.dot(x) + cone.nu * t + cone.kappa;
    }
};

// Bounded surrogates for e^{bx}:
//   q_eta = e^{bx} (1 + eta e^{2bx})^{-1/2}
//   rho_eta = e^{bx} (1 + eta e^{2bx})^{-1}
//   p_eta = q_eta^2
// For eta = 0 these reduce to the exact exponential. Evaluation is
// overflow-safe for large bx when eta > 0.
struct ExpWeightFamily {
    double b = 1.0;
    double eta = 0.0;

    ExpWeightFamily(double b_, double eta_);

    double q(double x) const;
    double rho(double x) const;
    double p(double x) const;
    double p_deriv(double x, int j) const;  // j in [0, 3], analytic
};

// Smooth saturating replacement for <x>:
//   w_N(x) = <x> for |x| <= N, 2N for |x| >= 3N, nondecreasing,
//   |w_N'| <= 1, higher derivatives bounded uniformly in N.
struct TruncatedWeight {
    int N = 1;
    int dim = 1;

    TruncatedWeight(int N_, int dim_);

    // 1d radial profile and its derivatives (order <= 3).
    double radial(double t) const;
    double radial_deriv(double t, int j) const;

    double eval(const std::vector<double>& x) const;

  private:
    Jet<3> radial_jet(double t) const;
    double a_, b0_, theta_;  // <N>, <3N>, plateau fraction
};

PolyWeight make_poly_weight(double r, double eps, double tau, ConeVector cone);
ExpWeightFamily exp_weight_family(double b, double eta);
TruncatedWeight truncated_weight(int N, int dim);

}  // namespace ddl

#endif
