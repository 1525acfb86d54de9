#ifndef DDL_CUTOFF_HPP
#define DDL_CUTOFF_HPP

#include "ddl/jet.hpp"

namespace ddl {

// C-infinity step: 0 for z <= 0, 1 for z >= 1, built from exp(-1/z).
// Symmetric: step(z) + step(1-z) = 1.
double smooth_step(double z);
Jet4 smooth_step_jet(double z);

// Antiderivative int_0^zeta step(w) dw, extended to the whole line
// (0 below, zeta - 1/2 above). Table-backed with Hermite interpolation;
// the derivative is the analytic step itself.
double smooth_step_integral(double zeta);

// Partition-of-unity triple chi, phi, psi on the line.
//
// chi ramps 0 -> 1 across [eps, tau]: chi' rises smoothly on [eps, 2 eps],
// holds the plateau value 1/(tau - 2 eps) on [2 eps, tau - eps], and falls
// on [tau - eps, tau]. psi is a reversed step supported in (-inf, eps/2];
// phi := 1 - chi - psi, so the partition holds identically.
class CutoffFamily {
  public:
    // Throws if eps <= 0 or tau < 5 eps.
    CutoffFamily(double eps, double tau);

    double eps() const { return eps_; }
    double tau() const { return tau_; }

    double chi(double x) const;
    double chi_deriv(double x, int j) const;  // j in [0, 4], analytic
    double phi(double x) const;
    double psi(double x) const;

    // chi' plateau height 1/(tau - 2 eps); lower bound used by property
    // tests: chi' >= plateau on [2 eps, tau - eps].
    double plateau() const { return 1.0 / (tau_ - 2.0 * eps_); }

  private:
    double eps_, tau_;
};

}  // namespace ddl

#endif
