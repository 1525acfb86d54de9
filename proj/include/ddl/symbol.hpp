#ifndef DDL_SYMBOL_HPP
#define DDL_SYMBOL_HPP

#include <complex>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ddl/cutoff.hpp"

namespace ddl {

using cplx = std::complex<double>;

// Weighted symbol a(x, xi) of declared order (m, q): the class bound is
//   |d^alpha_x d^beta_xi a| <= c <sigma.x + omega>^{q-|alpha|} <xi>^{m-|beta|}.
//
// Convention note: symbols are evaluated at the angular wavenumbers used by
// the spectral core (xi = 2 pi k / L). Formulas stated for the e^{2 pi i x.zeta}
// quantization transfer verbatim under zeta = xi / (2 pi); in particular the
// composition coefficient 1/((2 pi i)^{|beta|} beta!) in zeta becomes
// 1/(i^{|beta|} beta!) in xi.
struct Symbol {
    std::string name;
    double m = 0.0;
    double q = 0.0;
    std::vector<double> sigma;  // empty when a is x-independent
    double omega = 0.0;

    // a(x, xi); x and xi point at `dim` doubles
    std::function<cplx(const double* x, const double* xi, int dim)> eval;

    // Analytic mixed partial d^alpha_x d^beta_xi a for |alpha|, |beta| <= 3.
    // Null for user symbols; callers then fall back to centered differences.
    std::function<cplx(const double* x, const double* xi, int dim,
                       const int* alpha, const int* beta)>
        deriv;
};

// Catalog
Symbol symbol_one();
Symbol symbol_bessel(double m);                                   // <xi>^m
Symbol symbol_bracket_x(double q, std::vector<double> sigma,      // <sigma.x+omega>^q
                        double omega);
Symbol symbol_product(double m, double q, std::vector<double> sigma,
                      double omega);                              // <sigma.x+omega>^q <xi>^m
Symbol symbol_cutoff_product(double m, double q, std::vector<double> sigma,
                             double omega, double eps, double tau);
// ids: one, bessel, bracket-x, product, cutoff-product (throws on unknown id)
Symbol symbol_from_catalog(const std::string& id, double m, double q,
                           std::vector<double> sigma, double omega);

// Mixed partial of a symbol: analytic route when available, otherwise nested
// centered differences with steps hx (in x) and hxi (in xi).
cplx symbol_deriv(const Symbol& a, const double* x, const double* xi, int dim,
                  const int* alpha, const int* beta, double hx, double hxi);

}  // namespace ddl

#endif
