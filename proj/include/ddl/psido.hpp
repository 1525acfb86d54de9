#ifndef DDL_PSIDO_HPP
#define DDL_PSIDO_HPP

#include <functional>
#include <vector>

#include "ddl/field.hpp"
#include "ddl/fourier.hpp"
#include "ddl/symbol.hpp"

namespace ddl {

// Kohn-Nirenberg quantization on the grid:
//   (Psi_a f)(x_j) = (1/N) sum_k a(x_j, xi_k) fhat_k e^{2 pi i j.k / n}.
// For x-independent a this is the Fourier multiplier a(xi); for
// xi-independent a it is pointwise multiplication by a(x).
//
// Odd symbols map real fields to genuinely complex ones, so the primitive
// returns complex physical samples; quantize_apply takes the real part
// (exact up to round-off for the even catalog symbols).
cvec quantize_apply_c(const Symbol& a, const Field& f);
Field quantize_apply(const Symbol& a, const Field& f);

// L2 norm of complex samples, sqrt(cell volume * sum |u|^2)
double cnorm(const Grid& g, const cvec& u);

struct SeminormEntry {
    MultiIndex alpha{0, 0};
    MultiIndex beta{0, 0};
    double c = 0.0;       // sup over the scan of |D^alpha_x D^beta_xi a| / weight
    bool divergent = false;
};

struct SeminormTable {
    std::vector<SeminormEntry> entries;
    bool any_divergent = false;
};

// Estimate class-membership constants with centered finite differences
// (steps: grid spacing in x, mode spacing in xi). An entry is flagged
// divergent when its ratio keeps growing toward the xi grid boundary.
SeminormTable class_seminorms(const Symbol& a, const Grid& g, int max_order);

// Truncated composition c_N = sum_{|beta|<N} 1/(i^{|beta|} beta!)
// (d^beta_xi a)(d^beta_x b); remainder Psi_a Psi_b - Psi_{c_N} drops by one
// class order per term. N in [1, 4].
Symbol compose_expansion(const Symbol& a, const Symbol& b, int N);

// Smooth x-function with analytic derivatives, used as the outer factor in
// the commutator factorization.
struct Multiplier {
    std::function<double(const double* x, int dim)> eval;
    std::function<double(const double* x, int dim, const int* alpha)> deriv;
};

Multiplier multiplier_constant(double c);
// chi(sigma.x + omega) from the cutoff family
Multiplier multiplier_cutoff(double eps, double tau, std::vector<double> sigma,
                             double omega);

Field sample_multiplier(const Multiplier& g, GridPtr grid);
Field sample_multiplier_deriv(const Multiplier& g, GridPtr grid,
                              const MultiIndex& alpha);

// Factorization g Psi_a f = Psi_a(g f) + sum_{1<=|beta|<N} corrections + K_N f
// with correction_beta f = -1/(i^{|beta|} beta!) Psi_{d^beta_xi a}(d^beta g f).
struct CommutatorFactorization {
    int N = 1;
    std::vector<std::function<cvec(const Field&)>> corrections;  // by k=1..N-1
    std::function<cvec(const Field&)> remainder;
    double remainder_bound = 0.0;  // max ||K_N f|| / ||f|| over the ensemble
};

CommutatorFactorization commutator_factorize(const Multiplier& g, const Symbol& a,
                                             int N,
                                             const std::vector<Field>& ensemble);

// ||<sigma.x+omega>^{theta b} J^{(1-theta)a} f||  vs
// ||<sigma.x+omega>^b f||^theta ||J^a f||^{1-theta}
struct InterpReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};

InterpReport interpolation_check(const Field& f, double a, double b, double theta,
                                 const std::vector<double>& sigma, double omega);

// ||Psi_a f|| / ||<sigma.x+omega>^q J^m f||
double continuity_ratio(const Symbol& a, const Field& f);

}  // namespace ddl

#endif
