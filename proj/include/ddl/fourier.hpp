#ifndef DDL_FOURIER_HPP
#define DDL_FOURIER_HPP

#include <array>
#include <functional>

#include "ddl/field.hpp"

namespace ddl {

enum class Model { ZK, KdV };

inline constexpr int kMaxDerivativeOrder = 6;

// Multi-index; unused trailing components are zero for 1d grids.
using MultiIndex = std::array<int, 2>;

// Apply a scalar multiplier m(xi) mode by mode.
Field apply_multiplier(const Field& f,
                       const std::function<std::complex<double>(const std::array<double, 2>&)>& m);

// Bessel potential J^s = (1 - Laplacian)^{s/2}: multiplier (1+|xi|^2)^{s/2}.
Field apply_bessel(const Field& f, double s);

// Spectral derivative d^beta; exact for band-limited fields. The Nyquist
// mode is zeroed for odd orders. Throws if |beta| exceeds the order cap.
Field apply_derivative(const Field& f, const MultiIndex& beta);

// Exact linear group S(t).
//
// Sign convention (pinned by a single-mode unit test): the equations solved
// are  d_t u + d_x1 Lap u = 0 (ZK)  and  d_t u + d_x^3 u = 0 (KdV), so each
// mode advances by  exp(i xi1 |xi|^2 t)  resp.  exp(i xi^3 t).
Field linear_propagate(const Field& f, double t, Model model);

// 2/3-rule dealias mask applied in place to a spectrum.
void dealias_spectrum(const Grid& g, cvec& spec);

}  // namespace ddl

#endif
