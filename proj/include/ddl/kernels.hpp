#ifndef DDL_KERNELS_HPP
#define DDL_KERNELS_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace ddl::kern {

using cplx = std::complex<double>;

// Data-parallel inner loops, OpenMP versions. Each kernel has a serial
// reference twin in ddl::kern::serial used by the unit tests and the
// benchmark target; the two must agree bitwise (the reductions use the
// same pairwise order) or to round-off where noted.

// spec[i] *= mult[i]
void mul_inplace(std::span<cplx> spec, std::span<const cplx> mult);

// out[i] = a[i] * b[i] (real pointwise product)
void mul_pointwise(std::span<const double> a, std::span<const double> b,
                   std::span<double> out);

// sum_i w[i] * u[i]^2  (weighted quadrature; caller multiplies by cell volume)
double weighted_sum_sq(std::span<const double> w, std::span<const double> u);

// sum_i a[i] * b[i]
double dot(std::span<const double> a, std::span<const double> b);

// Direct Kohn-Nirenberg sum: out[j] = (1/N) sum_k a(j,k) fhat[k] phase[j*K+k]
// with a supplied row-wise through the dense table `a` (size J*K).
void quantize_rows(std::size_t J, std::size_t K, std::span<const cplx> a,
                   std::span<const cplx> fhat, std::span<const cplx> phase,
                   std::span<cplx> out);

namespace serial {
void mul_inplace(std::span<cplx> spec, std::span<const cplx> mult);
void mul_pointwise(std::span<const double> a, std::span<const double> b,
                   std::span<double> out);
double weighted_sum_sq(std::span<const double> w, std::span<const double> u);
double dot(std::span<const double> a, std::span<const double> b);
void quantize_rows(std::size_t J, std::size_t K, std::span<const cplx> a,
                   std::span<const cplx> fhat, std::span<const cplx> phase,
                   std::span<cplx> out);
}  // namespace serial

}  // namespace ddl::kern

#endif
