#ifndef DDL_FFT_HPP
#define DDL_FFT_HPP

#include <complex>
#include <vector>

#include "ddl/grid.hpp"

namespace ddl {

using cvec = std::vector<std::complex<double>>;

// Unnormalized forward DFT (row-major, matching Grid layout).
cvec fft_forward(const Grid& g, const cvec& in);

// Inverse DFT including the 1/N normalization.
cvec fft_backward(const Grid& g, const cvec& in);

}  // namespace ddl

#endif
