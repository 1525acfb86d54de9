#include "ddl/kernels.hpp"

#include <omp.h>

namespace ddl::kern {

namespace {
constexpr std::size_t kChunk = 4096;

// Chunked accumulation: partial sums over fixed 4096-element blocks combined
// in block order, so serial and OpenMP results are bitwise identical.
template <class F>
double chunked_sum(std::size_t n, F&& block_sum, bool parallel) {
    const std::size_t nb = (n + kChunk - 1) / kChunk;
    std::vector<double> partial(nb, 0.0);
#pragma omp parallel for schedule(static) if (parallel)
    for (long long b = 0; b < (long long)nb; ++b) {
        const std::size_t lo = b * kChunk;
        const std::size_t hi = std::min(n, lo + kChunk);
        partial[b] = block_sum(lo, hi);
    }
    double s = 0.0;
    for (double p : partial) s += p;
    return s;
}
}  // namespace

void mul_inplace(std::span<cplx> spec, std::span<const cplx> mult) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < (long long)spec.size(); ++i) spec[i] *= mult[i];
}

void mul_pointwise(std::span<const double> a, std::span<const double> b,
                   std::span<double> out) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < (long long)a.size(); ++i) out[i] = a[i] * b[i];
}

double weighted_sum_sq(std::span<const double> w, std::span<const double> u) {
    return chunked_sum(
        u.size(),
        [&](std::size_t lo, std::size_t hi) {
            double s = 0.0;
            for (std::size_t i = lo; i < hi; ++i) s += w[i] * u[i] * u[i];
            return s;
        },
        true);
}

double dot(std::span<const double> a, std::span<const double> b) {
    return chunked_sum(
        a.size(),
        [&](std::size_t lo, std::size_t hi) {
            double s = 0.0;
            for (std::size_t i = lo; i < hi; ++i) s += a[i] * b[i];
            return s;
        },
        true);
}

void quantize_rows(std::size_t J, std::size_t K, std::span<const cplx> a,
                   std::span<const cplx> fhat, std::span<const cplx> phase,
                   std::span<cplx> out) {
    const double inv = 1.0 / double(K);
#pragma omp parallel for schedule(static)
    for (long long j = 0; j < (long long)J; ++j) {
        cplx s{0.0, 0.0};
        const cplx* arow = a.data() + j * K;
        const cplx* prow = phase.data() + j * K;
        for (std::size_t k = 0; k < K; ++k) s += arow[k] * fhat[k] * prow[k];
        out[j] = s * inv;
    }
}

namespace serial {

void mul_inplace(std::span<cplx> spec, std::span<const cplx> mult) {
    for (std::size_t i = 0; i < spec.size(); ++i) spec[i] *= mult[i];
}

void mul_pointwise(std::span<const double> a, std::span<const double> b,
                   std::span<double> out) {
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
}

double weighted_sum_sq(std::span<const double> w, std::span<const double> u) {
    return chunked_sum(
        u.size(),
        [&](std::size_t lo, std::size_t hi) {
            double s = 0.0;
            for (std::size_t i = lo; i < hi; ++i) s += w[i] * u[i] * u[i];
            return s;
        },
        false);
}

double dot(std::span<const double> a, std::span<const double> b) {
    return chunked_sum(
        a.size(),
        [&](std::size_t lo, std::size_t hi) {
            double s = 0.0;
            for (std::size_t i = lo; i < hi; ++i) s += a[i] * b[i];
            return s;
        },
        false);
}

void quantize_rows(std::size_t J, std::size_t K, std::span<const cplx> a,
                   std::span<const cplx> fhat, std::span<const cplx> phase,
                   std::span<cplx> out) {
    const double inv = 1.0 / double(K);
    for (std::size_t j = 0; j < J; ++j) {
        cplx s{0.0, 0.0};
        const cplx* arow = a.data() + j * K;
        const cplx* prow = phase.data() + j * K;
        for (std::size_t k = 0; k < K; ++k) s += arow[k] * fhat[k] * prow[k];
        out[j] = s * inv;
    }
}

}  // namespace serial

}  // namespace ddl::kern
