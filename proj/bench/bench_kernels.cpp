// Timing comparison: OpenMP kernels vs their serial reference twins.
// Prints one line per (kernel, size): median wall time of each variant,
// speedup, and whether the results agreed bitwise.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ddl/kernels.hpp"

using namespace ddl::kern;
using clk = std::chrono::steady_clock;

namespace {

double median_secs(int reps, const std::function<void()>& fn) {
    std::vector<double> t(reps);
    for (int i = 0; i < reps; ++i) {
        const auto a = clk::now();
        fn();
        t[i] = std::chrono::duration<double>(clk::now() - a).count();
    }
    std::sort(t.begin(), t.end());
    return t[reps / 2];
}

void row(const char* name, std::size_t n, double ts, double tp, bool same) {
    std::printf("%-16s n=%-9zu serial %10.3e s   omp %10.3e s   x%-6.2f %s\n",
                name, n, ts, tp, ts / tp, same ? "bitwise" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled)\n");
#endif
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    const int reps = 7;

    for (std::size_t n : {std::size_t(1) << 16, std::size_t(1) << 20,
                          std::size_t(1) << 22}) {
        std::vector<double> a(n), b(n), out_s(n), out_p(n);
        std::vector<cplx> spec_s(n), spec_p(n), mult(n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = unif(rng);
            b[i] = unif(rng);
            spec_s[i] = {unif(rng), unif(rng)};
            mult[i] = {unif(rng), unif(rng)};
        }
        spec_p = spec_s;

        const double t1s = median_secs(reps, [&] {
            std::vector<cplx> tmp = spec_s;
            serial::mul_inplace(tmp, mult);
            spec_s = tmp;
        });
        const double t1p = median_secs(reps, [&] {
            std::vector<cplx> tmp = spec_p;
            mul_inplace(tmp, mult);
            spec_p = tmp;
        });
        row("mul_inplace", n, t1s, t1p,
            std::memcmp(spec_s.data(), spec_p.data(), n * sizeof(cplx)) == 0);

        const double t2s =
            median_secs(reps, [&] { serial::mul_pointwise(a, b, out_s); });
        const double t2p = median_secs(reps, [&] { mul_pointwise(a, b, out_p); });
        row("mul_pointwise", n, t2s, t2p,
            std::memcmp(out_s.data(), out_p.data(), n * sizeof(double)) == 0);

        double rs = 0.0, rp = 0.0;
        const double t3s =
            median_secs(reps, [&] { rs = serial::weighted_sum_sq(a, b); });
        const double t3p = median_secs(reps, [&] { rp = weighted_sum_sq(a, b); });
        row("weighted_sum_sq", n, t3s, t3p, rs == rp);

        const double t4s = median_secs(reps, [&] { rs = serial::dot(a, b); });
        const double t4p = median_secs(reps, [&] { rp = dot(a, b); });
        row("dot", n, t4s, t4p, rs == rp);
    }

    // quantize_rows is quadratic; bench at direct-summation scale
    for (std::size_t n : {std::size_t(256), std::size_t(1024)}) {
        std::vector<cplx> tab(n * n), fhat(n), phase(n * n), qs(n), qp(n);
        for (auto& z : tab) z = {unif(rng), unif(rng)};
        for (auto& z : fhat) z = {unif(rng), unif(rng)};
        for (auto& z : phase) z = {unif(rng), unif(rng)};
        const double ts = median_secs(
            reps, [&] { serial::quantize_rows(n, n, tab, fhat, phase, qs); });
        const double tp = median_secs(
            reps, [&] { quantize_rows(n, n, tab, fhat, phase, qp); });
        row("quantize_rows", n, ts, tp,
            std::memcmp(qs.data(), qp.data(), n * sizeof(cplx)) == 0);
    }
    return 0;
}
