#include "ddl/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace ddl {

namespace {

struct PlanKey {
    int n0, n1, sign;
    bool operator<(const PlanKey& o) const {
        if (n0 != o.n0) return n0 < o.n0;
        if (n1 != o.n1) return n1 < o.n1;
        return sign < o.sign;
    }
};

// fftw planning is not thread safe; execution via fftw_execute_dft is.
std::mutex plan_mutex;
std::map<PlanKey, fftw_plan> plan_cache;

fftw_plan get_plan(const Grid& g, int sign) {
    PlanKey key{g.points(0), g.dim() == 2 ? g.points(1) : 1, sign};
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto it = plan_cache.find(key);
    if (it != plan_cache.end()) return it->second;

    cvec scratch(g.size());
    auto* p = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan;
    if (g.dim() == 1)
        plan = fftw_plan_dft_1d(key.n0, p, p, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    else
        plan = fftw_plan_dft_2d(key.n0, key.n1, p, p, sign,
                                FFTW_ESTIMATE | FFTW_UNALIGNED);
    plan_cache.emplace(key, plan);
    return plan;
}

}  // namespace

cvec fft_forward(const Grid& g, const cvec& in) {
    cvec out = in;
    auto* p = reinterpret_cast<fftw_complex*>(out.data());
    fftw_execute_dft(get_plan(g, FFTW_FORWARD), p, p);
    return out;
}

cvec fft_backward(const Grid& g, const cvec& in) {
    cvec out = in;
    auto* p = reinterpret_cast<fftw_complex*>(out.data());
    fftw_execute_dft(get_plan(g, FFTW_BACKWARD), p, p);
    const double s = 1.0 / double(g.size());
    for (auto& z : out) z *= s;
    return out;
}

}  // namespace ddl
