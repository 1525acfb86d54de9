#ifndef DDL_ENSEMBLE_HPP
#define DDL_ENSEMBLE_HPP

#include <cstdint>
#include <vector>

#include "ddl/field.hpp"

namespace ddl {

// Randomized Schwartz-type test functions: modulated Gaussians with random
// center, width, amplitude and modulation. Each member gets its own stream
// seeded from (seed, index), so the ensemble is reproducible regardless of
// evaluation order.
std::vector<Field> make_ensemble(GridPtr grid, int count, std::uint64_t seed);

// Two-phase inequality constant: fit C* as the max ratio over ensemble A,
// then report the worst violation factor max(ratio_B) / C* on ensemble B.
struct FittedConstant {
    double c_star = 0.0;
    double violation = 0.0;  // <= 1 means B stayed under the fitted constant
};

template <class RatioFn>
FittedConstant fit_and_check(const std::vector<Field>& a,
                             const std::vector<Field>& b, RatioFn&& ratio) {
    FittedConstant out;
    for (const Field& f : a) out.c_star = std::max(out.c_star, ratio(f));
    double worst = 0.0;
    for (const Field& f : b) worst = std::max(worst, ratio(f));
    out.violation = out.c_star > 0.0 ? worst / out.c_star : 0.0;
    return out;
}

}  // namespace ddl

#endif
