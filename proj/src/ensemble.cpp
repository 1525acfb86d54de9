#include "ddl/ensemble.hpp"

#include <cmath>
#include <random>

namespace ddl {

std::vector<Field> make_ensemble(GridPtr grid, int count, std::uint64_t seed) {
    std::vector<Field> out;
    out.reserve(count);
    const double L = grid->box_length(0);
    for (int i = 0; i < count; ++i) {
        std::seed_seq sq{seed, std::uint64_t(i)};
        std::mt19937_64 rng(sq);
        std::uniform_real_distribution<double> U(0.0, 1.0);
        const double amp = 0.2 + 1.8 * U(rng);
        const double width = 0.5 + 2.0 * U(rng);
        const double c0 = 0.25 * L * (2.0 * U(rng) - 1.0);
        const double k = 4.0 * U(rng);
        const double phase = 2.0 * M_PI * U(rng);
        if (grid->dim() == 1) {
            out.push_back(Field::sample(grid, [=](double x) {
                const double z = (x - c0) / width;
                return amp * std::exp(-z * z) * std::cos(k * x + phase);
            }));
        } else {
            const double c1 = 0.25 * grid->box_length(1) * (2.0 * U(rng) - 1.0);
            const double k1 = 4.0 * U(rng);
            out.push_back(Field::sample(grid, [=](double x0, double x1) {
                const double z0 = (x0 - c0) / width;
                const double z1 = (x1 - c1) / width;
                return amp * std::exp(-z0 * z0 - z1 * z1) *
                       std::cos(k * x0 + k1 * x1 + phase);
            }));
        }
    }
    return out;
}

}  // namespace ddl
