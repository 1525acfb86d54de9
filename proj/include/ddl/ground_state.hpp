#ifndef DDL_GROUND_STATE_HPP
#define DDL_GROUND_STATE_HPP

#include <vector>

#include "ddl/field.hpp"

namespace ddl {

// Positive radial solution of Lap Q - c Q + 1/2 Q^2 = 0, computed by the
// stabilized fixed-point (Petviashvili) iteration
//   u <- s^2 (c - Lap)^{-1} (1/2 u^2),   s = <(c - Lap)u, u> / <1/2 u^2, u>
// directly at speed c. The scaling law Q_c = c Q(sqrt(c) x) is then an
// independent cross-check rather than the construction.
struct GroundState {
    Field Q;
    double c = 1.0;
    double residual = 0.0;  // ||Lap Q - c Q + 1/2 Q^2|| / ||Q||
    double delta = 0.0;     // fitted decay rate from log Q vs |x|
    int iterations = 0;
    std::vector<double> residual_history;
};

// Throws on non-2d grid, c <= 0, a box too small to hold the tail
// (e^{-sqrt(c) L/2} must be < 1e-8), or non-convergence within max_iters.
GroundState ground_state(GridPtr grid, double c, int max_iters = 500);

}  // namespace ddl

#endif
