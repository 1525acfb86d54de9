#ifndef DDL_SOLVER_HPP
#define DDL_SOLVER_HPP

#include <functional>

#include "ddl/field.hpp"
#include "ddl/fourier.hpp"

namespace ddl {

enum class Integrator { ETDRK4, IMEXCN };
enum class Dealias { TwoThirds, None };

// Stability constants for dt * max |linear phase rate| (the linear part is
// purely dispersive, so the relevant limit is accuracy/roundoff of the
// phi-function weights rather than a classical CFL; these margins were
// picked so the reference resolutions sit comfortably inside them).
inline constexpr double kEtdrk4PhaseLimit = 4000.0;
inline constexpr double kImexPhaseLimit = 1.0e4;

struct SolverConfig {
    Model model = Model::KdV;
    double dt = 1e-3;
    double t_end = 1.0;
    Dealias dealias = Dealias::TwoThirds;
    Integrator integrator = Integrator::ETDRK4;
    int snapshot_stride = 0;  // 0 = only first/last
};

struct Conserved {
    double mass = 0.0;
    double l2 = 0.0;         // int u^2
    double hamiltonian = 0.0;  // int (1/2 |grad u|^2 - 1/6 u^3)
};

Conserved conserved(const Field& u, Model model);

// Exponential time differencing RK4 (phi-functions by contour quadrature)
// with an IMEX Crank-Nicolson/AB2 cross-check integrator. The equations are
//   d_t u + d_x1 Lap u = 0 (ZK),  d_t u + d_x^3 u = 0 (KdV)
// plus the nonlinearity u d_x1 u, stepped as -1/2 d_x1 (u^2) in spectral space.
class Solver {
  public:
    // Throws on dt <= 0, t_end < 0, model/grid dimension mismatch, or
    // dt * max|phase rate| beyond the integrator's limit.
    Solver(GridPtr grid, SolverConfig cfg);

    const SolverConfig& config() const { return cfg_; }
    double max_phase_rate() const { return max_rate_; }

    // One step of dt. Stateless: the IMEX variant uses a single
    // Crank-Nicolson/Euler step here (AB2 history lives in evolve()).
    Field step(const Field& u) const;

    // Integrate to t_end; on_sample(t, u) fires at t=0, every
    // snapshot_stride steps, and at the end. Throws std::runtime_error
    // naming the last valid time if the field loses finiteness.
    Field evolve(const Field& u0,
                 const std::function<void(double, const Field&)>& on_sample = {}) const;

  private:
    void nonlinear(const cvec& v, cvec& out) const;  // -1/2 d_x1 (u^2), dealiased
    void etdrk4_step(cvec& v) const;
    void imex_step(cvec& v, const cvec& nprev, cvec& ncur) const;

    GridPtr grid_;
    SolverConfig cfg_;
    double max_rate_ = 0.0;
    cvec lam_;                         // i * phase rate per mode
    cvec e_, e2_, qw_, f1_, f2_, f3_;  // ETDRK4 tables
    cvec ax_;                          // i xi_1 per mode (nonlinearity)
    std::vector<double> mask_;         // dealias mask
};

}  // namespace ddl

#endif
