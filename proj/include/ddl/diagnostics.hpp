#ifndef DDL_DIAGNOSTICS_HPP
#define DDL_DIAGNOSTICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "ddl/cone.hpp"
#include "ddl/cutoff.hpp"
#include "ddl/field.hpp"
#include "ddl/fourier.hpp"

namespace ddl {

enum class RegionKind { HalfSpace, Strip };

// Half-space {sigma.x > offset - nu t} or strip
// {gamma - nu t < sigma.x < kappa - nu t}; both expand leftward as t grows.
// eps/tau parametrize the smoothed-indicator cross-check.
struct MovingRegion {
    ConeVector cone;
    RegionKind kind = RegionKind::HalfSpace;
    double offset = 0.0;
    double gamma = 0.0, kappa = 0.0;
    double eps = 0.5, tau = 2.5;

    double threshold(double t) const { return offset - cone.nu * t; }
    double lo(double t) const { return gamma - cone.nu * t; }
    double hi(double t) const { return kappa - cone.nu * t; }
};

// Throws std::invalid_argument on unordered strip bounds or a bad cone.
void validate_region(const MovingRegion& reg);

struct TimedField {
    double t = 0.0;
    Field u;
};
using Trajectory = std::vector<TimedField>;

enum class WeightKind { Poly, Exp };
struct WeightSpec {
    WeightKind kind = WeightKind::Poly;
    double r = 0.0;    // polynomial power
    double b = 0.0;    // exponential rate
    double eta = 0.0;  // Kato saturation: q_eta = (e^{-2bx} + eta)^{-1/2};
                       // 0 = the raw exponential. Without saturation an
                       // exponential weight across the whole box amplifies
                       // round-off on the far side beyond the signal.
};

struct HalfspaceNorm {
    double sharp = 0.0;     // indicator quadrature
    double smoothed = 0.0;  // chi^2-weighted cross-check
};

// int over the region of (w u)^2 dx with w = <sigma.x>^r or e^{b sigma.x};
// running=true shifts the weight argument to sigma.x + nu t (the two columns
// of the reports). Throws std::runtime_error when the region boundary leaves
// the seam-safe zone of the periodic box.
HalfspaceNorm weighted_halfspace_norm(const Field& u, const MovingRegion& reg,
                                      double t, const WeightSpec& w,
                                      bool running = false);

// r_s = max{(1 - s/floor(2r)) r, r - ceil(s)/2}
double r_exponent(double r, double s);

// bounded iff max <= 5x the first reported value and the final third shows
// no significant monotone growth (strictly increasing and > 5% overall)
bool bounded_verdict(const std::vector<double>& vals);

struct ScanRow {
    double s = 0.0;
    double r_s = 0.0;
    double sup = 0.0;
    bool bounded = false;
    std::vector<double> times;
    std::vector<double> values;
};

// per s in s_grid: sup over snapshots with t >= delta of
// int (J^s u)^2 <sigma.x + nu t>^{2 r_s} chi^2(sigma.x - threshold(t)) dx
std::vector<ScanRow> gain_of_regularity_scan(const Trajectory& traj,
                                             const MovingRegion& reg, double r,
                                             const std::vector<double>& s_grid,
                                             double delta);

// trapezoid over snapshot times >= delta of the strip integral of (J^order u)^2
double strip_smoothing_integral(const Trajectory& traj, const MovingRegion& reg,
                                int order, double delta);

struct ExpScanRow {
    MultiIndex beta{0, 0};
    double sup = 0.0;
    bool bounded = false;
    std::vector<double> times;
    std::vector<double> values;
};

// per beta: sup over t >= delta of int_region (q_eta(sigma.x) d^beta u)^2 dx
std::vector<ExpScanRow> exp_smoothing_scan(const Trajectory& traj,
                                           const MovingRegion& reg, double b,
                                           const std::vector<MultiIndex>& betas,
                                           double delta, double eta = 0.0);

struct GrowthFit {
    double slope = 0.0;     // of log ||<x>^r S(t) f|| vs log <t> on the tail
    double constant = 0.0;  // max ratio to <t>^r (||J^{2r} f|| + ||<x>^r f||)
    std::vector<double> times;
    std::vector<double> values;
};

GrowthFit linear_weighted_growth_check(const Field& f, double r,
                                       const std::vector<double>& t_grid,
                                       Model model);

struct BOperator {
    enum class Kind { Identity, Deriv, Bessel } kind = Kind::Identity;
    MultiIndex beta{0, 0};
    double s = 0.0;
};

Field apply_B(const Field& u, const BOperator& B);

struct EnergyWeight {
    bool unit = true;  // chi == 1 everywhere (whole-space energy identity)
    ConeVector cone;
    double kappa = 0.0;
    double eps = 0.5, tau = 2.5;
};

// Residual of (1/2) dE/dt - (1/2) A1 + A2 + A3 = 0 with E = int (Bu)^2 chi^2,
// A1 = int (Bu)^2 d_t(chi^2), A2 = int d_x1 Lap(Bu) Bu chi^2,
// A3 = int B(u d_x1 u) Bu chi^2, evaluated with the solver's discrete
// operators (dealiased quadratic term) and a centered difference in t.
// One residual per interior snapshot; requires a uniform snapshot spacing.
std::vector<double> energy_identity_residual(const Trajectory& traj, Model model,
                                             const BOperator& B,
                                             const EnergyWeight& w);

struct ReportRow {
    double t = 0.0;
    std::string quantity_id;
    std::string region_id;
    double value = 0.0;
};

struct Verdict {
    std::string id;
    bool pass = false;
    double value = 0.0;  // headline number behind the verdict
};

struct DiagnosticsReport {
    std::vector<ReportRow> rows;
    std::vector<Verdict> verdicts;
    bool all_pass() const;
};

}  // namespace ddl

#endif
