#ifndef DDL_FIELD_HPP
#define DDL_FIELD_HPP

#include <functional>
#include <memory>
#include <vector>

#include "ddl/fft.hpp"
#include "ddl/grid.hpp"

namespace ddl {

// Real-valued sample field on a periodic grid. Treated as an immutable
// value; the spectral representation is cached on first use.
class Field {
  public:
    Field() = default;
    Field(GridPtr grid, std::vector<double> phys);

    // Build from spectral coefficients (imaginary part of the inverse
    // transform is dropped; it must be round-off for hermitian input).
    static Field from_spectral(GridPtr grid, const cvec& spec);

    static Field zeros(GridPtr grid);

    // Sample a function of the physical coordinates.
    static Field sample(GridPtr grid, const std::function<double(double)>& f1d);
    static Field sample(GridPtr grid,
                        const std::function<double(double, double)>& f2d);

    const GridPtr& grid() const { return grid_; }
    const std::vector<double>& phys() const { return phys_; }
    const cvec& spectral() const;

    double l2_norm() const;   // sqrt(int u^2 dx), trapezoid == exact on grid
    double mass() const;      // int u dx
    double max_abs() const;
    bool finite() const;

    Field operator+(const Field& o) const;
    Field operator-(const Field& o) const;
    Field operator*(double s) const;
    Field pointwise_mul(const Field& o) const;

  private:
    GridPtr grid_;
    std::vector<double> phys_;
    mutable std::shared_ptr<const cvec> spec_;  // lazy cache
};

double inner(const Field& a, const Field& b);  // int a b dx

}  // namespace ddl

#endif
