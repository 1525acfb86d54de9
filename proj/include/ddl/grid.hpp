#ifndef DDL_GRID_HPP
#define DDL_GRID_HPP

#include <cstddef>
#include <memory>
#include <vector>

namespace ddl {

// Uniform periodic grid on a box [-L/2, L/2)^dim approximating R^dim.
// Wavenumbers follow the angular convention xi = 2*pi*k/L with the standard
// symmetric DFT layout {0, 1, ..., N/2-1, -N/2, ..., -1} * (2*pi/L).
class Grid {
  public:
    Grid(int dim, std::vector<double> box_length, std::vector<int> points);

    int dim() const { return dim_; }
    double box_length(int axis) const { return box_[axis]; }
    int points(int axis) const { return n_[axis]; }
    double spacing(int axis) const { return box_[axis] / n_[axis]; }
    std::size_t size() const { return total_; }

    // Physical coordinate of index j along an axis: -L/2 + j*h
    double coord(int axis, int j) const {
        return -0.5 * box_[axis] + j * spacing(axis);
    }

    const std::vector<double>& wavenumbers(int axis) const { return xi_[axis]; }

    // Row-major flattening; axis 0 is x_1 (slowest).
    std::size_t index(int j0, int j1 = 0) const {
        return dim_ == 1 ? std::size_t(j0) : std::size_t(j0) * n_[1] + j1;
    }

    // Volume element h_0 * ... * h_{dim-1}
    double cell_volume() const;

  private:
    int dim_;
    std::vector<double> box_;
    std::vector<int> n_;
    std::vector<std::vector<double>> xi_;
    std::size_t total_;
};

using GridPtr = std::shared_ptr<const Grid>;

// Throws std::invalid_argument on odd or tiny point counts or dim not in {1,2}.
GridPtr make_grid(int dim, double box_length, int points);
GridPtr make_grid(int dim, std::vector<double> box_length, std::vector<int> points);

}  // namespace ddl

#endif
