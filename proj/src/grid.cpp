#include "ddl/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace ddl {

Grid::Grid(int dim, std::vector<double> box_length, std::vector<int> points)
    : dim_(dim), box_(std::move(box_length)), n_(std::move(points)) {
    if (dim_ != 1 && dim_ != 2)
        throw std::invalid_argument("grid dimension must be 1 or 2");
    if (box_.size() != std::size_t(dim_) || n_.size() != std::size_t(dim_))
        throw std::invalid_argument("grid spec length mismatch");
    total_ = 1;
    for (int a = 0; a < dim_; ++a) {
        if (n_[a] < 8 || n_[a] % 2 != 0)
            throw std::invalid_argument("points per axis must be even and >= 8");
        if (!(box_[a] > 0.0))
            throw std::invalid_argument("box length must be positive");
        total_ *= std::size_t(n_[a]);
    }
    xi_.resize(dim_);
    for (int a = 0; a < dim_; ++a) {
        const int n = n_[a];
        const double dxi = 2.0 * M_PI / box_[a];
        xi_[a].resize(n);
        for (int k = 0; k < n; ++k) {
            int kk = (k < n / 2) ? k : k - n;
            xi_[a][k] = dxi * kk;
        }
    }
}

double Grid::cell_volume() const {
    double v = 1.0;
    for (int a = 0; a < dim_; ++a) v *= spacing(a);
    return v;
}

GridPtr make_grid(int dim, double box_length, int points) {
    return make_grid(dim, std::vector<double>(dim, box_length),
                     std::vector<int>(dim, points));
}

GridPtr make_grid(int dim, std::vector<double> box_length, std::vector<int> points) {
    return std::make_shared<const Grid>(dim, std::move(box_length), std::move(points));
}

}  // namespace ddl
