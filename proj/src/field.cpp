#include "ddl/field.hpp"

#include <cmath>
#include <stdexcept>

#include "ddl/kernels.hpp"

namespace ddl {

Field::Field(GridPtr grid, std::vector<double> phys)
    : grid_(std::move(grid)), phys_(std::move(phys)) {
    if (phys_.size() != grid_->size())
        throw std::invalid_argument("field size does not match grid");
}

Field Field::from_spectral(GridPtr grid, const cvec& spec) {
    cvec ph = fft_backward(*grid, spec);
    std::vector<double> re(ph.size());
    for (std::size_t i = 0; i < ph.size(); ++i) re[i] = ph[i].real();
    Field f(std::move(grid), std::move(re));
    f.spec_ = std::make_shared<const cvec>(spec);
    return f;
}

Field Field::zeros(GridPtr grid) {
    std::vector<double> v(grid->size(), 0.0);
    return Field(std::move(grid), std::move(v));
}

Field Field::sample(GridPtr grid, const std::function<double(double)>& f1d) {
    if (grid->dim() != 1) throw std::invalid_argument("1d sampler on 2d grid");
    std::vector<double> v(grid->size());
    for (int j = 0; j < grid->points(0); ++j) v[j] = f1d(grid->coord(0, j));
    return Field(std::move(grid), std::move(v));
}

Field Field::sample(GridPtr grid,
                    const std::function<double(double, double)>& f2d) {
    if (grid->dim() != 2) throw std::invalid_argument("2d sampler on 1d grid");
    std::vector<double> v(grid->size());
    for (int j0 = 0; j0 < grid->points(0); ++j0)
        for (int j1 = 0; j1 < grid->points(1); ++j1)
            v[grid->index(j0, j1)] = f2d(grid->coord(0, j0), grid->coord(1, j1));
    return Field(std::move(grid), std::move(v));
}

const cvec& Field::spectral() const {
    if (!spec_) {
        cvec in(phys_.size());
        for (std::size_t i = 0; i < phys_.size(); ++i) in[i] = phys_[i];
        spec_ = std::make_shared<const cvec>(fft_forward(*grid_, in));
    }
    return *spec_;
}

double Field::l2_norm() const {
    double s = kern::dot(phys_, phys_);
    return std::sqrt(s * grid_->cell_volume());
}

double Field::mass() const {
    double s = 0.0;
    for (double v : phys_) s += v;
    return s * grid_->cell_volume();
}

double Field::max_abs() const {
    double m = 0.0;
    for (double v : phys_) m = std::max(m, std::abs(v));
    return m;
}

bool Field::finite() const {
    for (double v : phys_)
        if (!std::isfinite(v)) return false;
    return true;
}

Field Field::operator+(const Field& o) const {
    std::vector<double> v(phys_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = phys_[i] + o.phys_[i];
    return Field(grid_, std::move(v));
}

Field Field::operator-(const Field& o) const {
    std::vector<double> v(phys_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = phys_[i] - o.phys_[i];
    return Field(grid_, std::move(v));
}

Field Field::operator*(double s) const {
    std::vector<double> v(phys_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = phys_[i] * s;
    return Field(grid_, std::move(v));
}

Field Field::pointwise_mul(const Field& o) const {
    std::vector<double> v(phys_.size());
    kern::mul_pointwise(phys_, o.phys_, v);
    return Field(grid_, std::move(v));
}

double inner(const Field& a, const Field& b) {
    return kern::dot(a.phys(), b.phys()) * a.grid()->cell_volume();
}

}  // namespace ddl
