#include "ddl/cone.hpp"

#include <cmath>
#include <stdexcept>

namespace ddl {

double ConeVector::norm() const {
    double s = 0.0;
    for (double v : sigma) s += v * v;
    return std::sqrt(s);
}

ConeCheck cone_check(const std::vector<double>& sigma) {
    if (sigma.empty()) throw std::invalid_argument("empty cone vector");
    double ssum = 0.0;
    for (double v : sigma) ssum += v * v;
    if (ssum == 0.0) throw std::invalid_argument("zero cone vector");

    const double s1 = sigma[0];
    double rho2 = 0.0;
    for (std::size_t j = 1; j < sigma.size(); ++j) rho2 += sigma[j] * sigma[j];
    const double rho = std::sqrt(rho2);

    // Arrowhead matrix M: eigenvalues s1 (n-2 fold) and 2 s1 +- sqrt(s1^2+rho^2).
    double min_eig;
    if (sigma.size() == 1) {
        min_eig = 3.0 * s1;
    } else {
        min_eig = 2.0 * s1 - std::sqrt(s1 * s1 + rho2);
        if (sigma.size() > 2) min_eig = std::min(min_eig, s1);
    }
    const double margin = std::sqrt(3.0) * s1 - rho;
    const bool ok = s1 > 0.0 && margin > 0.0;
    return ConeCheck{ok, min_eig, margin};
}

void validate_cone(const ConeVector& c) {
    auto chk = cone_check(c.sigma);
    if (!chk.ok)
        throw std::invalid_argument(
            "cone condition violated: need sigma_1 > 0 and "
            "sqrt(3) sigma_1 > |(sigma_2, ..., sigma_n)|");
    if (!(c.nu > 0.0)) throw std::invalid_argument("cone speed nu must be > 0");
}

}  // namespace ddl
