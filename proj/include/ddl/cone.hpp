#ifndef DDL_CONE_HPP
#define DDL_CONE_HPP

#include <vector>

namespace ddl {

// Direction of the moving half-space / strip, with the drift speed nu and
// offset kappa of the region threshold.
struct ConeVector {
    std::vector<double> sigma;  // sigma_1 > 0 required
    double nu = 1.0;            // speed, > 0
    double kappa = 0.0;         // offset

    double dot(const std::vector<double>& x) const {
        double s = 0.0;
        for (std::size_t i = 0; i < sigma.size(); ++i) s += sigma[i] * x[i];
        return s;
    }
    double norm() const;
};

struct ConeCheck {
    bool ok;            // sigma_1 > 0 and sqrt(3) sigma_1 > |sigma_perp|
    double min_eig;     // minimum eigenvalue of the energy quadratic form M
    double margin;      // sqrt(3) sigma_1 - |sigma_perp|
};

// Evaluates the algebraic cone condition and the positivity of the matrix
// M = [[3 s1, s2, ...], [s2, s1, 0...], ...]; the two verdicts coincide.
// Throws on the zero vector.
ConeCheck cone_check(const std::vector<double>& sigma);

// Throws std::invalid_argument unless the cone condition holds and nu > 0.
void validate_cone(const ConeVector& c);

}  // namespace ddl

#endif
