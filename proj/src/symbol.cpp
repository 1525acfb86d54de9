#include "ddl/symbol.hpp"

#include <cmath>
#include <stdexcept>

#include "ddl/jet.hpp"

namespace ddl {

namespace {

double dot_n(const double* a, const double* x, int dim) {
    double s = 0.0;
    for (int i = 0; i < dim; ++i) s += a[i] * x[i];
    return s;
}

int total(const int* mi, int dim) {
    int s = 0;
    for (int i = 0; i < dim; ++i) s += mi[i];
    return s;
}

// d^beta <xi>^m, closed form for |beta| <= 3.
double bessel_deriv(double m, const double* xi, int dim, const int* beta) {
    const int k = total(beta, dim);
    double w2 = 1.0;
    for (int i = 0; i < dim; ++i) w2 += xi[i] * xi[i];
    const double w = std::sqrt(w2);
    if (k == 0) return std::pow(w, m);
    // unpack beta into a direction list
    int dir[3] = {0, 0, 0};
    int nd = 0;
    for (int i = 0; i < dim; ++i)
        for (int c = 0; c < beta[i]; ++c) dir[nd++] = i;
    if (nd > 3) throw std::invalid_argument("symbol xi-derivative order > 3");
    auto d = [&](int a, int b) { return dir[a] == dir[b] ? 1.0 : 0.0; };
    const double x0 = xi[dir[0]];
    if (k == 1) return m * x0 * std::pow(w, m - 2);
    const double x1 = xi[dir[1]];
    if (k == 2)
        return m * d(0, 1) * std::pow(w, m - 2) +
               m * (m - 2) * x0 * x1 * std::pow(w, m - 4);
    const double x2 = xi[dir[2]];
    return m * (m - 2) * (d(0, 1) * x2 + d(0, 2) * x1 + d(1, 2) * x0) *
               std::pow(w, m - 4) +
           m * (m - 2) * (m - 4) * x0 * x1 * x2 * std::pow(w, m - 6);
}

// sigma^alpha = prod sigma_i^{alpha_i}
double sigma_pow(const std::vector<double>& sigma, const int* alpha, int dim) {
    double s = 1.0;
    for (int i = 0; i < dim; ++i)
        for (int c = 0; c < alpha[i]; ++c) s *= sigma[i];
    return s;
}

Jet4 bracket_pow_jet(double u, double q) {
    return pow(bracket(Jet4::variable(u)), q);
}

}  // namespace

Symbol symbol_one() {
    Symbol s;
    s.name = "one";
    s.eval = [](const double*, const double*, int) { return cplx(1.0, 0.0); };
    s.deriv = [](const double*, const double*, int dim, const int* alpha,
                 const int* beta) {
        return (total(alpha, dim) + total(beta, dim) == 0) ? cplx(1.0, 0.0)
                                                           : cplx(0.0, 0.0);
    };
    return s;
}

Symbol symbol_bessel(double m) {
    Symbol s;
    s.name = "bessel";
    s.m = m;
    s.eval = [m](const double*, const double* xi, int dim) {
        double w2 = 1.0;
        for (int i = 0; i < dim; ++i) w2 += xi[i] * xi[i];
        return cplx(std::pow(w2, 0.5 * m), 0.0);
    };
    s.deriv = [m](const double*, const double* xi, int dim, const int* alpha,
                  const int* beta) {
        if (total(alpha, dim) > 0) return cplx(0.0, 0.0);
        return cplx(bessel_deriv(m, xi, dim, beta), 0.0);
    };
    return s;
}

Symbol symbol_bracket_x(double q, std::vector<double> sigma, double omega) {
    Symbol s;
    s.name = "bracket-x";
    s.q = q;
    s.sigma = sigma;
    s.omega = omega;
    s.eval = [q, sigma, omega](const double* x, const double*, int dim) {
        const double u = dot_n(sigma.data(), x, dim) + omega;
        return cplx(std::pow(1.0 + u * u, 0.5 * q), 0.0);
    };
    s.deriv = [q, sigma, omega](const double* x, const double*, int dim,
                                const int* alpha, const int* beta) {
        if (total(beta, dim) > 0) return cplx(0.0, 0.0);
        const double u = dot_n(sigma.data(), x, dim) + omega;
        const int k = total(alpha, dim);
        return cplx(sigma_pow(sigma, alpha, dim) * bracket_pow_jet(u, q).deriv(k),
                    0.0);
    };
    return s;
}

Symbol symbol_product(double m, double q, std::vector<double> sigma,
                      double omega) {
    Symbol s;
    s.name = "product";
    s.m = m;
    s.q = q;
    s.sigma = sigma;
    s.omega = omega;
    s.eval = [m, q, sigma, omega](const double* x, const double* xi, int dim) {
        const double u = dot_n(sigma.data(), x, dim) + omega;
        double w2 = 1.0;
        for (int i = 0; i < dim; ++i) w2 += xi[i] * xi[i];
        return cplx(std::pow(1.0 + u * u, 0.5 * q) * std::pow(w2, 0.5 * m), 0.0);
    };
    s.deriv = [m, q, sigma, omega](const double* x, const double* xi, int dim,
                                   const int* alpha, const int* beta) {
        const double u = dot_n(sigma.data(), x, dim) + omega;
        const int ka = total(alpha, dim);
        const double xpart =
            sigma_pow(sigma, alpha, dim) * bracket_pow_jet(u, q).deriv(ka);
        return cplx(xpart * bessel_deriv(m, xi, dim, beta), 0.0);
    };
    return s;
}

Symbol symbol_cutoff_product(double m, double q, std::vector<double> sigma,
                             double omega, double eps, double tau) {
    auto cf = std::make_shared<CutoffFamily>(eps, tau);
    Symbol s;
    s.name = "cutoff-product";
    s.m = m;
    s.q = q;
    s.sigma = sigma;
    s.omega = omega;
    s.eval = [m, q, sigma, omega, cf](const double* x, const double* xi, int dim) {
        const double u = dot_n(sigma.data(), x, dim) + omega;
        const double c = cf->chi(u);
        if (c == 0.0) return cplx(0.0, 0.0);
        double w2 = 1.0;
        for (int i = 0; i < dim; ++i) w2 += xi[i] * xi[i];
        return cplx(std::pow(1.0 + u * u, 0.5 * q) * c * std::pow(w2, 0.5 * m),
                    0.0);
    };
    s.deriv = [m, q, sigma, omega, cf](const double* x, const double* xi, int dim,
                                       const int* alpha, const int* beta) {
        const double u = dot_n(sigma.data(), x, dim) + omega;
        const int ka = total(alpha, dim);
        Jet4 chij;
        double kfac = 1.0;
        for (int k = 0; k <= 4; ++k) {
            if (k > 1) kfac *= k;
            chij.d[k] = cf->chi_deriv(u, k) / kfac;
        }
        const Jet4 h = bracket_pow_jet(u, q) * chij;
        const double xpart = sigma_pow(sigma, alpha, dim) * h.deriv(ka);
        return cplx(xpart * bessel_deriv(m, xi, dim, beta), 0.0);
    };
    return s;
}

Symbol symbol_from_catalog(const std::string& id, double m, double q,
                           std::vector<double> sigma, double omega) {
    if (id == "one") return symbol_one();
    if (id == "bessel") return symbol_bessel(m);
    if (id == "bracket-x") return symbol_bracket_x(q, sigma, omega);
    if (id == "product") return symbol_product(m, q, sigma, omega);
    if (id == "cutoff-product")
        return symbol_cutoff_product(m, q, sigma, omega, 0.5, 4.0);
    throw std::invalid_argument("unknown catalog symbol: " + id);
}

namespace {

// Nested centered first differences; adequate for boundedness scans.
cplx fd_deriv(const Symbol& a, double* x, double* xi, int dim, int* alpha,
              int* beta, double hx, double hxi) {
    for (int i = 0; i < dim; ++i) {
        if (alpha[i] > 0) {
            alpha[i]--;
            x[i] += hx;
            cplx hi = fd_deriv(a, x, xi, dim, alpha, beta, hx, hxi);
            x[i] -= 2.0 * hx;
            cplx lo = fd_deriv(a, x, xi, dim, alpha, beta, hx, hxi);
            x[i] += hx;
            alpha[i]++;
            return (hi - lo) / (2.0 * hx);
        }
        if (beta[i] > 0) {
            beta[i]--;
            xi[i] += hxi;
            cplx hi = fd_deriv(a, x, xi, dim, alpha, beta, hx, hxi);
            xi[i] -= 2.0 * hxi;
            cplx lo = fd_deriv(a, x, xi, dim, alpha, beta, hx, hxi);
            xi[i] += hxi;
            beta[i]++;
            return (hi - lo) / (2.0 * hxi);
        }
    }
    return a.eval(x, xi, dim);
}

}  // namespace

cplx symbol_deriv(const Symbol& a, const double* x, const double* xi, int dim,
                  const int* alpha, const int* beta, double hx, double hxi) {
    if (a.deriv) return a.deriv(x, xi, dim, alpha, beta);
    double xs[2] = {x[0], dim > 1 ? x[1] : 0.0};
    double xis[2] = {xi[0], dim > 1 ? xi[1] : 0.0};
    int al[2] = {alpha[0], dim > 1 ? alpha[1] : 0};
    int be[2] = {beta[0], dim > 1 ? beta[1] : 0};
    return fd_deriv(a, xs, xis, dim, al, be, hx, hxi);
}

}  // namespace ddl
