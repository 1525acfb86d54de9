#ifndef DDL_JET_HPP
#define DDL_JET_HPP

#include <array>
#include <cmath>
#include <cstddef>

namespace ddl {

// Truncated Taylor series in one variable: value plus derivatives up to
// order N. Used by the weight evaluators so every derivative is analytic
// rather than finite-differenced.
template <std::size_t N>
struct Jet {
    // d[k] = f^(k)(x) / k!  (Taylor coefficients, not raw derivatives)
    std::array<double, N + 1> d{};

    Jet() = default;
    explicit Jet(double v) { d[0] = v; }

    static Jet variable(double x) {
        Jet j(x);
        if constexpr (N >= 1) j.d[1] = 1.0;
        return j;
    }

    double value() const { return d[0]; }

    // k-th derivative (k! times the Taylor coefficient)
    double deriv(std::size_t k) const {
        double f = 1.0;
        for (std::size_t i = 2; i <= k; ++i) f *= double(i);
        return d[k] * f;
    }
};

template <std::size_t N>
Jet<N> operator+(const Jet<N>& a, const Jet<N>& b) {
    Jet<N> c;
    for (std::size_t k = 0; k <= N; ++k) c.d[k] = a.d[k] + b.d[k];
    return c;
}

template <std::size_t N>
Jet<N> operator-(const Jet<N>& a, const Jet<N>& b) {
    Jet<N> c;
    for (std::size_t k = 0; k <= N; ++k) c.d[k] = a.d[k] - b.d[k];
    return c;
}

template <std::size_t N>
Jet<N> operator-(const Jet<N>& a) {
    Jet<N> c;
    for (std::size_t k = 0; k <= N; ++k) c.d[k] = -a.d[k];
    return c;
}

template <std::size_t N>
Jet<N> operator*(const Jet<N>& a, const Jet<N>& b) {
    Jet<N> c;
    for (std::size_t k = 0; k <= N; ++k)
        for (std::size_t j = 0; j <= k; ++j) c.d[k] += a.d[j] * b.d[k - j];
    return c;
}

template <std::size_t N>
Jet<N> operator+(const Jet<N>& a, double s) { Jet<N> c = a; c.d[0] += s; return c; }
template <std::size_t N>
Jet<N> operator+(double s, const Jet<N>& a) { return a + s; }
template <std::size_t N>
Jet<N> operator-(const Jet<N>& a, double s) { Jet<N> c = a; c.d[0] -= s; return c; }
template <std::size_t N>
Jet<N> operator-(double s, const Jet<N>& a) { return (-a) + s; }
template <std::size_t N>
Jet<N> operator*(const Jet<N>& a, double s) {
    Jet<N> c;
    for (std::size_t k = 0; k <= N; ++k) c.d[k] = a.d[k] * s;
    return c;
}
template <std::size_t N>
Jet<N> operator*(double s, const Jet<N>& a) { return a * s; }

// Composition with a scalar function given its Taylor coefficients at a.d[0].
// g[k] = f^(k)(a0)/k!; returns f(a) as a jet.
template <std::size_t N>
Jet<N> compose(const std::array<double, N + 1>& g, const Jet<N>& a) {
    // Horner on the shifted series h = a - a0
    Jet<N> h = a;
    h.d[0] = 0.0;
    Jet<N> r(g[N]);
    for (std::size_t k = N; k-- > 0;) r = r * h + g[k];
    return r;
}

template <std::size_t N>
Jet<N> exp(const Jet<N>& a) {
    std::array<double, N + 1> g;
    double e = std::exp(a.d[0]);
    double f = 1.0;
    for (std::size_t k = 0; k <= N; ++k) {
        if (k > 0) f *= double(k);
        g[k] = e / f;
    }
    return compose(g, a);
}

template <std::size_t N>
Jet<N> pow(const Jet<N>& a, double p) {
    std::array<double, N + 1> g;
    double c = 1.0;
    for (std::size_t k = 0; k <= N; ++k) {
        g[k] = c * std::pow(a.d[0], p - double(k));
        c *= (p - double(k)) / double(k + 1);
    }
    return compose(g, a);
}

template <std::size_t N>
Jet<N> sqrt(const Jet<N>& a) { return pow(a, 0.5); }

template <std::size_t N>
Jet<N> inv(const Jet<N>& a) { return pow(a, -1.0); }

template <std::size_t N>
Jet<N> operator/(const Jet<N>& a, const Jet<N>& b) { return a * inv(b); }
template <std::size_t N>
Jet<N> operator/(double s, const Jet<N>& b) { return inv(b) * s; }
template <std::size_t N>
Jet<N> operator/(const Jet<N>& a, double s) { return a * (1.0 / s); }

// Japanese bracket <x> = sqrt(1+x^2)
template <std::size_t N>
Jet<N> bracket(const Jet<N>& a) { return sqrt(a * a + 1.0); }

using Jet4 = Jet<4>;

}  // namespace ddl

#endif
