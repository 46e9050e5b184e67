// Test-only numerics, kept independent of the library's quadrature and
// extrapolation paths so derived expectations have their own oracle.
#ifndef BOOLSD_TESTS_ORACLES_HPP
#define BOOLSD_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

/// Romberg integration on [a,b] (finite), refined until |T_k - T_{k-1}| < tol.
template <class F>
double romberg(F f, double a, double b, double tol = 1e-12, int max_level = 22) {
    std::vector<std::vector<double>> r(1);
    double h = b - a;
    r[0].push_back(0.5 * h * (f(a) + f(b)));
    for (int k = 1; k <= max_level; ++k) {
        h *= 0.5;
        double sum = 0.0;
        const long n = 1L << (k - 1);
        for (long i = 0; i < n; ++i) sum += f(a + (2 * i + 1) * h);
        r.emplace_back();
        r[k].push_back(0.5 * r[k - 1][0] + h * sum);
        double p4 = 4.0;
        for (int j = 1; j <= k; ++j) {
            r[k].push_back(r[k][j - 1] + (r[k][j - 1] - r[k - 1][j - 1]) / (p4 - 1.0));
            p4 *= 4.0;
        }
        if (k > 3 && std::fabs(r[k][k] - r[k - 1][k - 1]) < tol * (1.0 + std::fabs(r[k][k])))
            return r[k][k];
    }
    return r.back().back();
}

template <class F>
std::complex<double> romberg_complex(F f, double a, double b, double tol = 1e-12) {
    const double re = romberg([&](double t) { return f(t).real(); }, a, b, tol);
    const double im = romberg([&](double t) { return f(t).imag(); }, a, b, tol);
    return {re, im};
}

/// Central difference derivative.
template <class F>
double cdiff(F f, double x, double h = 1e-5) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

template <class F>
std::complex<double> cdiff_complex(F f, std::complex<double> z, double h = 1e-5) {
    return (f(z + h) - f(z - h)) / (2.0 * h);
}

/// Brute-force boundary limit by plain small-epsilon evaluation ladder with
/// Aitken acceleration (independent of the library's Richardson path).
template <class F>
double eps_limit(F f, int rungs = 9, double first = 1e-2) {
    double e = first;
    std::vector<double> v;
    for (int i = 0; i < rungs; ++i) {
        v.push_back(f(e));
        e *= 0.5;
    }
    // single Aitken step on the tail
    const double x0 = v[rungs - 3], x1 = v[rungs - 2], x2 = v[rungs - 1];
    const double d = (x2 - x1) - (x1 - x0);
    if (std::fabs(d) < 1e-300) return x2;
    return x2 - (x2 - x1) * (x2 - x1) / d;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed5eedULL);
    return gen;
}

inline double uniform(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng());
}

}  // namespace oracle

#endif
