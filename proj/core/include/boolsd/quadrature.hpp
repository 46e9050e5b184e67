#ifndef BOOLSD_QUADRATURE_HPP
#define BOOLSD_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace boolsd {

struct QuadOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-12;
    int max_intervals = 20000;
    bool throw_on_failure = true;
};

/// Adaptive Gauss-Kronrod (G7,K15) over [a,b]; a and b may be +-infinity
/// (mapped to a finite parameter first). `breakpoints` forces initial splits,
/// typically at 0, support endpoints and Re z of a near-axis Cauchy kernel.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& opt = {}, std::span<const double> breakpoints = {});

std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f,
                                       double a, double b, const QuadOptions& opt = {},
                                       std::span<const double> breakpoints = {});

/// Integral over a finite union of intervals (shared breakpoints applied to each).
double integrate_over(const std::function<double(double)>& f,
                      std::span<const std::pair<double, double>> intervals,
                      const QuadOptions& opt = {}, std::span<const double> breakpoints = {});

std::complex<double> integrate_over_complex(
    const std::function<std::complex<double>(double)>& f,
    std::span<const std::pair<double, double>> intervals, const QuadOptions& opt = {},
    std::span<const double> breakpoints = {});

}  // namespace boolsd

#endif
