#ifndef BOOLSD_GRID_HPP
#define BOOLSD_GRID_HPP

#include <functional>
#include <vector>

namespace boolsd {

/// Uniform grid of n points on [lo, hi] (endpoints included, n >= 2).
std::vector<double> linspace(double lo, double hi, int n);

/// Logarithmic grid of n points on [lo, hi], 0 < lo < hi.
std::vector<double> geomspace(double lo, double hi, int n);

/// Profile grid for k/ell work: geometric clustering toward 0 on each
/// requested side, uniform in the bulk, never containing 0 itself.
/// lo < hi; points below min_abs in modulus are excluded.
std::vector<double> profile_grid(double lo, double hi, int n, double min_abs = 1e-4);

/// Data-parallel map over [0, n). Thread count = min(hardware, BOOLSD_THREADS
/// env var when set). fn(i) must only write state owned by index i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

/// Effective thread budget (>= 1).
int thread_budget();

}  // namespace boolsd

#endif
