#include "boolsd/grid.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "boolsd/errors.hpp"

namespace boolsd {

std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 2) throw DomainError("linspace: need n >= 2");
    std::vector<double> g(n);
    const double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) g[i] = lo + step * i;
    g.back() = hi;
    return g;
}

std::vector<double> geomspace(double lo, double hi, int n) {
    if (n < 2) throw DomainError("geomspace: need n >= 2");
    if (!(lo > 0.0) || !(hi > lo)) throw DomainError("geomspace: need 0 < lo < hi");
    std::vector<double> g(n);
    const double r = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) g[i] = lo * std::exp(r * i);
    g.back() = hi;
    return g;
}

std::vector<double> profile_grid(double lo, double hi, int n, double min_abs) {
    if (!(lo < hi)) throw DomainError("profile_grid: need lo < hi");
    if (n < 4) throw DomainError("profile_grid: need n >= 4");
    std::vector<double> g;
    g.reserve(n + 2);
    auto side = [&](double a, double b, int m) {
        // [a,b] with 0 < a < b: geometric over three decades from a, then uniform
        if (m < 2 || !(b > a)) return;
        const double knee = std::min(1000.0 * a, b);
        const int ng = (knee < b) ? std::max(2, m / 3) : m;
        for (double x : geomspace(a, knee, ng)) g.push_back(x);
        if (knee < b) {
            auto u = linspace(knee, b, m - ng + 1);
            g.insert(g.end(), u.begin() + 1, u.end());
        }
    };
    if (lo >= 0.0) {
        side(std::max(lo, min_abs), hi, n);
    } else if (hi <= 0.0) {
        side(std::max(-hi, min_abs), -lo, n);
        for (auto& x : g) x = -x;
    } else {
        const int npos = std::max(2, static_cast<int>(n * hi / (hi - lo)));
        const int nneg = std::max(2, n - npos);
        side(min_abs, hi, npos);
        std::vector<double> pos = std::move(g);
        g.clear();
        side(min_abs, -lo, nneg);
        for (auto& x : g) x = -x;
        g.insert(g.end(), pos.begin(), pos.end());
    }
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

int thread_budget() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("BOOLSD_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) hw = std::min(hw, cap);
    }
    return hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const int nt = thread_budget();
    if (nt == 1 || n < 16) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n || failed.load(std::memory_order_relaxed)) return;
            try {
                fn(i);
            } catch (...) {
                if (!failed.exchange(true)) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const int spawn = static_cast<int>(std::min<std::size_t>(nt, n)) - 1;
    pool.reserve(spawn);
    for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace boolsd
