#include "boolsd/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "boolsd/errors.hpp"

namespace boolsd {
namespace {

// Kronrod-15 abscissae on [0,1] plus K15 and embedded G7 weights (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class T>
double norm_of(T v) {
    if constexpr (std::is_same_v<T, double>) return std::fabs(v);
    else return std::abs(v);
}

template <class T>
void gk15(const std::function<T(double)>& f, double a, double b, T& result, double& err) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    T fc = f(mid);
    T resg = kWg[3] * fc;
    T resk = kWgk[7] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        T f1 = f(mid - dx);
        T f2 = f(mid + dx);
        T fsum = f1 + f2;
        resk += kWgk[j] * fsum;
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    }
    result = resk * half;
    err = norm_of((resk - resg) * half);
    // QUADPACK-style sharpening of the raw |K15-G7| difference
    if (err != 0.0) err = std::min(err, 200.0 * err * std::sqrt(err));
}

struct Piece {
    double a, b;
};

// Map an interval that may reach +-infinity onto a finite parameter range.
// Returns the transformed integrand and finite bounds.
template <class T>
std::function<T(double)> make_finite(const std::function<T(double)>& f, double a, double b,
                                     double& ta, double& tb) {
    const bool ainf = std::isinf(a), binf = std::isinf(b);
    if (!ainf && !binf) {
        ta = a; tb = b;
        return f;
    }
    if (ainf && binf) {
        ta = -1.0; tb = 1.0;  // x = t/(1-t^2)
        return [f](double t) {
            const double s = 1.0 - t * t;
            const double x = t / s;
            const double jac = (1.0 + t * t) / (s * s);
            return static_cast<T>(f(x) * jac);
        };
    }
    if (binf) {
        ta = 0.0; tb = 1.0;  // x = a + t/(1-t)
        return [f, a](double t) {
            const double s = 1.0 - t;
            const double x = a + t / s;
            return static_cast<T>(f(x) / (s * s));
        };
    }
    ta = 0.0; tb = 1.0;  // x = b - t/(1-t)
    return [f, b](double t) {
        const double s = 1.0 - t;
        const double x = b - t / s;
        return static_cast<T>(f(x) / (s * s));
    };
}

template <class T>
T integrate_impl(const std::function<T(double)>& f, double a, double b, const QuadOptions& opt,
                 std::span<const double> breakpoints) {
    if (a == b) return T{};
    double sign = 1.0;
    if (a > b) { std::swap(a, b); sign = -1.0; }

    // split at interior breakpoints, then map any infinite ends
    std::vector<double> cuts;
    for (double c : breakpoints)
        if (std::isfinite(c) && c > a && c < b) cuts.push_back(c);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<std::pair<std::function<T(double)>, Piece>> segs;
    double lo = a;
    auto push_seg = [&](double s0, double s1) {
        double ta, tb;
        auto g = make_finite(f, s0, s1, ta, tb);
        segs.push_back({std::move(g), {ta, tb}});
    };
    for (double c : cuts) { push_seg(lo, c); lo = c; }
    push_seg(lo, b);

    // when both ends are infinite and no cut was given, split at 0 so each
    // side gets its own map
    if (std::isinf(a) && std::isinf(b) && cuts.empty()) {
        segs.clear();
        push_seg(a, 0.0);
        push_seg(0.0, b);
    }

    T total{};
    double total_err = 0.0;
    int used = 0;

    for (auto& [g, piece] : segs) {
        std::vector<Piece> stack{{piece.a, piece.b}};
        const double seg_len = piece.b - piece.a;
        while (!stack.empty()) {
            Piece p = stack.back();
            stack.pop_back();
            T r;
            double e;
            gk15(g, p.a, p.b, r, e);
            const double frac = std::max((p.b - p.a) / seg_len, 1e-300);
            const double budget =
                std::max(opt.abs_tol, opt.rel_tol * norm_of(total + r)) * frac;
            const double width = p.b - p.a;
            if (e <= budget || width < 1e-15 * std::max(1.0, std::fabs(p.a))) {
                total += r;
                total_err += e;
                continue;
            }
            if (++used > opt.max_intervals) {
                total += r;
                total_err += e;
                if (opt.throw_on_failure)
                    throw QuadratureError("adaptive quadrature exceeded max_intervals",
                                          std::complex<double>(total), total_err);
                return sign * total;
            }
            const double mid = 0.5 * (p.a + p.b);
            stack.push_back({p.a, mid});
            stack.push_back({mid, p.b});
        }
    }
    return sign * total;
}

template <class T>
T integrate_over_impl(const std::function<T(double)>& f,
                      std::span<const std::pair<double, double>> intervals,
                      const QuadOptions& opt, std::span<const double> breakpoints) {
    T total{};
    for (auto [lo, hi] : intervals) total += integrate_impl(f, lo, hi, opt, breakpoints);
    return total;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& opt, std::span<const double> breakpoints) {
    return integrate_impl<double>(f, a, b, opt, breakpoints);
}

std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f,
                                       double a, double b, const QuadOptions& opt,
                                       std::span<const double> breakpoints) {
    return integrate_impl<std::complex<double>>(f, a, b, opt, breakpoints);
}

double integrate_over(const std::function<double(double)>& f,
                      std::span<const std::pair<double, double>> intervals,
                      const QuadOptions& opt, std::span<const double> breakpoints) {
    return integrate_over_impl<double>(f, intervals, opt, breakpoints);
}

std::complex<double> integrate_over_complex(
    const std::function<std::complex<double>(double)>& f,
    std::span<const std::pair<double, double>> intervals, const QuadOptions& opt,
    std::span<const double> breakpoints) {
    return integrate_over_impl<std::complex<double>>(f, intervals, opt, breakpoints);
}

}  // namespace boolsd
