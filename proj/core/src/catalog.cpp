#include "boolsd/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "boolsd/errors.hpp"
#include "boolsd/grid.hpp"
#include "boolsd/quadrature.hpp"

namespace boolsd::catalog {

namespace {
const double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = M_PI;

Complex h_series(Complex z) {
    // sum z^{2n+1} / (n! (2n+1)); positive terms on the real line, so no
    // cancellation there regardless of |z|
    Complex term = z;
    Complex sum = z;
    const Complex z2 = z * z;
    for (int n = 1; n < 500; ++n) {
        term *= z2 / static_cast<double>(n);
        const Complex add = term / static_cast<double>(2 * n + 1);
        sum += add;
        if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

double dawson_asymptotic(double x) {
    // D(x) ~ sum (2n-1)!! / (2^{n+1} x^{2n+1}), valid for large |x|
    const double inv2x2 = 1.0 / (2.0 * x * x);
    double term = 1.0 / (2.0 * x);
    double sum = term;
    for (int n = 1; n < 60; ++n) {
        term *= (2.0 * n - 1.0) * inv2x2;
        sum += term;
        if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
    }
    return sum;
}
}  // namespace

double h_real(double x) {
    if (std::fabs(x) > 30.0) throw DomainError("h_eval: |z| exceeds the overflow guard 30");
    if (std::fabs(x) <= 15.0) return h_series(Complex(x, 0.0)).real();
    return dawson_asymptotic(x) * std::exp(x * x);
}

double dawson(double x) {
    if (std::fabs(x) <= 15.0) return std::exp(-x * x) * h_series(Complex(x, 0.0)).real();
    return dawson_asymptotic(x);
}

Complex h_eval(Complex z) {
    if (std::abs(z) > 30.0) throw DomainError("h_eval: |z| exceeds the overflow guard 30");
    if (z.imag() == 0.0) return Complex(h_real(z.real()), 0.0);
    if (std::abs(z) <= 3.0) return h_series(z);
    // straight-segment quadrature h(z) = z int_0^1 exp((z s)^2) ds
    const Complex zz = z * z;
    return z * integrate_complex(
                   [zz](double s) { return std::exp(zz * (s * s)); }, 0.0, 1.0,
                   {.abs_tol = 1e-300, .rel_tol = 1e-14});
}

Complex normal_cauchy(Complex z) {
    if (z.imag() < -1e-12)
        throw DomainError("normal_cauchy: evaluation below the real axis");
    static const double kSqrtPiOver2 = std::sqrt(kPi / 2.0);
    static const double kSqrt2 = std::sqrt(2.0);
    const Complex hz = h_eval(z / kSqrt2);
    return std::exp(-0.5 * z * z) * (Complex(0.0, -kSqrtPiOver2) + kSqrt2 * hz);
}

double normal_f(double x) {
    const double y = x / std::sqrt(2.0);
    if (y * y >= 700.0) return kInf;  // ell underflows to 0 out here
    const double d = dawson(y);
    return std::exp(-y * y) + (4.0 / kPi) * d * d * std::exp(y * y);
}

double normal_f_prime(double x) {
    const double y = x / std::sqrt(2.0);
    if (y * y >= 700.0) return x > 0 ? kInf : -kInf;
    // f' = -x f + (4 sqrt2 / pi) h(x/sqrt2), with h = D e^{y^2}
    return -x * normal_f(x) + (4.0 * std::sqrt(2.0) / kPi) * dawson(y) * std::exp(y * y);
}

double normal_f_second(double x) {
    const double y = x / std::sqrt(2.0);
    if (y * y >= 700.0) return kInf;
    return -normal_f(x) - x * normal_f_prime(x) + (4.0 / kPi) * std::exp(0.5 * x * x);
}

double normal_g_prime(double x) {
    const double h = h_real(x);
    return -2.0 * x * std::exp(-x * x) * (1.0 + (4.0 / kPi) * h * h) + (8.0 / kPi) * h;
}

double normal_ell(double x) {
    const double f = normal_f(x);
    return std::isinf(f) ? 0.0 : kNormalEllC / f;
}

double normal_k(double x) {
    if (x == 0.0) throw DomainError("normal_k: x must be nonzero");
    return normal_ell(x) / std::fabs(x);
}

double normal_ell_prime(double x) {
    const double f = normal_f(x);
    if (std::isinf(f)) return 0.0;
    return -kNormalEllC * normal_f_prime(x) / (f * f);
}

double normal_ell_second(double x) {
    const double f = normal_f(x);
    if (std::isinf(f)) return 0.0;
    const double fp = normal_f_prime(x);
    return kNormalEllC * (2.0 * fp * fp - f * normal_f_second(x)) / (f * f * f);
}

// ---------------------------------------------------------------------------

KProfile CatalogEntry::profile(int n) const {
    if (!k_closed) throw DomainError("catalog entry '" + id + "' has no closed-form k");
    const double lo = std::max(profile_window_lo, std::isinf(k_alpha) ? -1e9 : k_alpha);
    const double hi = std::min(profile_window_hi, std::isinf(k_beta) ? 1e9 : k_beta);
    auto g = profile_grid(std::min(lo, -1e-4), std::max(hi, 1e-4), n);
    auto kc = k_closed;
    const double a = k_alpha, b = k_beta;
    auto ell = [kc, a, b](double x) {
        if (x == 0.0 || x < a || x > b) return 0.0;
        return std::fabs(x) * kc(x);
    };
    return KProfile::from_ell(ell, a, b, g);
}

namespace {

// principal-branch product sqrt((z-a)(z-b)) that stays asymptotic to z on all
// of C+, which is the branch sending F-transforms of compactly supported
// measures to C+
Complex sqrt_pair(Complex z, double a, double b) { return std::sqrt(z - a) * std::sqrt(z - b); }

CatalogEntry base_entry(std::string id, std::map<std::string, double> params) {
    CatalogEntry e;
    e.id = std::move(id);
    e.params = std::move(params);
    return e;
}

}  // namespace

CatalogEntry dirac(double a) {
    auto e = base_entry("dirac", {{"a", a}});
    e.measure = SpectralMeasure::dirac(a);
    e.f_closed = TransformHandle(
        Role::ReciprocalF, [a](Complex z) { return z - a; }, 0.0,
        [](Complex) { return Complex{1.0, 0.0}; });
    e.k_closed = [](double) { return 0.0; };
    e.k_alpha = e.k_beta = 0.0;
    e.triplet_closed = LevyTriplet{0.0, {}, {}, a};
    e.sd_expected = true;
    return e;
}

CatalogEntry two_point(double p) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("two_point: need p in (0,1)");
    auto e = base_entry("two-point", {{"p", p}});
    e.measure = SpectralMeasure::from_atoms({{-1.0, 1.0 - p}, {1.0, p}}, 1.0);
    const double r = 2.0 * p - 1.0;  // F pole at -r = 1-2p
    e.f_closed = TransformHandle(
        Role::ReciprocalF, [r](Complex z) { return (z * z - 1.0) / (z + r); }, 0.0,
        [r](Complex z) {
            const Complex d = z + r;
            return (2.0 * z * d - (z * z - 1.0)) / (d * d);
        });
    e.k_closed = [](double) { return 0.0; };
    if (p != 0.5) {
        const double beta = 1.0 - 2.0 * p;
        e.levy_atoms_closed.push_back({beta, (1.0 - beta * beta) / (beta * beta)});
    }
    e.sd_expected = (p == 0.5);
    return e;
}

CatalogEntry boolean_gaussian(double gamma, double a) {
    if (!(a > 0.0)) throw DomainError("boolean_gaussian: need a > 0 (a = 0 is a Dirac measure)");
    auto e = base_entry("boolean-gaussian", {{"gamma", gamma}, {"a", a}});
    const double disc = std::sqrt(gamma * gamma + 4.0 * a * a);
    const double alpha = 0.5 * (gamma - disc), beta = 0.5 * (gamma + disc);
    e.measure = SpectralMeasure::from_atoms(
        {{alpha, 0.5 - gamma / (2.0 * disc)}, {beta, 0.5 + gamma / (2.0 * disc)}}, 1.0);
    e.f_closed = TransformHandle(
        Role::ReciprocalF, [gamma, a](Complex z) { return z - gamma - a / z; }, 0.0,
        [a](Complex z) { return 1.0 + a / (z * z); });
    e.k_closed = [](double) { return 0.0; };
    e.triplet_closed = LevyTriplet{a, {}, {}, gamma};
    e.sd_expected = true;
    return e;
}

CatalogEntry boolean_stable(double alpha, double rho) {
    const bool ok = (alpha > 0.0 && alpha <= 1.0 && rho >= 0.0 && rho <= 1.0) ||
                    (alpha > 1.0 && alpha <= 2.0 && rho >= 1.0 - 1.0 / alpha &&
                     rho <= 1.0 / alpha);
    if (!ok)
        throw DomainError(
            "boolean_stable: (alpha,rho) outside the admissible set "
            "{alpha in (0,1], rho in [0,1]} u {alpha in (1,2], rho in [1-1/alpha, 1/alpha]}");
    auto e = base_entry("boolean-stable", {{"alpha", alpha}, {"rho", rho}});
    const Complex rot = std::polar(1.0, rho * kPi);

    e.f_closed = TransformHandle(
        Role::ReciprocalF,
        [alpha, rot](Complex w) { return w * (1.0 + std::pow(rot / w, alpha)); }, 0.0,
        [alpha, rot](Complex w) { return 1.0 + (1.0 - alpha) * std::pow(rot / w, alpha); });

    const double cpos = std::sin(alpha * rho * kPi) / kPi;
    const double cneg = std::sin(alpha * (1.0 - rho) * kPi) / kPi;
    e.k_closed = [alpha, cpos, cneg](double x) {
        const double c = x > 0.0 ? cpos : cneg;
        return c * std::pow(std::fabs(x), -alpha);
    };
    e.k_alpha = cneg > 1e-15 ? -kInf : 0.0;
    e.k_beta = cpos > 1e-15 ? kInf : 0.0;
    e.profile_window_lo = -30.0;
    e.profile_window_hi = 30.0;

    // x > 0 density sin(a r pi) x^{a-1} / (pi [x^{2a} + 2 x^a cos(a r pi) + 1]),
    // mirrored with rho -> 1-rho for x < 0; boundary parameters contribute a
    // point mass 1/alpha at +-1 when alpha rho = 1 (resp. alpha (1-rho) = 1)
    std::vector<Atom> atoms;
    std::vector<Interval> support;
    const double tpos = alpha * rho * kPi, tneg = alpha * (1.0 - rho) * kPi;
    if (std::fabs(alpha * rho - 1.0) < 1e-14) atoms.push_back({1.0, 1.0 / alpha});
    else if (cpos > 1e-15) support.push_back({0.0, kInf});
    if (std::fabs(alpha * (1.0 - rho) - 1.0) < 1e-14) atoms.push_back({-1.0, 1.0 / alpha});
    else if (cneg > 1e-15) support.push_back({-kInf, 0.0});
    Density dens;
    if (!support.empty()) {
        dens = [alpha, tpos, tneg](double x) {
            if (x == 0.0) return 0.0;
            const double ax = std::fabs(x);
            const double th = x > 0.0 ? tpos : tneg;
            const double xa = std::pow(ax, alpha);
            return std::sin(th) * std::pow(ax, alpha - 1.0) /
                   (kPi * (xa * xa + 2.0 * xa * std::cos(th) + 1.0));
        };
    }
    e.measure = SpectralMeasure(std::move(atoms), std::move(dens), std::move(support), 1.0);
    e.sd_expected = true;
    return e;
}

CatalogEntry free_half_stable() {
    auto e = base_entry("free-half-stable", {});
    e.f_closed = TransformHandle(
        Role::ReciprocalF,
        [](Complex z) { return 0.5 * (2.0 * z - 1.0 - std::sqrt(1.0 - 4.0 * z)); }, 0.0,
        [](Complex z) { return 1.0 + 1.0 / std::sqrt(1.0 - 4.0 * z); });
    e.k_closed = [](double x) {
        return x >= 0.25 ? std::sqrt(4.0 * x - 1.0) / (2.0 * kPi * x) : 0.0;
    };
    e.k_alpha = 0.25;
    e.k_beta = kInf;
    e.profile_window_lo = 0.0;
    e.profile_window_hi = 40.0;
    e.measure = SpectralMeasure(
        {},
        [](double x) { return x > 0.25 ? std::sqrt(4.0 * x - 1.0) / (2.0 * kPi * x * x) : 0.0; },
        {{0.25, kInf}}, 1.0);
    e.sd_expected = false;
    return e;
}

CatalogEntry free_poisson(double lambda) {
    if (!(lambda > 0.0)) throw DomainError("free_poisson: need lambda > 0");
    auto e = base_entry("mp", {{"lambda", lambda}});
    const double sl = std::sqrt(lambda);
    const double a = (1.0 - sl) * (1.0 - sl), b = (1.0 + sl) * (1.0 + sl);
    e.f_closed = TransformHandle(
        Role::ReciprocalF,
        [lambda, a, b](Complex z) { return 0.5 * (z + 1.0 - lambda + sqrt_pair(z, a, b)); }, 0.0,
        [a, b](Complex z) {
            return 0.5 * (1.0 + (z - 0.5 * (a + b)) / sqrt_pair(z, a, b));
        });
    e.k_closed = [a, b](double x) {
        if (x <= a || x >= b || x == 0.0) return 0.0;
        return std::sqrt((x - a) * (b - x)) / (2.0 * kPi * x);
    };
    e.k_alpha = a;
    e.k_beta = b;
    std::vector<Atom> atoms;
    if (lambda < 1.0) atoms.push_back({0.0, 1.0 - lambda});
    e.measure = SpectralMeasure(
        std::move(atoms),
        [a, b](double x) {
            if (x <= a || x >= b) return 0.0;
            return std::sqrt((x - a) * (b - x)) / (2.0 * kPi * x);
        },
        {{a, b}}, 1.0);
    e.sd_expected = (lambda == 1.0);
    return e;
}

CatalogEntry semicircle(double m, double sigma2) {
    if (!(sigma2 > 0.0)) throw DomainError("semicircle: need sigma2 > 0");
    auto e = base_entry("semicircle", {{"m", m}, {"sigma2", sigma2}});
    const double s = std::sqrt(sigma2);
    const double lo = m - 2.0 * s, hi = m + 2.0 * s;
    e.f_closed = TransformHandle(
        Role::ReciprocalF,
        [m, lo, hi](Complex z) { return 0.5 * (z - m + sqrt_pair(z, lo, hi)); }, 0.0,
        [m, lo, hi](Complex z) { return 0.5 * (1.0 + (z - m) / sqrt_pair(z, lo, hi)); });
    e.k_closed = [m, sigma2, lo, hi](double x) {
        if (x <= lo || x >= hi || x == 0.0) return 0.0;
        return std::sqrt(4.0 * sigma2 - (x - m) * (x - m)) / (2.0 * kPi * std::fabs(x));
    };
    e.k_alpha = lo;
    e.k_beta = hi;
    e.measure = SpectralMeasure(
        {},
        [m, sigma2, lo, hi](double x) {
            if (x <= lo || x >= hi) return 0.0;
            return std::sqrt(4.0 * sigma2 - (x - m) * (x - m)) / (2.0 * kPi * sigma2);
        },
        {{lo, hi}}, 1.0);
    e.sd_expected = (lo <= 0.0 && 0.0 <= hi);
    return e;
}

CatalogEntry kesten(double t) {
    if (!(t > 1.0)) throw DomainError("kesten: need t > 1");
    auto e = base_entry("kesten", {{"t", t}});
    const double c = 2.0 * std::sqrt(t - 1.0);
    e.f_closed = TransformHandle(
        Role::ReciprocalF,
        [t, c](Complex z) {
            return ((t - 2.0) * z + t * sqrt_pair(z, -c, c)) / (2.0 * (t - 1.0));
        },
        0.0,
        [t, c](Complex z) {
            return ((t - 2.0) + t * z / sqrt_pair(z, -c, c)) / (2.0 * (t - 1.0));
        });
    e.k_closed = [t, c](double x) {
        if (std::fabs(x) >= c || x == 0.0) return 0.0;
        return t * std::sqrt(4.0 * (t - 1.0) - x * x) / (2.0 * kPi * (t - 1.0) * std::fabs(x));
    };
    e.k_alpha = -c;
    e.k_beta = c;
    std::vector<Atom> atoms;
    if (t < 2.0) {
        atoms.push_back({-t, 0.5 * (2.0 - t)});
        atoms.push_back({t, 0.5 * (2.0 - t)});
    }
    e.measure = SpectralMeasure(
        std::move(atoms),
        [t, c](double x) {
            if (std::fabs(x) >= c) return 0.0;
            return t * std::sqrt(4.0 * (t - 1.0) - x * x) / (2.0 * kPi * (t * t - x * x));
        },
        {{-c, c}}, 1.0);
    e.sd_expected = true;
    return e;
}

CatalogEntry fuss_catalan_boolean(double p) {
    if (!(p >= 1.0 && p <= 2.0)) throw DomainError("fuss_catalan_boolean: need p in [1,2]");
    auto e = base_entry("fuss-catalan", {{"p", p}});
    e.f_closed = TransformHandle(
        Role::ReciprocalF,
        [p](Complex z) { return z * (2.0 - std::pow(1.0 + 1.0 / z, p)); }, 0.0,
        [p](Complex z) {
            const Complex u = 1.0 + 1.0 / z;
            return 2.0 - std::pow(u, p) + (p / z) * std::pow(u, p - 1.0);
        });
    e.k_closed = [p](double x) {
        if (x <= -1.0 || x >= 0.0) return 0.0;
        return -std::sin(p * kPi) / kPi * std::pow((1.0 + x) / (-x), p);
    };
    e.k_alpha = -1.0;
    e.k_beta = 0.0;

    const double atom_x = 1.0 / (std::pow(2.0, 1.0 / p) - 1.0);
    const double atom_w = 1.0 / (p * (2.0 - std::pow(2.0, 1.0 - 1.0 / p)));
    std::vector<Atom> atoms{{atom_x, atom_w}};
    Density dens;
    std::vector<Interval> support;
    if (p < 2.0 && p > 1.0) {
        dens = [p](double x) {
            if (x <= -1.0 || x >= 0.0) return 0.0;
            const double r = std::pow(std::fabs((1.0 + x) / x), p);
            return std::sin(p * kPi) * r /
                   (kPi * x * (4.0 - 4.0 * std::cos(p * kPi) * r + r * r));
        };
        support.push_back({-1.0, 0.0});
    } else if (p == 2.0) {
        // tilde mu(2,2) = B(2,1): the AC part collapses onto 1 - sqrt(2)
        atoms.push_back({1.0 - std::sqrt(2.0), 1.0 - atom_w});
    }
    e.measure = SpectralMeasure(std::move(atoms), std::move(dens), std::move(support), 1.0);

    // Boolean Levy triplet (0, |x|^{-1} k dx, p)
    auto kc = e.k_closed;
    auto ell = [kc](double x) { return (x > -1.0 && x < 0.0) ? std::fabs(x) * kc(x) : 0.0; };
    KProfile prof = KProfile::from_ell(ell, -1.0, 0.0, profile_grid(-1.0 + 1e-9, -1e-6, 301));
    e.triplet_closed = LevyTriplet{0.0, std::move(prof), {}, p};
    e.sd_expected = true;
    return e;
}

CatalogEntry cauchy_dirac_mixture(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("cauchy_dirac_mixture: need p in [0,1]");
    auto e = base_entry("cauchy-dirac-mixture", {{"p", p}});
    const double q = 1.0 - p;
    e.f_closed = TransformHandle(
        Role::ReciprocalF,
        [q](Complex z) { return z * (z + Complex(0.0, 1.0)) / (z + Complex(0.0, q)); }, 0.0,
        [q](Complex z) {
            const Complex d = z + Complex(0.0, q);
            return ((2.0 * z + Complex(0.0, 1.0)) * d - z * (z + Complex(0.0, 1.0))) / (d * d);
        });
    e.k_closed = [p, q](double x) {
        if (x == 0.0) return 0.0;
        return p * std::fabs(x) / (kPi * (x * x + q * q));
    };
    e.k_alpha = p > 0.0 ? -kInf : 0.0;
    e.k_beta = p > 0.0 ? kInf : 0.0;
    e.profile_window_lo = -30.0;
    e.profile_window_hi = 30.0;
    std::vector<Atom> atoms;
    if (p < 1.0) atoms.push_back({0.0, q});
    Density dens;
    std::vector<Interval> support;
    if (p > 0.0) {
        dens = [p](double x) { return p / (kPi * (1.0 + x * x)); };
        support.push_back({-kInf, kInf});
    }
    e.measure = SpectralMeasure(std::move(atoms), std::move(dens), std::move(support), 1.0);
    e.sd_expected = (p == 0.0 || p == 1.0);
    return e;
}

CatalogEntry normal(double m, double v) {
    if (!(v > 0.0)) throw DomainError("normal: need v > 0");
    auto e = base_entry("normal", {{"m", m}, {"v", v}});
    const double s = std::sqrt(v);
    auto g_eval = [m, s](Complex z) { return normal_cauchy((z - m) / s) / s; };
    auto g_deriv = [m, s, v](Complex z) {
        const Complex w = (z - m) / s;
        return (1.0 - w * normal_cauchy(w)) / v;  // G0' = 1 - z G0
    };
    e.f_closed = TransformHandle(
        Role::ReciprocalF, [g_eval](Complex z) { return 1.0 / g_eval(z); }, 0.0,
        [g_eval, g_deriv](Complex z) {
            const Complex g = g_eval(z);
            return -g_deriv(z) / (g * g);
        });
    e.k_closed = [m, s](double x) {
        if (x == 0.0) return 0.0;
        return s * normal_ell((x - m) / s) / std::fabs(x);
    };
    e.k_alpha = -kInf;
    e.k_beta = kInf;
    e.profile_window_lo = -(14.0 + std::fabs(m));
    e.profile_window_hi = 14.0 + std::fabs(m);
    e.measure = SpectralMeasure(
        {},
        [m, v](double x) {
            return std::exp(-0.5 * (x - m) * (x - m) / v) / std::sqrt(2.0 * kPi * v);
        },
        {{-kInf, kInf}}, 1.0);
    if (m == 0.0) {
        auto ell = [](double x) { return normal_ell(x); };
        KProfile prof = KProfile::from_ell(ell, -kInf, kInf, profile_grid(-14.0, 14.0, 401));
        e.triplet_closed = LevyTriplet{0.0, std::move(prof), {}, 0.0};
        e.sd_expected = true;
    } else if (std::fabs(m) / s > 3.0865) {
        e.sd_expected = false;  // beyond the shift threshold of the N(0,1) ell-profile
    }
    return e;
}

CatalogEntry remark_atom_family(double p) {
    if (!(p > 0.0)) throw DomainError("remark_atom_family: need p > 0");
    auto e = base_entry("remark-atom", {{"p", p}});
    const double b = 1.0 - 1.0 / p;  // fixes F(1) = 0
    e.f_closed = TransformHandle(
        Role::ReciprocalF,
        [p, b](Complex z) {
            const double cuts[] = {z.real()};
            const Complex integral = integrate_complex(
                [p, z](double t) { return std::pow(1.0 - t, p) / (t - z); }, 0.0, 1.0,
                {}, cuts);
            return z - b + integral;
        },
        0.0,
        [p](Complex z) {
            const double cuts[] = {z.real()};
            const Complex integral = integrate_complex(
                [p, z](double t) {
                    const Complex d = t - z;
                    return -std::pow(1.0 - t, p) / (d * d);
                },
                0.0, 1.0, {}, cuts);
            return 1.0 + integral;
        });
    e.k_closed = [p](double x) {
        if (x <= 0.0 || x >= 1.0) return 0.0;
        return std::pow(1.0 - x, p) / x;
    };
    e.k_alpha = 0.0;
    e.k_beta = 1.0;
    e.profile_window_lo = 0.0;
    e.profile_window_hi = 1.0;
    auto ell = [p](double x) { return (x > 0.0 && x < 1.0) ? std::pow(1.0 - x, p) : 0.0; };
    KProfile prof = KProfile::from_ell(ell, 0.0, 1.0, profile_grid(1e-6, 1.0 - 1e-9, 301));
    e.triplet_closed = LevyTriplet{0.0, std::move(prof), {}, b};
    e.sd_expected = true;
    return e;
}

CatalogEntry arctan_levy_family() {
    auto e = base_entry("arctan-levy", {});
    e.k_closed = [](double t) {
        if (t == 0.0) return 0.0;
        return (std::atan(t) + 0.5 * kPi) / std::fabs(t);
    };
    e.k_alpha = -kInf;
    e.k_beta = kInf;
    e.profile_window_lo = -60.0;
    e.profile_window_hi = 60.0;
    auto ell = [](double t) { return std::atan(t) + 0.5 * kPi; };
    KProfile prof = KProfile::from_ell(ell, -kInf, kInf, profile_grid(-60.0, 60.0, 401));
    LevyTriplet triplet{0.0, std::move(prof), {}, 0.0};
    e.f_closed = f_from_pair(pair_from_triplet(triplet));
    e.triplet_closed = std::move(triplet);
    e.sd_expected = true;
    return e;
}

// ---------------------------------------------------------------------------

namespace {
struct Family {
    std::string id;
    std::vector<ParamSpec> schema;
    CatalogEntry (*build)(const std::map<std::string, double>&);
};

double get(const std::map<std::string, double>& m, const std::vector<ParamSpec>& schema,
           const std::string& key) {
    if (auto it = m.find(key); it != m.end()) return it->second;
    for (const auto& s : schema)
        if (s.name == key) return s.default_value;
    throw DomainError("missing parameter: " + key);
}

const std::vector<Family>& families() {
    static const std::vector<Family> fams = {
        {"dirac",
         {{"a", 0.0, "finite"}},
         [](const std::map<std::string, double>& p) { return dirac(get(p, param_schema("dirac"), "a")); }},
        {"two-point",
         {{"p", 0.5, "0 < p < 1"}},
         [](const std::map<std::string, double>& p) {
             return two_point(get(p, param_schema("two-point"), "p"));
         }},
        {"bernoulli",
         {},
         [](const std::map<std::string, double>&) {
             auto e = two_point(0.5);
             e.id = "bernoulli";
             return e;
         }},
        {"boolean-gaussian",
         {{"gamma", 0.0, "finite"}, {"a", 1.0, "a > 0"}},
         [](const std::map<std::string, double>& p) {
             const auto& s = param_schema("boolean-gaussian");
             return boolean_gaussian(get(p, s, "gamma"), get(p, s, "a"));
         }},
        {"boolean-stable",
         {{"alpha", 1.5, "in (0,2]"}, {"rho", 0.6, "admissible with alpha"}},
         [](const std::map<std::string, double>& p) {
             const auto& s = param_schema("boolean-stable");
             return boolean_stable(get(p, s, "alpha"), get(p, s, "rho"));
         }},
        {"cauchy",
         {},
         [](const std::map<std::string, double>&) {
             auto e = boolean_stable(1.0, 0.5);
             e.id = "cauchy";
             return e;
         }},
        {"free-half-stable",
         {},
         [](const std::map<std::string, double>&) { return free_half_stable(); }},
        {"mp",
         {{"lambda", 1.0, "lambda > 0"}},
         [](const std::map<std::string, double>& p) {
             return free_poisson(get(p, param_schema("mp"), "lambda"));
         }},
        {"semicircle",
         {{"m", 0.0, "finite"}, {"sigma2", 1.0, "sigma2 > 0"}},
         [](const std::map<std::string, double>& p) {
             const auto& s = param_schema("semicircle");
             return semicircle(get(p, s, "m"), get(p, s, "sigma2"));
         }},
        {"kesten",
         {{"t", 2.0, "t > 1"}},
         [](const std::map<std::string, double>& p) {
             return kesten(get(p, param_schema("kesten"), "t"));
         }},
        {"fuss-catalan",
         {{"p", 1.5, "p in [1,2]"}},
         [](const std::map<std::string, double>& p) {
             return fuss_catalan_boolean(get(p, param_schema("fuss-catalan"), "p"));
         }},
        {"cauchy-dirac-mixture",
         {{"p", 0.5, "p in [0,1]"}},
         [](const std::map<std::string, double>& p) {
             return cauchy_dirac_mixture(get(p, param_schema("cauchy-dirac-mixture"), "p"));
         }},
        {"normal",
         {{"m", 0.0, "finite"}, {"v", 1.0, "v > 0"}},
         [](const std::map<std::string, double>& p) {
             const auto& s = param_schema("normal");
             return normal(get(p, s, "m"), get(p, s, "v"));
         }},
        {"remark-atom",
         {{"p", 2.0, "p > 0"}},
         [](const std::map<std::string, double>& p) {
             return remark_atom_family(get(p, param_schema("remark-atom"), "p"));
         }},
        {"arctan-levy",
         {},
         [](const std::map<std::string, double>&) { return arctan_levy_family(); }},
    };
    return fams;
}
}  // namespace

std::vector<std::string> list_ids() {
    std::vector<std::string> ids;
    for (const auto& f : families()) ids.push_back(f.id);
    return ids;
}

std::vector<ParamSpec> param_schema(const std::string& id) {
    for (const auto& f : families())
        if (f.id == id) return f.schema;
    throw DomainError("unknown catalog id: " + id);
}

CatalogEntry make(const std::string& id, const std::map<std::string, double>& params) {
    for (const auto& f : families()) {
        if (f.id != id) continue;
        for (const auto& [key, _] : params) {
            bool known = false;
            for (const auto& s : f.schema) known = known || s.name == key;
            if (!known)
                throw DomainError("unknown parameter '" + key + "' for catalog id '" + id + "'");
        }
        return f.build(params);
    }
    throw DomainError("unknown catalog id: " + id);
}

}  // namespace boolsd::catalog
