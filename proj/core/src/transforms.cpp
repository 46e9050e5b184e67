#include "boolsd/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "boolsd/errors.hpp"
#include "boolsd/grid.hpp"
#include "boolsd/quadrature.hpp"

namespace boolsd {

namespace {
const double kNaN = std::numeric_limits<double>::quiet_NaN();

Complex cauchy_density_part(const SpectralMeasure& mu, Complex z) {
    if (!mu.has_density()) return {0.0, 0.0};
    const double cuts[] = {z.real()};
    return integrate_over_complex(
        [&mu, z](double x) { return mu.density()(x) / (z - x); },
        mu.support(), {}, cuts);
}

Complex cauchy_density_deriv(const SpectralMeasure& mu, Complex z) {
    if (!mu.has_density()) return {0.0, 0.0};
    const double cuts[] = {z.real()};
    return integrate_over_complex(
        [&mu, z](double x) {
            const Complex d = z - x;
            return -mu.density()(x) / (d * d);
        },
        mu.support(), {}, cuts);
}
}  // namespace

Complex TransformHandle::derivative(Complex z) const {
    if (deriv_) return deriv_(z);
    const double h = 1e-6 * std::max(1.0, std::abs(z));
    return (eval_(z + h) - eval_(z - h)) / (2.0 * h);
}

EpsLadder EpsLadder::decades(double first, int rungs) {
    EpsLadder l;
    l.eps.reserve(rungs);
    double e = first;
    for (int i = 0; i < rungs; ++i) {
        l.eps.push_back(e);
        e *= 0.1;
    }
    return l;
}

Extrapolated richardson_limit(std::span<const double> eps, std::span<const double> values) {
    Extrapolated out;
    std::vector<double> xs, fs;
    for (std::size_t i = 0; i < eps.size() && i < values.size(); ++i) {
        if (std::isfinite(values[i])) {
            xs.push_back(eps[i]);
            fs.push_back(values[i]);
        }
    }
    const std::size_t n = xs.size();
    if (n == 0) {
        out.value = kNaN;
        return out;
    }
    if (n == 1) {
        out.value = fs[0];
        out.residual = std::fabs(fs[0]);
        return out;
    }
    // divergence: sustained geometric growth down the tail of the ladder
    if (n >= 3) {
        const double a0 = std::fabs(fs[n - 3]), a1 = std::fabs(fs[n - 2]),
                     a2 = std::fabs(fs[n - 1]);
        if (a2 > 2.0 * a1 && a1 > 2.0 * a0 && a2 > 1e-12) {
            out.diverged = true;
            out.value = fs[n - 1];
            out.residual = std::fabs(fs[n - 1] - fs[n - 2]);
            return out;
        }
    }
    // Neville to eps = 0: linear through the last two rungs, quadratic through
    // the last three; their gap is the reported residual (orders 1-2 only).
    const double lin = fs[n - 1] + (0.0 - xs[n - 1]) * (fs[n - 2] - fs[n - 1]) /
                                        (xs[n - 2] - xs[n - 1]);
    double quad = lin;
    if (n >= 3) {
        const double x0 = xs[n - 3], x1 = xs[n - 2], x2 = xs[n - 1];
        const double f0 = fs[n - 3], f1 = fs[n - 2], f2 = fs[n - 1];
        const double p01 = f1 + (0.0 - x1) * (f0 - f1) / (x0 - x1);
        const double p12 = f2 + (0.0 - x2) * (f1 - f2) / (x1 - x2);
        quad = ((0.0 - x0) * p12 - (0.0 - x2) * p01) / (x2 - x0);
    }
    out.value = quad;
    out.residual = std::fabs(quad - lin);
    out.converged = out.residual <= std::max(1e-8, 1e-5 * std::fabs(quad));
    return out;
}

// ---------------------------------------------------------------------------

Complex cauchy(const SpectralMeasure& mu, Complex z) {
    if (z.imag() <= 0.0) throw DomainError("cauchy: evaluation point must lie in C+");
    Complex g{0.0, 0.0};
    for (const auto& a : mu.atoms()) g += a.w / (z - a.x);
    g += cauchy_density_part(mu, z);
    return g;
}

TransformHandle cauchy_transform(const SpectralMeasure& mu) {
    auto eval = [mu](Complex z) {
        Complex g{0.0, 0.0};
        for (const auto& a : mu.atoms()) g += a.w / (z - a.x);
        return g + cauchy_density_part(mu, z);
    };
    auto deriv = [mu](Complex z) {
        Complex g{0.0, 0.0};
        for (const auto& a : mu.atoms()) {
            const Complex d = z - a.x;
            g -= a.w / (d * d);
        }
        return g + cauchy_density_deriv(mu, z);
    };
    return TransformHandle(Role::CauchyG, std::move(eval), 0.0, std::move(deriv));
}

TransformHandle f_transform(const SpectralMeasure& mu) {
    return f_transform(cauchy_transform(mu));
}

TransformHandle f_transform(const TransformHandle& g) {
    if (g.role() != Role::CauchyG) throw DomainError("f_transform: expected a role-G handle");
    auto eval = [g](Complex z) { return 1.0 / g(z); };
    auto deriv = [g](Complex z) {
        const Complex gz = g(z);
        return -g.derivative(z) / (gz * gz);
    };
    return TransformHandle(Role::ReciprocalF, std::move(eval), g.domain_floor(),
                           std::move(deriv));
}

TransformHandle cauchy_from_f(const TransformHandle& f) {
    if (f.role() != Role::ReciprocalF) throw DomainError("cauchy_from_f: expected role F");
    auto eval = [f](Complex z) { return 1.0 / f(z); };
    auto deriv = [f](Complex z) {
        const Complex fz = f(z);
        return -f.derivative(z) / (fz * fz);
    };
    return TransformHandle(Role::CauchyG, std::move(eval), f.domain_floor(), std::move(deriv));
}

TransformHandle self_energy(const TransformHandle& f) {
    if (f.role() != Role::ReciprocalF) throw DomainError("self_energy: expected role F");
    auto eval = [f](Complex z) { return z - f(z); };
    auto deriv = [f](Complex z) { return 1.0 - f.derivative(z); };
    return TransformHandle(Role::SelfEnergyK, std::move(eval), f.domain_floor(),
                           std::move(deriv));
}

TransformHandle eta_transform(const TransformHandle& f_or_k) {
    TransformHandle k;
    if (f_or_k.role() == Role::ReciprocalF) k = self_energy(f_or_k);
    else if (f_or_k.role() == Role::SelfEnergyK) k = f_or_k;
    else throw DomainError("eta_transform: expected role F or K");
    auto eval = [k](Complex z) { return z * k(1.0 / z); };
    return TransformHandle(Role::Eta, std::move(eval), k.domain_floor());
}

TransformHandle self_energy_from_pair(const GeneratingPair& pair) {
    // K(z) = b + sum w (x + (1+x^2)/(z-x)) + int (1+xz)/(z-x) tau_ac(dx).
    // The density integral uses (1+xz)/(z-x) = -z + (1+z^2)/(z-x), whose
    // pieces are absolutely integrable against a finite tau.
    const SpectralMeasure tau = pair.tau;
    const double b = pair.b;
    const double ac_mass = tau.density_total();
    auto eval = [tau, b, ac_mass](Complex z) {
        Complex k{b, 0.0};
        for (const auto& a : tau.atoms()) k += a.w * (a.x + (1.0 + a.x * a.x) / (z - a.x));
        if (tau.has_density()) {
            const double cuts[] = {z.real()};
            const Complex i1 = integrate_over_complex(
                [&tau, z](double x) { return tau.density()(x) / (z - x); },
                tau.support(), {}, cuts);
            k += -z * ac_mass + (1.0 + z * z) * i1;
        }
        return k;
    };
    auto deriv = [tau, ac_mass](Complex z) {
        Complex dk{0.0, 0.0};
        for (const auto& a : tau.atoms()) {
            const Complex d = z - a.x;
            dk -= a.w * (1.0 + a.x * a.x) / (d * d);
        }
        if (tau.has_density()) {
            const double cuts[] = {z.real()};
            dk += integrate_over_complex(
                [&tau, z](double x) {
                    const Complex d = z - x;
                    return -tau.density()(x) * (1.0 + x * x) / (d * d);
                },
                tau.support(), {}, cuts);
        }
        return dk;
    };
    return TransformHandle(Role::SelfEnergyK, std::move(eval), 0.0, std::move(deriv));
}

TransformHandle f_from_pair(const GeneratingPair& pair) {
    TransformHandle k = self_energy_from_pair(pair);
    auto eval = [k](Complex z) { return z - k(z); };
    auto deriv = [k](Complex z) { return 1.0 - k.derivative(z); };
    return TransformHandle(Role::ReciprocalF, std::move(eval), 0.0, std::move(deriv));
}

// ---------------------------------------------------------------------------

BoundaryProfile stieltjes_invert(const TransformHandle& g, double lo, double hi, int n,
                                 const EpsLadder& ladder) {
    if (g.role() != Role::CauchyG) throw DomainError("stieltjes_invert: expected role G");
    if (n < 2) throw DomainError("stieltjes_invert: need n >= 2");
    BoundaryProfile out;
    out.grid = linspace(lo, hi, n);
    out.values.resize(n);
    out.residuals.resize(n);
    out.flags.assign(n, PointFlag::ok);
    out.epsilon_ladder = ladder.eps;

    parallel_for(n, [&](std::size_t i) {
        const double x = out.grid[i];
        std::vector<double> vals(ladder.eps.size());
        for (std::size_t j = 0; j < ladder.eps.size(); ++j)
            vals[j] = -g(Complex(x, ladder.eps[j])).imag() / M_PI;
        const Extrapolated e = richardson_limit(ladder.eps, vals);
        out.values[i] = e.value;
        out.residuals[i] = e.residual;
        if (e.diverged) out.flags[i] = PointFlag::levy_atom_candidate;
        else if (!e.converged) out.flags[i] = PointFlag::extrapolation_suspect;
    });
    return out;
}

namespace {
TransformHandle as_cauchy(const TransformHandle& h) {
    if (h.role() == Role::CauchyG) return h;
    if (h.role() == Role::ReciprocalF) return cauchy_from_f(h);
    throw DomainError("expected a role-G or role-F handle");
}
}  // namespace

double atom_mass(const TransformHandle& g_or_f, double x0, const EpsLadder& ladder,
                 double threshold) {
    if (!std::isfinite(x0)) throw DomainError("atom_mass: x0 must be finite");
    const TransformHandle g = as_cauchy(g_or_f);
    const std::size_t n = ladder.eps.size();
    std::vector<double> m(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double e = ladder.eps[j];
        m[j] = std::abs(Complex(0.0, e) * g(Complex(x0, e)));
    }
    if (*std::max_element(m.begin(), m.end()) < threshold) return 0.0;

    const Extrapolated ex = richardson_limit(ladder.eps, m);
    if (ex.converged && !ex.diverged)
        return ex.value < threshold ? 0.0 : ex.value;

    // Unconverged ladders: a mass estimate that keeps shrinking down the tail
    // is boundary repulsion (power-law or logarithmic), not an atom. This is
    // what distinguishes e.g. a log-divergent difference quotient of F from a
    // small genuine point mass.
    if (n >= 4) {
        const double tail_drop = m[n - 1] / std::max(m[n - 4], 1e-300);
        const bool still_falling = m[n - 1] < 0.995 * m[n - 2];
        if (tail_drop < 0.9 && still_falling) return 0.0;
    }
    if (ex.diverged)
        throw ConvergenceError("atom_mass: i*eps*G grew along the ladder (not a finite measure?)");
    throw ConvergenceError("atom_mass: ladder did not settle at x0 = " + std::to_string(x0));
}

KProfile k_from_f(const TransformHandle& f, std::span<const double> grid,
                  const EpsLadder& ladder, double support_threshold) {
    if (f.role() != Role::ReciprocalF) throw DomainError("k_from_f: expected role F");
    for (double x : grid)
        if (x == 0.0) throw DomainError("k_from_f: grid must exclude 0");

    std::vector<double> kv(grid.size());
    std::vector<PointFlag> flags(grid.size(), PointFlag::ok);
    parallel_for(grid.size(), [&](std::size_t i) {
        const double x = grid[i];
        std::vector<double> vals(ladder.eps.size());
        for (std::size_t j = 0; j < ladder.eps.size(); ++j)
            vals[j] = f(Complex(x, ladder.eps[j])).imag() / (M_PI * std::fabs(x));
        const Extrapolated e = richardson_limit(ladder.eps, vals);
        if (e.diverged) {
            kv[i] = kNaN;
            flags[i] = PointFlag::levy_atom_candidate;
        } else {
            kv[i] = std::max(e.value, 0.0);
            if (!e.converged) flags[i] = PointFlag::extrapolation_suspect;
        }
    });
    return KProfile::from_samples(std::vector<double>(grid.begin(), grid.end()), std::move(kv),
                                  std::move(flags), support_threshold);
}

double gaussian_component_from_f(const TransformHandle& f, const EpsLadder& ladder,
                                 double threshold) {
    if (f.role() != Role::ReciprocalF)
        throw DomainError("gaussian_component_from_f: expected role F");
    std::vector<double> vals(ladder.eps.size());
    for (std::size_t j = 0; j < ladder.eps.size(); ++j) {
        const double e = ladder.eps[j];
        vals[j] = (-Complex(0.0, e) * f(Complex(0.0, e))).real();
    }
    const Extrapolated ex = richardson_limit(ladder.eps, vals);
    if (ex.diverged)
        throw ConvergenceError("gaussian_component_from_f: ladder diverged");
    if (!ex.converged && std::fabs(ex.value) > threshold && ex.residual > 0.1 * std::fabs(ex.value))
        throw ConvergenceError("gaussian_component_from_f: ladder did not settle");
    return std::fabs(ex.value) < threshold ? 0.0 : std::max(ex.value, 0.0);
}

AcCertificate levy_ac_certificate(const TransformHandle& f, std::span<const double> probe_grid,
                                  std::span<const double> candidate_singular_points,
                                  const EpsLadder& ladder) {
    if (f.role() != Role::ReciprocalF)
        throw DomainError("levy_ac_certificate: expected role F");
    AcCertificate cert;
    cert.gaussian_component = gaussian_component_from_f(f, ladder);
    cert.note =
        "finite-sample certificate: condition (2) probed off C, condition (3) on C\\{0}; "
        "a pole of F at 0 is the Boolean Gaussian component, not a Levy atom";

    auto near_candidate = [&](double x) {
        for (double c : candidate_singular_points)
            if (std::fabs(x - c) < 1e-6) return true;
        return std::fabs(x) < 1e-9;
    };

    for (double x : probe_grid) {
        if (near_candidate(x)) continue;
        std::vector<double> vals(ladder.eps.size());
        for (std::size_t j = 0; j < ladder.eps.size(); ++j)
            vals[j] = f(Complex(x, ladder.eps[j])).imag();
        const Extrapolated e = richardson_limit(ladder.eps, vals);
        AcCertificatePoint p;
        p.x = x;
        p.condition = 2;
        p.estimate = e.value;
        p.pass = !e.diverged && std::isfinite(e.value) && e.value > -1e-8;
        cert.points.push_back(p);
        if (!p.pass) cert.all_pass = false;
    }
    for (double c : candidate_singular_points) {
        if (std::fabs(c) < 1e-9) continue;  // 0 always belongs to C, handled above
        std::vector<double> vals(ladder.eps.size());
        for (std::size_t j = 0; j < ladder.eps.size(); ++j)
            vals[j] = ladder.eps[j] * std::abs(f(Complex(c, ladder.eps[j])));
        const Extrapolated e = richardson_limit(ladder.eps, vals);
        AcCertificatePoint p;
        p.x = c;
        p.condition = 3;
        p.estimate = e.diverged ? vals.back() : e.value;
        const bool falling = vals.back() < 0.5 * vals.front();
        p.pass = !e.diverged && (std::fabs(p.estimate) < 1e-6 || (falling && vals.back() < 1e-4));
        cert.points.push_back(p);
        if (!p.pass) cert.all_pass = false;
    }
    return cert;
}

std::vector<double> detect_levy_atoms(const TransformHandle& f, double lo, double hi,
                                      const EpsLadder& ladder, double threshold) {
    if (f.role() != Role::ReciprocalF) throw DomainError("detect_levy_atoms: expected role F");
    if (!(lo < hi)) throw DomainError("detect_levy_atoms: need lo < hi");
    const double eps0 = ladder.eps.front();
    const int n = std::max(64, static_cast<int>(std::ceil((hi - lo) / (0.5 * eps0))) + 1);
    const auto xs = linspace(lo, hi, n);
    std::vector<double> s(xs.size());
    parallel_for(xs.size(), [&](std::size_t i) { s[i] = f(Complex(xs[i], eps0)).imag(); });

    std::vector<double> found;
    for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
        if (!(s[i] > s[i - 1] && s[i] >= s[i + 1])) continue;
        if (eps0 * s[i] < 10.0 * threshold) continue;  // detection floor of the scan
        // hierarchical refinement: re-center the peak while descending epsilons
        double x = xs[i];
        double bracket = xs[i + 1] - xs[i - 1];
        for (double e : ladder.eps) {
            const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
            double a = x - bracket, b = x + bracket;
            double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
            double f1 = f(Complex(c1, e)).imag(), f2 = f(Complex(c2, e)).imag();
            while (b - a > 0.05 * e) {
                if (f1 < f2) {
                    a = c1; c1 = c2; f1 = f2;
                    c2 = a + gr * (b - a); f2 = f(Complex(c2, e)).imag();
                } else {
                    b = c2; c2 = c1; f2 = f1;
                    c1 = b - gr * (b - a); f1 = f(Complex(c1, e)).imag();
                }
            }
            x = 0.5 * (a + b);
            bracket = 4.0 * e;
        }
        if (std::fabs(x) < 1e-6) continue;  // Gaussian-component pathway, not a Levy atom
        std::vector<double> vals(ladder.eps.size());
        for (std::size_t j = 0; j < ladder.eps.size(); ++j)
            vals[j] = ladder.eps[j] * f(Complex(x, ladder.eps[j])).imag();
        const Extrapolated e = richardson_limit(ladder.eps, vals);
        const double limit = e.diverged ? vals.back() : e.value;
        if (std::isfinite(limit) && limit > threshold) found.push_back(x);
    }
    // merge refinements that collapsed onto the same pole
    std::sort(found.begin(), found.end());
    std::vector<double> merged;
    for (double x : found)
        if (merged.empty() || std::fabs(x - merged.back()) > 1e-5) merged.push_back(x);
    return merged;
}

}  // namespace boolsd
