#include "boolsd/convolution.hpp"

#include <cmath>

#include "boolsd/errors.hpp"
#include "boolsd/grid.hpp"

namespace boolsd {

SpectralMeasure scale_mass(const SpectralMeasure& mu, double s) {
    if (!(s > 0.0)) throw DomainError("scale_mass: need s > 0");
    std::vector<Atom> atoms;
    atoms.reserve(mu.atoms().size());
    for (const auto& a : mu.atoms()) atoms.push_back({a.x, s * a.w});
    Density dens;
    if (mu.has_density()) dens = [inner = mu.density(), s](double x) { return s * inner(x); };
    std::optional<double> hint;
    if (mu.mass_hint()) hint = s * *mu.mass_hint();
    return SpectralMeasure(std::move(atoms), std::move(dens),
                           std::vector<Interval>(mu.support()), hint);
}

GeneratingPair pair_scaled(const GeneratingPair& pair, double s) {
    return {s * pair.b, pair.tau.is_zero() ? SpectralMeasure{} : scale_mass(pair.tau, s)};
}

TransformHandle dilate_f(const TransformHandle& f, double c) {
    if (!(c > 0.0)) throw DomainError("dilate_f: need c > 0");
    if (f.role() != Role::ReciprocalF) throw DomainError("dilate_f: expected role F");
    auto eval = [f, c](Complex z) { return c * f(z / c); };
    auto deriv = [f, c](Complex z) { return f.derivative(z / c); };
    return TransformHandle(Role::ReciprocalF, std::move(eval), c * f.domain_floor(),
                           std::move(deriv));
}

TransformHandle boolean_convolve(const TransformHandle& f1, const TransformHandle& f2) {
    if (f1.role() != Role::ReciprocalF || f2.role() != Role::ReciprocalF)
        throw DomainError("boolean_convolve: expected two role-F handles");
    auto eval = [f1, f2](Complex z) { return f1(z) + f2(z) - z; };  // z - K1 - K2
    auto deriv = [f1, f2](Complex z) { return f1.derivative(z) + f2.derivative(z) - 1.0; };
    return TransformHandle(Role::ReciprocalF, std::move(eval),
                           std::max(f1.domain_floor(), f2.domain_floor()), std::move(deriv));
}

TransformHandle sd_decompose(const TransformHandle& f, double c, const SdDecomposeOptions& opt) {
    if (f.role() != Role::ReciprocalF) throw DomainError("sd_decompose: expected role F");
    if (!(c > 0.0 && c < 1.0)) throw DomainError("sd_decompose: need c in (0,1)");

    auto k_c = [f, c](Complex z) {
        const Complex k_full = z - f(z);
        const Complex k_dil = c * (z / c - f(z / c));
        return k_full - k_dil;
    };

    std::vector<KRangeViolation> violations;
    const auto xs = linspace(opt.window_lo, opt.window_hi, opt.probe_points);
    for (double eps : {1e-4, 1e-2, 1e-1}) {
        for (double x : xs) {
            const Complex z(x, eps);
            const double im = k_c(z).imag();
            if (im > opt.violation_tol) violations.push_back({z, im});
        }
    }
    if (!violations.empty())
        throw NotSelfdecomposableError(
            "sd_decompose: cofactor K leaves C- u R (measure is not Boolean "
            "selfdecomposable for this c)",
            std::move(violations));

    auto eval = [f, c, k_c](Complex z) { return z - k_c(z); };
    auto deriv = [f, c](Complex z) {
        // d/dz [z - K(z) + c K(z/c)] with K' = 1 - F'
        const Complex kp_full = 1.0 - f.derivative(z);
        const Complex kp_dil = 1.0 - f.derivative(z / c);
        return 1.0 - kp_full + kp_dil;
    };
    return TransformHandle(Role::ReciprocalF, std::move(eval), f.domain_floor(),
                           std::move(deriv));
}

// ---------------------------------------------------------------------------

FreeHandle bp_forward(const GeneratingPair& pair) {
    FreeHandle h;
    const TransformHandle k = self_energy_from_pair(pair);
    h.phi = TransformHandle(Role::VoiculescuPhi, [k](Complex z) { return k(z); }, 0.0,
                            [k](Complex z) { return k.derivative(z); });
    auto phi = h.phi;
    h.r = TransformHandle(Role::RTransform, [phi](Complex z) { return z * phi(1.0 / z); }, 0.0);
    h.pair = pair;
    return h;
}

namespace {

bool newton_from(const FreeHandle& handle, Complex z, Complex w0, Complex& out) {
    Complex w = w0;
    double res = std::abs(w + handle.phi(w) - z);
    for (int it = 0; it < 200; ++it) {
        if (res < 1e-12) { out = w; return true; }
        const Complex h_val = w + handle.phi(w) - z;
        const Complex dh = 1.0 + handle.phi.derivative(w);
        if (std::abs(dh) < 1e-300) return false;
        const Complex step = h_val / dh;
        double t = 1.0;
        bool moved = false;
        while (t > 1e-8) {
            const Complex cand = w - t * step;
            if (cand.imag() > 0.0) {
                const double r2 = std::abs(cand + handle.phi(cand) - z);
                if (r2 < res) {
                    w = cand;
                    res = r2;
                    moved = true;
                    break;
                }
            }
            t *= 0.5;
        }
        if (!moved) return false;
    }
    out = w;
    return res < 1e-12;
}

}  // namespace

Complex free_f_solve(const FreeHandle& handle, Complex z) {
    if (!(z.imag() > 0.0)) throw DomainError("free_f_solve: z must lie in C+");
    Complex w;
    if (newton_from(handle, z, z, w)) return w;

    // continuation fallback: start high above the axis (phi is tame there)
    // and walk the imaginary part down in halving steps
    double lift = 16.0 * (1.0 + std::abs(z));
    Complex guess = z + Complex(0.0, lift);
    if (!newton_from(handle, z + Complex(0.0, lift), guess, guess))
        throw ConvergenceError("free_f_solve: no convergence at the lifted start");
    while (lift > 0.0) {
        const double next = lift > 1e-9 * (1.0 + std::abs(z)) ? lift * 0.5 : 0.0;
        if (!newton_from(handle, z + Complex(0.0, next), guess, guess))
            throw ConvergenceError("free_f_solve: continuation stalled at lift " +
                                   std::to_string(lift));
        lift = next;
    }
    return guess;
}

TransformHandle free_f_transform(const FreeHandle& handle) {
    auto eval = [handle](Complex z) { return free_f_solve(handle, z); };
    auto deriv = [handle](Complex z) {
        const Complex w = free_f_solve(handle, z);
        return 1.0 / (1.0 + handle.phi.derivative(w));  // dw/dz from w + phi(w) = z
    };
    return TransformHandle(Role::ReciprocalF, std::move(eval), 0.0, std::move(deriv));
}

TransformHandle bp_inverse(const GeneratingPair& pair_of_free) {
    return f_from_pair(pair_of_free);
}

}  // namespace boolsd
