#include "boolsd/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "boolsd/errors.hpp"
#include "boolsd/grid.hpp"
#include "boolsd/quadrature.hpp"

namespace boolsd {

namespace {
constexpr double kMassHintTol = 1e-6;
const double kInf = std::numeric_limits<double>::infinity();
}  // namespace

SpectralMeasure::SpectralMeasure(std::vector<Atom> atoms, Density density,
                                 std::vector<Interval> support, std::optional<double> mass_hint)
    : atoms_(std::move(atoms)),
      density_(std::move(density)),
      support_(std::move(support)),
      mass_hint_(mass_hint) {
    std::sort(atoms_.begin(), atoms_.end(), [](const Atom& a, const Atom& b) { return a.x < b.x; });
    std::sort(support_.begin(), support_.end());
    validate();
}

SpectralMeasure SpectralMeasure::from_atoms(std::vector<Atom> atoms,
                                            std::optional<double> mass_hint) {
    return SpectralMeasure(std::move(atoms), nullptr, {}, mass_hint);
}

SpectralMeasure SpectralMeasure::dirac(double a) { return from_atoms({{a, 1.0}}, 1.0); }

void SpectralMeasure::validate() const {
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (!(atoms_[i].w > 0.0)) throw DomainError("atom mass must be strictly positive");
        if (!std::isfinite(atoms_[i].x)) throw DomainError("atom location must be finite");
        if (i > 0 && atoms_[i].x == atoms_[i - 1].x)
            throw DomainError("atom locations must be pairwise distinct");
    }
    if (density_ && support_.empty())
        throw DomainError("a density requires declared support intervals");
    for (const auto& [lo, hi] : support_)
        if (!(lo < hi)) throw DomainError("support interval must satisfy lo < hi");
    if (density_) {
        for (const auto& [lo, hi] : support_) {
            const double a = std::isinf(lo) ? std::min(hi, 0.0) - 8.0 : lo;
            const double b = std::isinf(hi) ? std::max(a, 0.0) + 8.0 : hi;
            for (int i = 1; i < 16; ++i) {
                const double x = a + (b - a) * i / 16.0;
                if (density_(x) < -1e-12)
                    throw DomainError("density negative at sampled support point");
            }
        }
    }
    if (mass_hint_) {
        const double total = atom_total() + density_total();
        if (std::fabs(total - *mass_hint_) > kMassHintTol)
            throw MassMismatchError("declared mass differs from atoms + integrated density",
                                    *mass_hint_, total);
    }
}

double SpectralMeasure::density_at(double x) const {
    if (!density_) return 0.0;
    for (const auto& [lo, hi] : support_)
        if (x >= lo && x <= hi) return density_(x);
    return 0.0;
}

double SpectralMeasure::atom_mass_at(double x, double match_tol) const {
    for (const auto& a : atoms_)
        if (a.x == x || std::fabs(a.x - x) <= match_tol) return a.w;
    return 0.0;
}

double SpectralMeasure::atom_total() const {
    double s = 0.0;
    for (const auto& a : atoms_) s += a.w;
    return s;
}

double SpectralMeasure::density_total() const {
    if (!density_) return 0.0;
    if (!density_total_cache_) {
        const double zero[] = {0.0};
        density_total_cache_ =
            integrate_over([this](double x) { return density_(x); }, support_, {}, zero);
    }
    return *density_total_cache_;
}

double SpectralMeasure::total_mass() const { return atom_total() + density_total(); }

Interval SpectralMeasure::extent() const {
    if (is_zero()) return {0.0, 0.0};
    double lo = kInf, hi = -kInf;
    for (const auto& a : atoms_) {
        lo = std::min(lo, a.x);
        hi = std::max(hi, a.x);
    }
    for (const auto& [l, h] : support_) {
        lo = std::min(lo, l);
        hi = std::max(hi, h);
    }
    return {lo, hi};
}

DilationFactor::DilationFactor(double factor) : c(factor) {
    if (c == 0.0 || !std::isfinite(c)) throw DomainError("dilation factor must be finite nonzero");
}

SpectralMeasure dilate(const SpectralMeasure& mu, DilationFactor d) {
    const double c = d.c;
    std::vector<Atom> atoms;
    atoms.reserve(mu.atoms().size());
    for (const auto& a : mu.atoms()) atoms.push_back({c * a.x, a.w});
    Density density;
    if (mu.has_density()) {
        density = [inner = mu.density(), c](double y) { return inner(y / c) / std::fabs(c); };
    }
    std::vector<Interval> support;
    support.reserve(mu.support().size());
    for (const auto& [lo, hi] : mu.support()) {
        const double a = c * lo, b = c * hi;
        support.push_back({std::min(a, b), std::max(a, b)});
    }
    return SpectralMeasure(std::move(atoms), std::move(density), std::move(support),
                           mu.mass_hint());
}

SpectralMeasure shift_classical(const SpectralMeasure& mu, double m) {
    std::vector<Atom> atoms;
    atoms.reserve(mu.atoms().size());
    for (const auto& a : mu.atoms()) atoms.push_back({a.x + m, a.w});
    Density density;
    if (mu.has_density()) {
        density = [inner = mu.density(), m](double y) { return inner(y - m); };
    }
    std::vector<Interval> support;
    support.reserve(mu.support().size());
    for (const auto& [lo, hi] : mu.support()) support.push_back({lo + m, hi + m});
    return SpectralMeasure(std::move(atoms), std::move(density), std::move(support),
                           mu.mass_hint());
}

// ---------------------------------------------------------------------------
// KProfile

KProfile KProfile::from_ell(std::function<double(double)> ell_fn, double alpha, double beta,
                            std::span<const double> grid) {
    KProfile p;
    p.alpha = alpha;
    p.beta = beta;
    p.ell_fn = std::move(ell_fn);
    p.grid.assign(grid.begin(), grid.end());
    p.k.reserve(grid.size());
    p.ell.reserve(grid.size());
    p.flags.assign(grid.size(), PointFlag::ok);
    for (double x : p.grid) {
        if (x == 0.0) throw DomainError("KProfile grid must not contain 0");
        const double l = p.ell_fn(x);
        p.ell.push_back(l);
        p.k.push_back(l / std::fabs(x));
    }
    return p;
}

KProfile KProfile::from_samples(std::vector<double> grid, std::vector<double> k_values,
                                std::vector<PointFlag> flags, double support_threshold) {
    if (grid.size() != k_values.size() || grid.size() != flags.size())
        throw DomainError("KProfile samples: mismatched lengths");
    KProfile p;
    p.grid = std::move(grid);
    p.k = std::move(k_values);
    p.flags = std::move(flags);
    p.ell.resize(p.grid.size());
    double lo = 0.0, hi = 0.0;
    bool any = false;
    for (std::size_t i = 0; i < p.grid.size(); ++i) {
        const double x = p.grid[i];
        if (x == 0.0) throw DomainError("KProfile grid must not contain 0");
        if (i > 0 && p.grid[i] <= p.grid[i - 1])
            throw DomainError("KProfile grid must be strictly increasing");
        p.ell[i] = std::isfinite(p.k[i]) ? std::fabs(x) * p.k[i] : 0.0;
        if (std::isfinite(p.k[i]) && p.k[i] > support_threshold) {
            if (!any) { lo = x; hi = x; any = true; }
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
    }
    p.alpha = any ? lo : 0.0;
    p.beta = any ? hi : 0.0;
    // linear interpolant of the ell samples, zero outside the scanned window
    p.ell_fn = [grid = p.grid, ell = p.ell](double x) {
        if (grid.empty() || x < grid.front() || x > grid.back()) return 0.0;
        auto it = std::lower_bound(grid.begin(), grid.end(), x);
        if (it == grid.begin()) return ell.front();
        const std::size_t j = static_cast<std::size_t>(it - grid.begin());
        if (j >= grid.size()) return ell.back();
        const double t = (x - grid[j - 1]) / (grid[j] - grid[j - 1]);
        return (1.0 - t) * ell[j - 1] + t * ell[j];
    };
    return p;
}

double KProfile::ell_at(double x) const {
    if (ell_fn) return ell_fn(x);
    return 0.0;
}

double KProfile::max_finite_k() const {
    double m = 0.0;
    for (std::size_t i = 0; i < k.size(); ++i)
        if (std::isfinite(k[i]) && flags[i] != PointFlag::levy_atom_candidate)
            m = std::max(m, k[i]);
    return m;
}

bool KProfile::is_zero(double threshold) const {
    for (std::size_t i = 0; i < k.size(); ++i)
        if (std::isfinite(k[i]) && k[i] > threshold) return false;
    return true;
}

// ---------------------------------------------------------------------------
// pair <-> triplet

namespace {

// integrand of the gamma <-> b correction against nu_ac, expressed through ell:
//   x (1_{[-1,1]}(x) - 1/(1+x^2)) nu(dx) ->  x ell(x)/(1+x^2)      for |x| <= 1
//                                            -ell(x)/(x (1+x^2))   for |x| >  1
double drift_integrand(double x, const std::function<double(double)>& ell) {
    const double l = ell(x);
    if (l == 0.0) return 0.0;
    if (std::fabs(x) <= 1.0) return x * l / (1.0 + x * x);
    return -l / (x * (1.0 + x * x));
}

double drift_correction(const KProfile& profile, const std::vector<LevyAtom>& atoms) {
    double value = 0.0;
    if (profile.ell_fn && !(profile.alpha == 0.0 && profile.beta == 0.0)) {
        const double cuts[] = {-1.0, 0.0, 1.0};
        const Interval range[] = {{profile.alpha, profile.beta}};
        value += integrate_over([&](double x) { return drift_integrand(x, profile.ell_fn); },
                                range, {}, cuts);
    }
    for (const auto& a : atoms) {
        const double ind = std::fabs(a.x) <= 1.0 ? 1.0 : 0.0;
        value += a.w * a.x * (ind - 1.0 / (1.0 + a.x * a.x));
    }
    return value;
}

void check_condition_T(const LevyTriplet& t) {
    if (!(t.gaussian_a >= 0.0)) throw InvalidTripletError("Gaussian component must be >= 0");
    if (!std::isfinite(t.gamma)) throw InvalidTripletError("gamma must be finite");
    for (const auto& a : t.atoms) {
        if (a.x == 0.0) throw InvalidTripletError("Levy measure must not charge {0}");
        if (!(a.w > 0.0)) throw InvalidTripletError("Levy atom mass must be positive");
    }
    // numeric (1 ^ x^2)-integrability; truncation on unbounded support makes
    // this a soft certificate rather than a proof
    if (t.profile.ell_fn && !(t.profile.alpha == 0.0 && t.profile.beta == 0.0)) {
        const auto& ell = t.profile.ell_fn;
        const double cuts[] = {-1.0, 0.0, 1.0};
        const Interval range[] = {{t.profile.alpha, t.profile.beta}};
        const double val = integrate_over(
            [&](double x) {
                const double l = ell(x);
                return std::fabs(x) <= 1.0 ? l : l / (x * x);
            },
            range, {.abs_tol = 1e-8, .rel_tol = 1e-8}, cuts);
        if (!std::isfinite(val))
            throw InvalidTripletError("(1 ^ x^2)-integral of Levy measure diverges");
    }
}

}  // namespace

LevyTriplet triplet_from_pair(const GeneratingPair& pair) {
    const SpectralMeasure& tau = pair.tau;
    LevyTriplet t;
    t.gaussian_a = tau.atom_mass_at(0.0);

    std::vector<LevyAtom> levy_atoms;
    for (const auto& a : tau.atoms())
        if (a.x != 0.0) levy_atoms.push_back({a.x, a.w * (1.0 + a.x * a.x) / (a.x * a.x)});
    t.atoms = std::move(levy_atoms);

    if (tau.has_density()) {
        double slo = tau.support().front().first;
        double shi = tau.support().back().second;
        auto dens = tau.density();
        auto supp = tau.support();
        auto ell = [dens, supp](double x) {
            for (const auto& [lo, hi] : supp)
                if (x >= lo && x <= hi) return (1.0 + x * x) * dens(x);
            return 0.0;
        };
        const auto grid_pts = [&] {
            const double lo = std::isinf(slo) ? -20.0 : slo;
            const double hi = std::isinf(shi) ? 20.0 : shi;
            return profile_grid(std::min(lo, -1e-4), std::max(hi, 1e-4), 257);
        }();
        t.profile = KProfile::from_ell(ell, slo, shi, grid_pts);
    }

    t.gamma = pair.b + drift_correction(t.profile, t.atoms);
    check_condition_T(t);
    return t;
}

GeneratingPair pair_from_triplet(const LevyTriplet& triplet) {
    check_condition_T(triplet);
    GeneratingPair pair;
    pair.b = triplet.gamma - drift_correction(triplet.profile, triplet.atoms);

    std::vector<Atom> tau_atoms;
    if (triplet.gaussian_a > 0.0) tau_atoms.push_back({0.0, triplet.gaussian_a});
    for (const auto& a : triplet.atoms)
        tau_atoms.push_back({a.x, a.w * a.x * a.x / (1.0 + a.x * a.x)});

    Density tau_density;
    std::vector<Interval> tau_support;
    if (triplet.profile.ell_fn && !(triplet.profile.alpha == 0.0 && triplet.profile.beta == 0.0)) {
        tau_density = [ell = triplet.profile.ell_fn](double x) {
            return ell(x) / (1.0 + x * x);
        };
        tau_support.push_back({triplet.profile.alpha, triplet.profile.beta});
    }
    pair.tau = SpectralMeasure(std::move(tau_atoms), std::move(tau_density),
                               std::move(tau_support));
    return pair;
}

}  // namespace boolsd
