#ifndef BOOLSD_MEASURE_HPP
#define BOOLSD_MEASURE_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace boolsd {

struct Atom {
    double x;
    double w;  // > 0
};

using Interval = std::pair<double, double>;
using Density = std::function<double(double)>;

/// A finite positive measure on R: finitely many atoms plus an absolutely
/// continuous part given by a density callable restricted to declared
/// support intervals. Probability measures declare mass_hint = 1. Immutable
/// after construction and safe to share across threads.
class SpectralMeasure {
public:
    SpectralMeasure() = default;  // the zero measure
    SpectralMeasure(std::vector<Atom> atoms, Density density, std::vector<Interval> support,
                    std::optional<double> mass_hint = std::nullopt);

    static SpectralMeasure from_atoms(std::vector<Atom> atoms,
                                      std::optional<double> mass_hint = std::nullopt);
    static SpectralMeasure dirac(double a);

    const std::vector<Atom>& atoms() const { return atoms_; }
    const Density& density() const { return density_; }
    bool has_density() const { return static_cast<bool>(density_); }
    const std::vector<Interval>& support() const { return support_; }
    std::optional<double> mass_hint() const { return mass_hint_; }

    double density_at(double x) const;  // 0 outside support or without density
    double atom_mass_at(double x, double match_tol = 0.0) const;
    double atom_total() const;
    double density_total() const;  // computed lazily once, cached
    double total_mass() const;
    bool is_zero() const { return atoms_.empty() && !density_; }

    /// Width of the smallest interval [lo,hi] containing atoms and support
    /// (infinite ends preserved). Returns {0,0} for the zero measure.
    Interval extent() const;

private:
    void validate() const;

    std::vector<Atom> atoms_;
    Density density_;
    std::vector<Interval> support_;
    std::optional<double> mass_hint_;
    mutable std::optional<double> density_total_cache_;
};

/// c != 0; the push-forward x -> c x.
struct DilationFactor {
    explicit DilationFactor(double factor);
    double c;
};

SpectralMeasure dilate(const SpectralMeasure& mu, DilationFactor c);
SpectralMeasure shift_classical(const SpectralMeasure& mu, double m);

enum class PointFlag : std::uint8_t {
    ok = 0,
    extrapolation_suspect = 1,  // ladder residual above tolerance
    levy_atom_candidate = 2,    // boundary limit diverged
};

/// Sampled (and optionally closed-form) view of the k / ell functions of a
/// Boolean Levy measure: k(x) = |x| d(nu_ac)/dx, ell(x) = |x| k(x).
/// alpha/beta are the support endpoints of k (may be -inf / +inf).
/// ell_fn is the authoritative callable; when the profile came from boundary
/// extrapolation it is the linear interpolant of the ell samples.
struct KProfile {
    std::vector<double> grid;  // strictly increasing, never contains 0
    std::vector<double> k;
    std::vector<double> ell;
    std::vector<PointFlag> flags;
    double alpha = 0.0;
    double beta = 0.0;
    std::function<double(double)> ell_fn;

    static KProfile from_ell(std::function<double(double)> ell_fn, double alpha, double beta,
                             std::span<const double> grid);
    static KProfile from_samples(std::vector<double> grid, std::vector<double> k_values,
                                 std::vector<PointFlag> flags, double support_threshold = 1e-10);

    double ell_at(double x) const;
    double k_at(double x) const { return x == 0.0 ? 0.0 : ell_at(x) / std::abs(x); }
    double max_finite_k() const;
    bool is_zero(double threshold = 1e-12) const;
    std::size_t size() const { return grid.size(); }
};

struct LevyAtom {
    double x;  // != 0
    double w;  // nu({x}) > 0
};

/// Boolean Levy triplet (a, nu, gamma). The absolutely continuous part of nu
/// is carried through the k/ell profile, discrete Levy mass as explicit atoms.
struct LevyTriplet {
    double gaussian_a = 0.0;  // >= 0
    KProfile profile;
    std::vector<LevyAtom> atoms;
    double gamma = 0.0;
};

/// Boolean generating pair (b, tau).
struct GeneratingPair {
    double b = 0.0;
    SpectralMeasure tau;
};

/// a = tau({0}); nu = (1+x^2)/x^2 tau off 0; gamma = b + integral.
LevyTriplet triplet_from_pair(const GeneratingPair& pair);

/// tau = a delta_0 + x^2/(1+x^2) nu; b = gamma - integral. Validates (T).
GeneratingPair pair_from_triplet(const LevyTriplet& triplet);

}  // namespace boolsd

#endif
