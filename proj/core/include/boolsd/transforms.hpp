#ifndef BOOLSD_TRANSFORMS_HPP
#define BOOLSD_TRANSFORMS_HPP

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "boolsd/measure.hpp"

namespace boolsd {

using Complex = std::complex<double>;

/// Fixed library cutoffs (overridable per call where exposed).
constexpr double kAtomThreshold = 1e-8;
constexpr double kLevySupportThreshold = 1e-10;

enum class Role { CauchyG, ReciprocalF, SelfEnergyK, Eta, VoiculescuPhi, RTransform };

/// An evaluatable analytic map playing one of the roles G, F, K, eta, phi, R.
/// domain_floor is the smallest Im z at which evaluation is numerically
/// trusted; 0 when the map extends continuously to the boundary.
class TransformHandle {
public:
    using Eval = std::function<Complex(Complex)>;

    TransformHandle() = default;
    TransformHandle(Role role, Eval eval, double domain_floor = 0.0, Eval derivative = nullptr)
        : role_(role), eval_(std::move(eval)), deriv_(std::move(derivative)),
          domain_floor_(domain_floor) {}

    Complex operator()(Complex z) const { return eval_(z); }
    /// Analytic derivative when attached, otherwise central differences.
    Complex derivative(Complex z) const;

    Role role() const { return role_; }
    double domain_floor() const { return domain_floor_; }
    bool valid() const { return static_cast<bool>(eval_); }

private:
    Role role_ = Role::CauchyG;
    Eval eval_;
    Eval deriv_;
    double domain_floor_ = 0.0;
};

/// Decreasing epsilon sequence for boundary limits, default decades 1e-2..1e-8.
struct EpsLadder {
    std::vector<double> eps;
    static EpsLadder decades(double first = 1e-2, int rungs = 7);
    double floor() const { return eps.empty() ? 0.0 : eps.back(); }
};

/// Richardson/Neville limit of f(eps) as eps -> 0+ from ladder samples,
/// polynomial orders 1-2. `diverged` is set when the tail keeps growing.
struct Extrapolated {
    double value = 0.0;
    double residual = 0.0;
    bool converged = false;
    bool diverged = false;
};
Extrapolated richardson_limit(std::span<const double> eps, std::span<const double> values);

struct BoundaryProfile {
    std::vector<double> grid;
    std::vector<double> values;     // extrapolated boundary limits
    std::vector<double> residuals;  // per-point extrapolation residual
    std::vector<PointFlag> flags;
    std::vector<double> epsilon_ladder;
};

// --- measure-backed transforms ------------------------------------------------

/// G_mu(z) = int 1/(z-x) dmu(x); exact over atoms, adaptive quadrature over
/// the density (contour split at Re z when it lies inside the support).
Complex cauchy(const SpectralMeasure& mu, Complex z);

TransformHandle cauchy_transform(const SpectralMeasure& mu);
TransformHandle f_transform(const SpectralMeasure& mu);
TransformHandle f_transform(const TransformHandle& g);       // from role G
TransformHandle cauchy_from_f(const TransformHandle& f);     // 1/F
TransformHandle self_energy(const TransformHandle& f);       // K = z - F
TransformHandle eta_transform(const TransformHandle& f_or_k);  // eta(z) = z K(1/z)

/// K(z) = b + int (1+xz)/(z-x) tau(dx): the self-energy attached to a
/// generating pair (also the Voiculescu transform of the free counterpart).
TransformHandle self_energy_from_pair(const GeneratingPair& pair);
TransformHandle f_from_pair(const GeneratingPair& pair);  // z - K

// --- boundary recovery --------------------------------------------------------

/// Density samples -(1/pi) lim Im G(x + i eps) on a window.
BoundaryProfile stieltjes_invert(const TransformHandle& g, double lo, double hi, int n,
                                 const EpsLadder& ladder = EpsLadder::decades());

/// mu({x0}) as the ladder limit of |i eps G(x0 + i eps)|. Accepts a role G or
/// role F handle. Sub-threshold limits and boundary-repulsive decay return 0.
double atom_mass(const TransformHandle& g_or_f, double x0,
                 const EpsLadder& ladder = EpsLadder::decades(1e-2, 8),
                 double threshold = kAtomThreshold);

/// k(x) = lim (1/(pi |x|)) Im F(x + i eps) on the given grid (0 excluded).
/// Divergent points are flagged levy_atom_candidate.
KProfile k_from_f(const TransformHandle& f, std::span<const double> grid,
                  const EpsLadder& ladder = EpsLadder::decades(),
                  double support_threshold = kLevySupportThreshold);

/// Boolean Gaussian component a = -lim i eps F(i eps); clipped to 0 below
/// the atom threshold.
double gaussian_component_from_f(const TransformHandle& f,
                                 const EpsLadder& ladder = EpsLadder::decades(1e-2, 8),
                                 double threshold = kAtomThreshold);

/// Numeric evidence for absolute continuity of the Boolean Levy measure:
/// condition (2): finite boundary limit of Im F off the candidate set C;
/// condition (3): eps F(x + i eps) -> 0 on C \ {0}. Sampling finitely many
/// points, this is evidence, not proof.
struct AcCertificatePoint {
    double x = 0.0;
    int condition = 2;      // 2 or 3
    double estimate = 0.0;  // boundary limit (cond 2) or |eps F| tail (cond 3)
    bool pass = false;
};
struct AcCertificate {
    std::vector<AcCertificatePoint> points;
    bool all_pass = true;
    double gaussian_component = 0.0;  // pole at 0 is reported here, not as a failure
    std::string note;
};
AcCertificate levy_ac_certificate(const TransformHandle& f, std::span<const double> probe_grid,
                                  std::span<const double> candidate_singular_points,
                                  const EpsLadder& ladder = EpsLadder::decades(1e-2, 8));

/// Scan window for real poles of F away from 0 (tau-atoms = discrete Levy
/// mass). Returns refined locations where eps Im F(x+i eps) has a nonzero limit.
std::vector<double> detect_levy_atoms(const TransformHandle& f, double lo, double hi,
                                      const EpsLadder& ladder = EpsLadder::decades(1e-2, 8),
                                      double threshold = kAtomThreshold);

}  // namespace boolsd

#endif
