#ifndef BOOLSD_SD_ANALYSIS_HPP
#define BOOLSD_SD_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "boolsd/catalog.hpp"
#include "boolsd/measure.hpp"
#include "boolsd/transforms.hpp"

namespace boolsd::sd {

using catalog::CatalogEntry;

enum class Verdict { pass, fail, inconclusive };
std::string to_string(Verdict v);

struct UnimodalityReport {
    Verdict verdict = Verdict::pass;
    struct Witness {
        double x1 = 0.0, x2 = 0.0;  // x1 < x2 on the same side of 0
        double k1 = 0.0, k2 = 0.0;
        double gap = 0.0;
    } worst;
    double tolerance = 0.0;  // absolute, after scaling by the profile's k-scale
};

/// Pass iff k is non-decreasing on the negative grid and non-increasing on
/// the positive grid, up to rel_tol * max finite k. Flagged points widen the
/// local tolerance; a witness living on flagged points is inconclusive.
UnimodalityReport unimodality_check(const KProfile& profile, double rel_tol = 1e-6);

struct AtomCensus {
    std::vector<Atom> atoms;
    double mass_at_zero = 0.0;
};

/// Locate atoms of the underlying measure from its F-transform: scans for
/// zeros of F outside (alpha, beta) (the only region Boolean SD measures may
/// charge discretely) and measures them via the i*eps*G ladder; always
/// evaluates the mass at 0. For an SD-certified input more than two atoms or
/// mass at 0 signals a numerical or modeling fault and raises ConvergenceError.
AtomCensus atom_census(const TransformHandle& f, const KProfile& profile,
                       double window_lo, double window_hi, bool sd_certified = false);

struct SdOptions {
    int grid_points = 481;
    double window_lo = 0.0, window_hi = 0.0;  // 0,0 = derive from the input
    EpsLadder ladder = EpsLadder::decades();
    double unimodality_rel_tol = 1e-6;
    double atom_threshold = kAtomThreshold;
    double support_threshold = kLevySupportThreshold;
    std::vector<double> singular_candidates;  // merged with auto-detected poles
};

struct SdReport {
    Verdict verdict = Verdict::inconclusive;
    KProfile profile;
    UnimodalityReport unimodality;
    AcCertificate ac;
    double gaussian_component = 0.0;
    std::vector<double> levy_atom_locations;
    std::string reason;
};

/// Full pipeline: k from boundary values (or the closed form), unimodality,
/// Levy-atom scan, absolute-continuity certificate. A positive Gaussian
/// component is allowed; discrete Levy mass or a non-unimodal k fails.
SdReport check_boolean_sd(const TransformHandle& f, const SdOptions& opt = {});
SdReport check_boolean_sd(const CatalogEntry& entry, const SdOptions& opt = {});
SdReport check_boolean_sd(const SpectralMeasure& mu, const SdOptions& opt = {});

/// ell_{shifted}(t) = ell(t - m). Requires a zero Gaussian component: with
/// one, the shifted measure is never Boolean SD for m != 0 and the refusal
/// says so (thrown as NotSelfdecomposableError).
KProfile shift_profile(const KProfile& profile, double m, double gaussian_component = 0.0);

struct ShiftThresholdReport {
    double m_plus = 0.0;   // +inf when case (2) never applies
    double m_minus = 0.0;  // -inf when case (3) never applies
    struct Pair {
        double a = 0.0, b = 0.0, ell_a = 0.0, ell_b = 0.0;
    } witness_plus, witness_minus;
    bool flat = false;  // case (4): ell grid-constant, SD under every shift
};

/// Grid minimization of (b ell(a) - a ell(b)) / (ell(b) - ell(a)) over pairs
/// with ell(a) < ell(b) (and the mirrored case). Needs >= 200 sampled points
/// unless the profile is empty/flat.
ShiftThresholdReport shift_threshold(const KProfile& profile);

struct NormalThresholdReport {
    double a0 = 0.0;  // minimizer of p on (-inf, 0)
    double m0 = 0.0;  // p(a0)
    std::vector<std::pair<double, double>> p_curve;
    std::vector<double> ell_second_zeros;  // all sign changes found (expected: one)
};

/// p(a) = ell_N(a)/ell_N'(a) - a minimized over [-10, -1e-3] by golden
/// section (|bracket| < 1e-6), cross-validated against the sign change of
/// ell_N'' and against central-difference derivatives.
NormalThresholdReport normal_threshold();

struct ShiftScanEntry {
    double m = 0.0;
    Verdict verdict = Verdict::inconclusive;
    double worst_gap = 0.0;
};

/// Unimodality verdict of the shifted N(0,1) profile for each m (closed-form
/// ell, so verdict(m) = verdict(-m) by symmetry).
std::vector<ShiftScanEntry> normal_shift_scan(std::span<const double> m_grid,
                                              int grid_points = 3001);

}  // namespace boolsd::sd

#endif
