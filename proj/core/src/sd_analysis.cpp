#include "boolsd/sd_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "boolsd/errors.hpp"
#include "boolsd/grid.hpp"

namespace boolsd::sd {

namespace {
const double kInf = std::numeric_limits<double>::infinity();
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        default: return "inconclusive";
    }
}

UnimodalityReport unimodality_check(const KProfile& profile, double rel_tol) {
    UnimodalityReport r;
    r.tolerance = rel_tol * profile.max_finite_k();
    if (profile.is_zero()) return r;  // nu = 0: Dirac / Boolean Gaussian case

    struct Violation {
        double gap = 0.0;
        UnimodalityReport::Witness w;
    };

    // positive side ascending must be non-increasing; negative side ascending
    // must be non-decreasing. A violation is a later point above the running
    // minimum (resp. an earlier maximum above a later value).
    auto scan = [&](bool positive, bool clean_only) {
        Violation v;
        double run = positive ? kInf : -kInf;  // run-min (pos) / run-max (neg)
        double run_x = 0.0;
        int usable = 0;
        for (std::size_t i = 0; i < profile.size(); ++i) {
            const double x = profile.grid[i];
            if (positive != (x > 0.0)) continue;
            if (!std::isfinite(profile.k[i])) continue;
            if (clean_only && profile.flags[i] != PointFlag::ok) continue;
            const double k = profile.k[i];
            if (k > 1e-300) ++usable;
            if (positive) {
                const double gap = k - run;
                if (gap > v.gap) v = {gap, {run_x, x, run, k, gap}};
                if (k < run) { run = k; run_x = x; }
            } else {
                const double gap = run - k;
                if (gap > v.gap) v = {gap, {run_x, x, run, k, gap}};
                if (k > run) { run = k; run_x = x; }
            }
        }
        return std::pair{v, usable};
    };

    auto [pos_clean, pos_n] = scan(true, true);
    auto [neg_clean, neg_n] = scan(false, true);
    const Violation clean = pos_clean.gap >= neg_clean.gap ? pos_clean : neg_clean;

    // sides that carry mass need enough clean samples to certify anything
    auto side_has_mass = [&](bool positive) {
        for (std::size_t i = 0; i < profile.size(); ++i)
            if ((profile.grid[i] > 0.0) == positive && std::isfinite(profile.k[i]) &&
                profile.k[i] > 1e-12)
                return true;
        return false;
    };
    if ((side_has_mass(true) && pos_n < 8) || (side_has_mass(false) && neg_n < 8)) {
        r.verdict = Verdict::inconclusive;
        r.worst = clean.w;
        return r;
    }

    if (clean.gap > r.tolerance) {
        r.verdict = Verdict::fail;
        r.worst = clean.w;
        return r;
    }

    auto [pos_all, pn2] = scan(true, false);
    auto [neg_all, nn2] = scan(false, false);
    (void)pn2; (void)nn2;
    const Violation any = pos_all.gap >= neg_all.gap ? pos_all : neg_all;
    if (any.gap > r.tolerance) {
        // only flagged/contaminated points witness a violation
        r.verdict = Verdict::inconclusive;
        r.worst = any.w;
        return r;
    }
    r.worst = clean.w;
    return r;
}

// ---------------------------------------------------------------------------

namespace {

// real boundary value of F just above the axis
double f_real(const TransformHandle& f, double x) { return f(Complex(x, 1e-11)).real(); }

void scan_zeros(const TransformHandle& f, double lo, double hi, std::vector<double>& zeros) {
    if (!(lo < hi)) return;
    const int n = 600;
    double prev_x = lo, prev_v = f_real(f, lo);
    for (int i = 1; i < n; ++i) {
        const double x = lo + (hi - lo) * i / (n - 1);
        const double v = f_real(f, x);
        if (std::isfinite(prev_v) && std::isfinite(v) && prev_v * v < 0.0) {
            double a = prev_x, b = x, fa = prev_v;
            for (int it = 0; it < 80; ++it) {
                const double m = 0.5 * (a + b);
                const double fm = f_real(f, m);
                if (fa * fm <= 0.0) b = m;
                else { a = m; fa = fm; }
            }
            const double root = 0.5 * (a + b);
            // a sign flip across a pole of F is not a zero
            if (std::fabs(f_real(f, root)) < 1e-2) zeros.push_back(root);
        }
        prev_x = x;
        prev_v = v;
    }
}

}  // namespace

AtomCensus atom_census(const TransformHandle& f, const KProfile& profile, double window_lo,
                       double window_hi, bool sd_certified) {
    AtomCensus census;
    census.mass_at_zero = atom_mass(f, 0.0);

    const double a = profile.alpha, b = profile.beta;
    std::vector<double> zeros;
    const double pad = 1e-9;
    if (!std::isinf(a) && window_lo < a - pad) scan_zeros(f, window_lo, a - pad, zeros);
    if (!std::isinf(b) && window_hi > b + pad) scan_zeros(f, b + pad, window_hi, zeros);
    // support endpoints themselves may carry the delta (Remark-atom family)
    for (double edge : {a, b}) {
        if (std::isinf(edge) || edge == 0.0) continue;
        if (std::fabs(f_real(f, edge)) < 1e-6) zeros.push_back(edge);
    }

    std::sort(zeros.begin(), zeros.end());
    for (double x0 : zeros) {
        if (!census.atoms.empty() && std::fabs(x0 - census.atoms.back().x) < 1e-7) continue;
        const double w = atom_mass(f, x0);
        if (w > kAtomThreshold) census.atoms.push_back({x0, w});
    }
    if (census.mass_at_zero > kAtomThreshold && a < 0.0 && b > 0.0 && sd_certified)
        throw ConvergenceError("atom_census: SD-certified measure carries mass at 0");
    if (sd_certified && census.atoms.size() > 2)
        throw ConvergenceError("atom_census: SD-certified measure shows more than two atoms");
    return census;
}

// ---------------------------------------------------------------------------

namespace {

SdReport run_sd_pipeline(const TransformHandle& f, const KProfile& profile, double lo, double hi,
                         const SdOptions& opt) {
    SdReport rep;
    rep.profile = profile;
    rep.unimodality = unimodality_check(rep.profile, opt.unimodality_rel_tol);
    rep.gaussian_component = gaussian_component_from_f(f, EpsLadder::decades(1e-2, 8),
                                                       opt.atom_threshold);

    std::vector<double> candidates =
        detect_levy_atoms(f, lo, hi, EpsLadder::decades(1e-2, 8), opt.atom_threshold);
    for (double c : opt.singular_candidates) candidates.push_back(c);
    for (std::size_t i = 0; i < rep.profile.size(); ++i)
        if (rep.profile.flags[i] == PointFlag::levy_atom_candidate)
            candidates.push_back(rep.profile.grid[i]);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<double> probe;
    const std::size_t stride = std::max<std::size_t>(1, rep.profile.size() / 32);
    for (std::size_t i = 0; i < rep.profile.size(); i += stride) probe.push_back(rep.profile.grid[i]);
    rep.ac = levy_ac_certificate(f, probe, candidates);

    rep.levy_atom_locations.clear();
    for (const auto& p : rep.ac.points)
        if (p.condition == 3 && !p.pass) rep.levy_atom_locations.push_back(p.x);

    if (!rep.levy_atom_locations.empty()) {
        rep.verdict = Verdict::fail;
        rep.reason = "Boolean Levy measure carries discrete mass (condition (3) fails)";
    } else if (rep.unimodality.verdict == Verdict::fail) {
        rep.verdict = Verdict::fail;
        rep.reason = "k-profile is not unimodal with mode 0";
    } else if (rep.unimodality.verdict == Verdict::inconclusive || !rep.ac.all_pass) {
        rep.verdict = Verdict::inconclusive;
        rep.reason = "extrapolation flags contaminate the certificate";
    } else {
        rep.verdict = Verdict::pass;
        rep.reason = "Levy measure absolutely continuous and k unimodal with mode 0";
    }
    return rep;
}

std::pair<double, double> window_for(const SdOptions& opt, double fallback_lo,
                                     double fallback_hi) {
    if (opt.window_lo != 0.0 || opt.window_hi != 0.0) return {opt.window_lo, opt.window_hi};
    return {fallback_lo, fallback_hi};
}

}  // namespace

SdReport check_boolean_sd(const TransformHandle& f, const SdOptions& opt) {
    auto [lo, hi] = window_for(opt, -10.0, 10.0);
    KProfile profile = k_from_f(f, profile_grid(lo, hi, opt.grid_points), opt.ladder,
                                opt.support_threshold);
    return run_sd_pipeline(f, profile, lo, hi, opt);
}

SdReport check_boolean_sd(const CatalogEntry& entry, const SdOptions& opt) {
    if (!entry.f_closed.valid()) throw DomainError("catalog entry lacks a closed-form F");
    if (!entry.has_closed_k()) return check_boolean_sd(entry.f_closed, opt);
    auto [lo, hi] = window_for(opt, entry.profile_window_lo, entry.profile_window_hi);
    SdOptions local = opt;
    local.window_lo = lo;
    local.window_hi = hi;
    KProfile profile = entry.profile(opt.grid_points);
    SdReport rep = run_sd_pipeline(entry.f_closed, profile, std::min(lo, -2.0),
                                   std::max(hi, 2.0), local);
    // exact profiles have exact endpoints; keep them
    rep.profile.alpha = entry.k_alpha;
    rep.profile.beta = entry.k_beta;
    return rep;
}

SdReport check_boolean_sd(const SpectralMeasure& mu, const SdOptions& opt) {
    const auto ext = mu.extent();
    const double span = (std::isfinite(ext.first) && std::isfinite(ext.second))
                            ? std::max(1.0, ext.second - ext.first)
                            : 10.0;
    const double lo = std::isfinite(ext.first) ? ext.first - 0.5 * span : -10.0;
    const double hi = std::isfinite(ext.second) ? ext.second + 0.5 * span : 10.0;
    SdOptions local = opt;
    if (local.window_lo == 0.0 && local.window_hi == 0.0) {
        local.window_lo = lo;
        local.window_hi = hi;
    }
    return check_boolean_sd(f_transform(mu), local);
}

// ---------------------------------------------------------------------------

KProfile shift_profile(const KProfile& profile, double m, double gaussian_component) {
    if (gaussian_component > kAtomThreshold && m != 0.0)
        throw NotSelfdecomposableError(
            "shift_profile: a positive Boolean Gaussian component makes every shifted "
            "measure (m != 0) fail selfdecomposability; refusing the profile shift",
            {});
    if (m == 0.0) return profile;
    if (!profile.ell_fn) throw DomainError("shift_profile: profile lacks an ell callable");

    auto ell = [inner = profile.ell_fn, m](double t) { return inner(t - m); };
    const double alpha = std::isinf(profile.alpha) ? profile.alpha : profile.alpha + m;
    const double beta = std::isinf(profile.beta) ? profile.beta : profile.beta + m;
    const double lo = std::min(profile.grid.front() + m, -1e-3);
    const double hi = std::max(profile.grid.back() + m, 1e-3);
    const int n = std::max<int>(64, static_cast<int>(profile.size()));
    return KProfile::from_ell(ell, alpha, beta, profile_grid(lo, hi, n));
}

ShiftThresholdReport shift_threshold(const KProfile& profile) {
    ShiftThresholdReport rep;
    rep.m_plus = kInf;
    rep.m_minus = -kInf;

    std::vector<double> xs, ls;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        if (!std::isfinite(profile.k[i])) continue;
        if (profile.flags[i] == PointFlag::levy_atom_candidate) continue;
        xs.push_back(profile.grid[i]);
        ls.push_back(profile.ell[i]);
    }
    const double lmax = ls.empty() ? 0.0 : *std::max_element(ls.begin(), ls.end());
    const double lmin = ls.empty() ? 0.0 : *std::min_element(ls.begin(), ls.end());
    if (lmax < 1e-300 || lmax - lmin <= 1e-9 * lmax) {
        rep.flat = true;  // delta (ell = 0) or Cauchy (ell constant): SD under every shift
        return rep;
    }
    if (xs.size() < 200)
        throw DomainError("shift_threshold: need >= 200 sampled points over the support");

    const double denom_floor = 1e-14 * lmax;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            const double d = ls[j] - ls[i];
            if (d > denom_floor) {  // case (2): ell(a) < ell(b), a < b
                const double v = (xs[j] * ls[i] - xs[i] * ls[j]) / d;
                if (v < rep.m_plus) {
                    rep.m_plus = v;
                    rep.witness_plus = {xs[i], xs[j], ls[i], ls[j]};
                }
            } else if (d < -denom_floor) {  // case (3): ell(c) > ell(d), c < d
                const double v = (xs[i] * ls[j] - xs[j] * ls[i]) / (-d);
                if (v > rep.m_minus) {
                    rep.m_minus = v;
                    rep.witness_minus = {xs[i], xs[j], ls[i], ls[j]};
                }
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------

namespace {
double p_of(double a) {
    // p(a) = ell/ell' - a = -f/f' - a for the standard normal ell = c/f
    return -catalog::normal_f(a) / catalog::normal_f_prime(a) - a;
}
}  // namespace

NormalThresholdReport normal_threshold() {
    NormalThresholdReport rep;
    const double lo = -10.0, hi = -1e-3;

    // cross-check the closed-form ell' against central differences
    for (double a : {-4.0, -2.0, -0.7}) {
        const double h = 1e-5;
        const double cd = (catalog::normal_ell(a + h) - catalog::normal_ell(a - h)) / (2.0 * h);
        const double cf = catalog::normal_ell_prime(a);
        if (std::fabs(cd - cf) > 1e-6 * std::max(1.0, std::fabs(cf)))
            throw ConvergenceError("normal_threshold: ell' closed form and central "
                                   "differences disagree");
    }

    // all sign changes of ell'' on the bracket (expected: exactly one)
    const int ns = 4000;
    double prev_x = lo, prev_s = catalog::normal_ell_second(lo);
    for (int i = 1; i < ns; ++i) {
        const double x = lo + (hi - lo) * i / (ns - 1);
        const double s = catalog::normal_ell_second(x);
        if (prev_s * s < 0.0) {
            double a = prev_x, b = x, fa = prev_s;
            for (int it = 0; it < 80; ++it) {
                const double m2 = 0.5 * (a + b);
                const double fm = catalog::normal_ell_second(m2);
                if (fa * fm <= 0.0) b = m2;
                else { a = m2; fa = fm; }
            }
            rep.ell_second_zeros.push_back(0.5 * (a + b));
        }
        prev_x = x;
        prev_s = s;
    }

    // coarse argmin of p, then golden-section refinement to |bracket| < 1e-6
    int imin = 1;
    double pmin = kInf;
    std::vector<double> grid = linspace(lo, hi, 2000);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = p_of(grid[i]);
        if (v < pmin) { pmin = v; imin = static_cast<int>(i); }
    }
    double a = grid[std::max(0, imin - 1)], b = grid[std::min<int>(grid.size() - 1, imin + 1)];
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
    double f1 = p_of(c1), f2 = p_of(c2);
    while (b - a > 1e-6) {
        if (f1 < f2) {
            b = c2; c2 = c1; f2 = f1;
            c1 = b - gr * (b - a); f1 = p_of(c1);
        } else {
            a = c1; c1 = c2; f1 = f2;
            c2 = a + gr * (b - a); f2 = p_of(c2);
        }
    }
    rep.a0 = 0.5 * (a + b);
    rep.m0 = p_of(rep.a0);

    // p' vanishes with ell'': the minimizer must agree with a sign change
    bool matched = false;
    for (double z : rep.ell_second_zeros) matched = matched || std::fabs(z - rep.a0) < 1e-4;
    if (!matched && !rep.ell_second_zeros.empty())
        throw ConvergenceError("normal_threshold: minimizer does not match any ell'' zero");

    for (double x : linspace(-6.0, -0.2, 233)) rep.p_curve.push_back({x, p_of(x)});
    return rep;
}

std::vector<ShiftScanEntry> normal_shift_scan(std::span<const double> m_grid, int grid_points) {
    std::vector<ShiftScanEntry> out(m_grid.size());
    parallel_for(m_grid.size(), [&](std::size_t i) {
        const double m = m_grid[i];
        auto ell = [m](double t) { return catalog::normal_ell(t - m); };
        const double w = 14.0 + std::fabs(m);
        KProfile prof = KProfile::from_ell(ell, -kInf, kInf, profile_grid(-w, w, grid_points));
        const UnimodalityReport u = unimodality_check(prof);
        out[i] = {m, u.verdict, u.worst.gap};
    });
    return out;
}

}  // namespace boolsd::sd
