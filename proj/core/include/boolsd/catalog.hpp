#ifndef BOOLSD_CATALOG_HPP
#define BOOLSD_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "boolsd/measure.hpp"
#include "boolsd/transforms.hpp"

namespace boolsd::catalog {

// --- special functions for the normal distribution ---------------------------

/// h(z) = int_0^z exp(t^2) dt. Maclaurin series for |z| <= 3, adaptive
/// quadrature along [0, z] otherwise; real arguments take a fast path.
/// Guarded at |z| <= 30.
Complex h_eval(Complex z);
double h_real(double x);

/// Dawson integral exp(-x^2) h(x), stable for all x.
double dawson(double x);

/// G_{N(0,1)}(z) = exp(-z^2/2) [ -i sqrt(pi/2) + sqrt(2) h(z/sqrt(2)) ].
/// Entire in z; exposed for Im z >= 0 (boundary work included).
Complex normal_cauchy(Complex z);

/// f(x) = exp(-x^2/2) [1 + (4/pi) h(x/sqrt(2))^2]; ell_N = c/f with
/// c = pi^-1 sqrt(2/pi). Evaluated through the Dawson integral so large |x|
/// saturates to +inf (ell underflows to 0) instead of overflowing mid-way.
double normal_f(double x);
double normal_f_prime(double x);
double normal_f_second(double x);
double normal_g_prime(double x);  // g(x) = f(sqrt(2) x)

double normal_k(double x);  // x != 0
double normal_ell(double x);
double normal_ell_prime(double x);
double normal_ell_second(double x);
inline constexpr double kNormalEllC = 0.25397454373696383;  // pi^-1 sqrt(2/pi)

// --- catalog entries ----------------------------------------------------------

struct CatalogEntry {
    std::string id;
    std::map<std::string, double> params;
    std::optional<SpectralMeasure> measure;  // absent for families defined via their triplet
    TransformHandle f_closed;
    std::function<double(double)> k_closed;  // null when no closed k is known
    double k_alpha = 0.0, k_beta = 0.0;      // support endpoints of k
    std::optional<LevyTriplet> triplet_closed;
    std::vector<LevyAtom> levy_atoms_closed;  // discrete Levy mass, when any
    std::optional<bool> sd_expected;
    double profile_window_lo = -10.0, profile_window_hi = 10.0;

    /// Exact k/ell profile sampled on a geometric-near-0 grid (closed k only).
    KProfile profile(int n = 481) const;
    bool has_closed_k() const { return static_cast<bool>(k_closed); }
};

CatalogEntry dirac(double a);
CatalogEntry two_point(double p);  // p delta_1 + (1-p) delta_{-1}, p in (0,1)
CatalogEntry boolean_gaussian(double gamma, double a);
CatalogEntry boolean_stable(double alpha, double rho);
CatalogEntry free_half_stable();
CatalogEntry free_poisson(double lambda);
CatalogEntry semicircle(double m, double sigma2);
CatalogEntry kesten(double t);
CatalogEntry fuss_catalan_boolean(double p);  // diagonal r = p in [1,2]
CatalogEntry cauchy_dirac_mixture(double p);
CatalogEntry normal(double m, double v);
CatalogEntry remark_atom_family(double p);
CatalogEntry arctan_levy_family();

/// Registered ids (canonical names used by the CLI).
std::vector<std::string> list_ids();

struct ParamSpec {
    std::string name;
    double default_value;
    std::string constraint;
};
std::vector<ParamSpec> param_schema(const std::string& id);

/// Construct by id; missing parameters take their documented defaults,
/// unknown parameter names raise DomainError.
CatalogEntry make(const std::string& id, const std::map<std::string, double>& params = {});

}  // namespace boolsd::catalog

#endif
