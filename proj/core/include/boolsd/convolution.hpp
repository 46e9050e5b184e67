#ifndef BOOLSD_CONVOLUTION_HPP
#define BOOLSD_CONVOLUTION_HPP

#include "boolsd/measure.hpp"
#include "boolsd/transforms.hpp"

namespace boolsd {

/// Atom masses and density scaled by s > 0 (tau/n for Boolean roots).
SpectralMeasure scale_mass(const SpectralMeasure& mu, double s);
GeneratingPair pair_scaled(const GeneratingPair& pair, double s);

/// F of the dilated measure: F_{D_c mu}(z) = c F_mu(z/c), c > 0.
TransformHandle dilate_f(const TransformHandle& f, double c);

/// Boolean convolution through K-additivity: F(z) = z - K1(z) - K2(z).
TransformHandle boolean_convolve(const TransformHandle& f1, const TransformHandle& f2);

struct SdDecomposeOptions {
    double window_lo = -8.0, window_hi = 8.0;
    int probe_points = 160;
    double violation_tol = 1e-7;
};

/// Cofactor of the selfdecomposition mu = D_c(mu) ⊎ mu_c:
/// K_{mu_c}(z) = K(z) - c K(z/c). The cofactor's K-range (Im K <= 0) is
/// probed near the axis; violations are thrown as NotSelfdecomposableError,
/// which doubles as an independent not-SD test.
TransformHandle sd_decompose(const TransformHandle& f, double c,
                             const SdDecomposeOptions& opt = {});

/// Voiculescu transform phi (and R) of the free infinitely divisible law
/// sharing the generating pair: the Boolean-to-free Bercovici-Pata bijection
/// realized at the pair level. R(z) = z phi(1/z) agrees with eta_mu on C-.
struct FreeHandle {
    TransformHandle phi;  // role VoiculescuPhi, extends to all of C+
    TransformHandle r;    // role RTransform on C-
    GeneratingPair pair;
};

FreeHandle bp_forward(const GeneratingPair& pair);

/// Solve w + phi(w) = z for w = F_{Lambda_B(mu)}(z), z in C+: damped Newton
/// from w0 = z with iterates kept in C+, |H| < 1e-12; a downward continuation
/// restart covers stiff starts near the axis.
Complex free_f_solve(const FreeHandle& handle, Complex z);
TransformHandle free_f_transform(const FreeHandle& handle);

/// Boolean-side F of the pair (Lambda_B^{-1} at the pair level): F = z - K.
TransformHandle bp_inverse(const GeneratingPair& pair_of_free);

}  // namespace boolsd

#endif
