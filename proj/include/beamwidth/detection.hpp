#ifndef BEAMWIDTH_DETECTION_HPP
#define BEAMWIDTH_DETECTION_HPP

#include <functional>
#include <string>
#include <vector>

#include "beamwidth/modes.hpp"
#include "beamwidth/moments.hpp"

namespace beamwidth {

/// Expansion coefficients of a profile on an analytic basis, with the
/// captured fraction Σ|c_i|².  The global phase is fixed so that the first
/// basis member with a non-negligible coefficient is real non-negative.
/// A basis order too small to capture the profile sets `warning` instead of
/// failing.
struct Decomposition {
    std::vector<std::string> basis_labels;
    std::vector<Complex> coefficients;
    double completeness = 0.0;
    std::string warning;
};

enum class BasisFamily { hermite_gauss, laguerre_gauss };

/// Width detection mode v₀ = (x²+y²) u₀ / √F₀₀ (1-D: x² u₀ / √F₀₀), sampled
/// on the rule's nodes with unit norm.  The amplitude-quadrature noise of
/// this mode is what drives the beam-width noise of a bright beam in u₀.
SampledMode width_detection_mode(const TransverseMode& u0, const Quadrature& q);

/// Angular-spread detection mode m₀ = −(∂²_x+∂²_y) u₀ / (k² √F̃₀₀), unit norm.
SampledMode angular_detection_mode(const TransverseMode& u0, double k, const Quadrature& q);

/// c_i = ⟨u_i|v⟩ over the basis family up to total order max_order, computed
/// with v's companion quadrature.  1-D profiles decompose on 1-D
/// Hermite-Gauss; 2-D on Hermite-Gauss pairs nx+ny ≤ max_order or
/// Laguerre-Gauss with 2p+|l| ≤ max_order.
Decomposition decompose_on_basis(const SampledMode& v, BasisFamily family, int max_order);

/// Splits the mean field into detection and residual parts:
///   u₀ = (D₀₀/√F₀₀) v₀ + √(1 − D₀₀²/F₀₀) v₁,   ⟨v₀|v₁⟩ = 0.
struct ResidualSplit {
    SampledMode v1;
    double coeff0 = 0.0;  ///< D₀₀/√F₀₀
    double coeff1 = 0.0;  ///< √(1 − D₀₀²/F₀₀)
};

ResidualSplit residual_mode(const TransverseMode& u0, const Quadrature& q);

/// Local maxima of f on [lo, hi]: uniform scan refined by parabolic
/// interpolation through the three bracketing samples.
std::vector<double> find_profile_peaks(const std::function<double(double)>& f, double lo,
                                       double hi, int samples = 2048);

}  // namespace beamwidth

#endif
