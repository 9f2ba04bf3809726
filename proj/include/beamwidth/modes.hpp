#ifndef BEAMWIDTH_MODES_HPP
#define BEAMWIDTH_MODES_HPP

#include <complex>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "beamwidth/quadrature.hpp"

namespace beamwidth {

using Complex = std::complex<double>;

/// Hermite-Gauss mode u_{nx}(x) u_{ny}(y) with
/// u_n(x) = (2/π)^{1/4} (2^n n! w)^{−1/2} H_n(√2 x/w) exp(−x²/w²).
struct HermiteGauss {
    int nx = 0;
    int ny = 0;
};

/// One-dimensional Hermite-Gauss mode u_n(x), unit norm on the line.
struct HermiteGauss1D {
    int n = 0;
};

/// Laguerre-Gauss mode ∝ (√2 r/w)^{|l|} L_p^{|l|}(2r²/w²) exp(−r²/w²) e^{ilφ}.
struct LaguerreGauss {
    int l = 0;
    int p = 0;
};

/// Flattened Gaussian of order N: A_N exp(−r²/w²) Σ_{n≤N} (r²/w²)^n / n!,
/// a finite polynomial × Gaussian approximation of a top-hat profile.
struct FlattenedGaussian {
    int order = 0;
};

/// Complex amplitudes sampled on the nodes of a companion quadrature.
/// Carrier for numerically constructed profiles (detection modes, residual
/// modes, superpositions); inner products use the companion rule's weights.
struct SampledMode {
    std::shared_ptr<const Quadrature> grid;
    std::vector<Complex> values;

    int dimension() const { return grid->dimension(); }
    double norm() const;

    /// Scales values so that norm() == 1; throws on a null profile.
    void normalize();
};

/// ⟨a|b⟩ = Σ_i W_i conj(a_i) b_i on the shared companion grid.
Complex overlap(const SampledMode& a, const SampledMode& b);

/// A normalized transverse mode at the beam waist, in units where the waist
/// w is the only length scale.
class TransverseMode {
public:
    using Family = std::variant<HermiteGauss, HermiteGauss1D, LaguerreGauss,
                                FlattenedGaussian, SampledMode>;

    TransverseMode(HermiteGauss hg, double waist = 1.0);
    TransverseMode(HermiteGauss1D hg, double waist = 1.0);
    TransverseMode(LaguerreGauss lg, double waist = 1.0);
    TransverseMode(FlattenedGaussian fg, double waist = 1.0);
    TransverseMode(SampledMode sampled, double waist = 1.0);

    const Family& family() const { return family_; }
    double waist() const { return waist_; }
    int dimension() const { return dimension_; }
    bool is_analytic() const { return !std::holds_alternative<SampledMode>(family_); }

    /// Normalized amplitude; length^{−1} in 2-D, length^{−1/2} in 1-D.
    /// For 1-D modes y must be 0.  Sampled modes are only defined on their
    /// grid nodes.
    Complex amplitude(double x, double y = 0.0) const;

    /// (∂_x u, ∂_y u); analytic for the closed-form families, grid finite
    /// differences for sampled modes.
    std::pair<Complex, Complex> gradient(double x, double y = 0.0) const;

    /// ∂²_x u + ∂²_y u (1-D: u''), analytic for closed-form families;
    /// sampled modes fall back to finite differences on their grid.
    Complex laplacian(double x, double y = 0.0) const;

    /// Spec string: hg:<nx>,<ny> | hg1d:<n> | lg:<l>,<p> | fg:<N> | sampled.
    std::string label() const;

    /// Total polynomial order (nx+ny, 2p+|l|, N); drives default node counts
    /// and plot extents.  Sampled modes report 0.
    int total_order() const;

private:
    Family family_;
    double waist_ = 1.0;
    int dimension_ = 2;
    double fg_norm_ = 0.0;  // flattened-Gaussian A_N, fixed at construction

    Complex amplitude_sampled(double x, double y) const;
};

/// ∫|u|² (1-D) or ∬|u|² (2-D) evaluated with the supplied rule; ≈ 1 for the
/// analytic families when the rule matches the mode's waist.
double mode_norm(const TransverseMode& mode, const Quadrature& q);

/// Quadrature suited to a mode set: Gauss-Hermite for 1-D or Cartesian 2-D
/// work, polar Gauss-Laguerre when every mode is circularly structured.
/// nodes_override > 0 replaces the default per-axis count (radial rules use
/// twice the per-axis count).
Quadrature default_quadrature(const std::vector<TransverseMode>& modes,
                              int nodes_override = 0);
Quadrature default_quadrature(const TransverseMode& mode, int nodes_override = 0);

/// Parses `hg:<nx>,<ny>`, `hg1d:<n>`, `lg:<l>,<p>`, `fg:<N>`.
/// Throws std::invalid_argument naming the offending token.
TransverseMode parse_mode_spec(const std::string& spec, double waist = 1.0);

/// Half-width of a plotting window that comfortably contains the mode.
double suggested_plot_radius(const TransverseMode& mode);

}  // namespace beamwidth

#endif
