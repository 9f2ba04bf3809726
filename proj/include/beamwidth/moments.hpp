#ifndef BEAMWIDTH_MOMENTS_HPP
#define BEAMWIDTH_MOMENTS_HPP

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "beamwidth/modes.hpp"
#include "beamwidth/quadrature.hpp"

namespace beamwidth {

/// Dense complex matrix, row-major; small basis sizes only.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t n) : n_(n), a_(n * n) {}

    std::size_t size() const { return n_; }
    Complex& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Complex& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    /// Largest |M_ij − conj(M_ji)| before symmetrization.
    double hermiticity_residual() const;

    /// M ← (M + M†)/2; returns the prior residual.
    double hermitize();

private:
    std::size_t n_ = 0;
    std::vector<Complex> a_;
};

/// Spatial and angular-spectrum moment matrices over a finite mode basis:
///   D_ij = ∬ (x²+y²)   u_i* u_j      [length²]
///   F_il = ∬ (x²+y²)²  u_i* u_l      [length⁴]
///   D̃_ij = (1/k²) ∬ ∇u_i*·∇u_j       [dimensionless]
///   F̃_il = (1/k⁴) ∬ (∇²u_i)* ∇²u_l   [dimensionless]
/// (1-D bases use x² and ∂_x in place of the radial forms.)
struct MomentMatrices {
    std::vector<std::string> basis_labels;
    ComplexMatrix d;
    ComplexMatrix f;
    ComplexMatrix d_tilde;
    ComplexMatrix f_tilde;
    double k = 1.0;
    double waist = 1.0;

    /// Asymmetry |M − M†|_max absorbed by the symmetrizing average, per matrix.
    struct Residuals {
        double d = 0, f = 0, d_tilde = 0, f_tilde = 0;
    } residual;
};

/// ∬ (x²+y²)^power u_i* u_j (power 1 → D entries, power 2 → F entries).
/// 1-D modes integrate x^{2 power}.  Throws on dimension mismatch.
Complex spatial_moment(const TransverseMode& ui, const TransverseMode& uj, int power,
                       const Quadrature& q);

/// D̃_ij = (1/k²) ∬ ∇u_i*·∇u_j, the gradient form of the angular spread;
/// equals −(1/k²) ∬ u_i* ∇²u_j for decaying modes.
Complex angular_moment(const TransverseMode& ui, const TransverseMode& uj, double k,
                       const Quadrature& q);

/// F̃_il = (1/k⁴) ∬ (∇²u_i)* ∇²u_l, the doubly integrated-by-parts form of
/// the fourth angular moment.
Complex fourth_angular_moment(const TransverseMode& ui, const TransverseMode& ul, double k,
                              const Quadrature& q);

/// Gram matrix ⟨u_i|u_j⟩ of a basis under the rule q.
ComplexMatrix gram_matrix(const std::vector<TransverseMode>& basis, const Quadrature& q);

/// Assembles all four matrices.  The basis must be pairwise orthonormal
/// within 1e−8 (error names the offending pair); results are hermitized by
/// symmetric averaging with the residual recorded.
MomentMatrices build_matrices(const std::vector<TransverseMode>& basis, double k,
                              const Quadrature& q);

/// ⟨r²⟩ and ⟨r⁴⟩ of |u|² — the (0,0) entries D₀₀ and F₀₀ of a one-mode basis.
struct ModeMoments {
    double r2 = 0;  // mean width  ⟨W⟩ = D₀₀
    double r4 = 0;  // fourth moment F₀₀
};

ModeMoments mode_moments(const TransverseMode& mode, const Quadrature& q);
ModeMoments mode_moments(const TransverseMode& mode);  // default rule

}  // namespace beamwidth

#endif
