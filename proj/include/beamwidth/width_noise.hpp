#ifndef BEAMWIDTH_WIDTH_NOISE_HPP
#define BEAMWIDTH_WIDTH_NOISE_HPP

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

#include "beamwidth/modes.hpp"
#include "beamwidth/moments.hpp"
#include "beamwidth/states.hpp"

namespace beamwidth {

/// Mean beam width ⟨Ŵ⟩ = D₀₀, the spatial variance of |u|² (units length²).
double mean_width(const TransverseMode& mode, const Quadrature& q);
double mean_width(const TransverseMode& mode);

/// Single-mode width variance
///   ⟨δŴ²⟩ = (1/n̄) [D₀₀² (⟨δn²⟩/n̄ − 1) + F₀₀] = (1/n̄)[D₀₀² Q + F₀₀].
/// Throws std::domain_error for n̄ = 0: the vacuum has undefined relative
/// width noise.
double single_mode_width_variance(const ModeMoments& m, const SingleModeState& state);
double single_mode_width_variance(const TransverseMode& mode, const SingleModeState& state);

/// Width noise relative to a coherent state of equal n̄ in the same mode
/// (reference F₀₀/n̄):  ratio = 1 + (D₀₀²/F₀₀) Q.
double relative_width_noise(const ModeMoments& m, const SingleModeState& state);
double relative_width_noise(const TransverseMode& mode, const SingleModeState& state);

/// The same ratio from the per-family closed forms, as a cross-check of the
/// generic Mandel-Q path.  d2_over_f = D₀₀²/F₀₀.
double relative_width_noise_closed_form(double d2_over_f, const SingleModeState& state);

/// Width variance normalized by the squared mean width: ⟨δŴ²⟩ / ⟨Ŵ⟩².
double relative_noise_by_mean(const ModeMoments& m, const SingleModeState& state);
double relative_noise_by_mean(const TransverseMode& mode, const SingleModeState& state);

/// State moments over a mode basis, as needed by the general variance:
/// second moments ⟨a_i† a_j⟩ and normally ordered fourth moments
/// ⟨a_i† a_k† a_j a_l⟩.
class MomentProvider {
public:
    virtual ~MomentProvider() = default;
    virtual std::size_t mode_count() const = 0;
    virtual Complex second_moment(std::size_t i, std::size_t j) const = 0;
    virtual Complex fourth_moment(std::size_t i, std::size_t k, std::size_t j,
                                  std::size_t l) const = 0;
};

/// Product of coherent states: every normally ordered moment factorizes
/// into conjugated amplitudes.
class CoherentProduct final : public MomentProvider {
public:
    explicit CoherentProduct(std::vector<Complex> amplitudes);
    std::size_t mode_count() const override { return amplitudes_.size(); }
    Complex second_moment(std::size_t i, std::size_t j) const override;
    Complex fourth_moment(std::size_t i, std::size_t k, std::size_t j,
                          std::size_t l) const override;

private:
    std::vector<Complex> amplitudes_;
};

/// One single-mode state in the basis slot `index`, vacuum elsewhere.
/// Uses ⟨a†a†aa⟩ = ⟨n²⟩ − ⟨n⟩ = ⟨δn²⟩ + n̄² − n̄.
class SingleModeEmbedding final : public MomentProvider {
public:
    SingleModeEmbedding(SingleModeState state, std::size_t index, std::size_t mode_count);
    std::size_t mode_count() const override { return count_; }
    Complex second_moment(std::size_t i, std::size_t j) const override;
    Complex fourth_moment(std::size_t i, std::size_t k, std::size_t j,
                          std::size_t l) const override;

private:
    SingleModeState state_;
    std::size_t index_;
    std::size_t count_;
};

/// General beam-width variance over a finite basis:
///   ⟨δŴ²⟩ = (1/N²) [ Σ_{ijkl} D_ij D_kl (⟨a_i†a_k†a_ja_l⟩ − ⟨a_i†a_j⟩⟨a_k†a_l⟩)
///                    + Σ_{il} F_il ⟨a_i†a_l⟩ ],  N = Σ_i ⟨a_i†a_i⟩.
double general_width_variance(const MomentMatrices& m, const MomentProvider& p);

/// Bright mean-field mode for the linearized multimode regime: all other
/// basis modes have zero mean field, and the phase is fixed so that
/// ⟨a₀⟩ = ⟨a₀†⟩ is real.
class MeanField {
public:
    MeanField(TransverseMode mode, double mean_amplitude, double n_all);

    const TransverseMode& mode() const { return mode_; }
    double mean_amplitude() const { return mean_amplitude_; }
    double n_all() const { return n_all_; }

private:
    TransverseMode mode_;
    double mean_amplitude_;
    double n_all_;
};

/// Linearized multimode width variance ⟨δŴ²⟩ = ⟨a₀⟩² (F₀₀/N²) ⟨δ²X⟩, where
/// X = A + A† is the amplitude quadrature of the detection mode and the
/// vacuum/coherent variance convention is ⟨δ²X⟩ = 1.
double linearized_multimode_variance(const MeanField& mf, double f00, double x_variance);

/// Optimal amplitude squeezing at fixed total photon number: minimizes the
/// relative width noise over displaced squeezed states with
/// sinh²s + α² = n̄_total.
struct SqueezingOptimum {
    double s = 0.0;      ///< minimizing squeezing parameter
    double ratio = 1.0;  ///< relative width noise at the optimum
    double alpha_sq = 0.0;
};

SqueezingOptimum optimal_squeezing(const ModeMoments& m, double nbar_total);
SqueezingOptimum optimal_squeezing(const TransverseMode& mode, double nbar_total);

}  // namespace beamwidth

#endif
