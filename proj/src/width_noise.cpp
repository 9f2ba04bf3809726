#include "beamwidth/width_noise.hpp"

#include <cmath>
#include <stdexcept>

#include "beamwidth/golden_section.hpp"

namespace beamwidth {

namespace {

double require_bright(const SingleModeState& state) {
    const double nbar = mean_photon(state);
    if (nbar <= 0.0)
        throw std::domain_error("vacuum has undefined relative width noise (nbar = 0)");
    return nbar;
}

}  // namespace

double mean_width(const TransverseMode& mode, const Quadrature& q) {
    return spatial_moment(mode, mode, 1, q).real();
}

double mean_width(const TransverseMode& mode) {
    return mean_width(mode, default_quadrature(mode));
}

double single_mode_width_variance(const ModeMoments& m, const SingleModeState& state) {
    const double nbar = require_bright(state);
    return (m.r2 * m.r2 * mandel_q(state) + m.r4) / nbar;
}

double single_mode_width_variance(const TransverseMode& mode, const SingleModeState& state) {
    return single_mode_width_variance(mode_moments(mode), state);
}

double relative_width_noise(const ModeMoments& m, const SingleModeState& state) {
    require_bright(state);
    return 1.0 + (m.r2 * m.r2 / m.r4) * mandel_q(state);
}

double relative_width_noise(const TransverseMode& mode, const SingleModeState& state) {
    return relative_width_noise(mode_moments(mode), state);
}

double relative_width_noise_closed_form(double d2_over_f, const SingleModeState& state) {
    require_bright(state);
    const double c = d2_over_f;
    return std::visit(
        [&](const auto& f) -> double {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Coherent>) {
                return 1.0;
            } else if constexpr (std::is_same_v<T, Fock>) {
                return 1.0 - c;
            } else if constexpr (std::is_same_v<T, SqueezedVacuum>) {
                const double nbar = std::sinh(f.s) * std::sinh(f.s);
                return c * (2.0 * nbar + 1.0) + 1.0;
            } else if constexpr (std::is_same_v<T, DisplacedSqueezed>) {
                const double nsq = std::sinh(f.s) * std::sinh(f.s);
                const double nbar = nsq + f.alpha * f.alpha;
                const double e2s = std::exp(-2.0 * f.s);
                return (-nsq * e2s + 2.0 * nsq * (nsq + 1.0)) * c / nbar +
                       (1.0 + c * (e2s - 1.0));
            } else if constexpr (std::is_same_v<T, Thermal>) {
                return c * f.n_th + 1.0;
            } else {
                const double nbar = f.n_th + f.alpha * f.alpha;
                return c * (2.0 - f.n_th / nbar) * f.n_th + 1.0;
            }
        },
        state.family());
}

double relative_noise_by_mean(const ModeMoments& m, const SingleModeState& state) {
    return single_mode_width_variance(m, state) / (m.r2 * m.r2);
}

double relative_noise_by_mean(const TransverseMode& mode, const SingleModeState& state) {
    return relative_noise_by_mean(mode_moments(mode), state);
}

CoherentProduct::CoherentProduct(std::vector<Complex> amplitudes)
    : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty())
        throw std::invalid_argument("coherent product needs at least one mode");
}

Complex CoherentProduct::second_moment(std::size_t i, std::size_t j) const {
    return std::conj(amplitudes_[i]) * amplitudes_[j];
}

Complex CoherentProduct::fourth_moment(std::size_t i, std::size_t k, std::size_t j,
                                       std::size_t l) const {
    return std::conj(amplitudes_[i]) * std::conj(amplitudes_[k]) * amplitudes_[j] *
           amplitudes_[l];
}

SingleModeEmbedding::SingleModeEmbedding(SingleModeState state, std::size_t index,
                                         std::size_t mode_count)
    : state_(std::move(state)), index_(index), count_(mode_count) {
    if (index_ >= count_)
        throw std::invalid_argument("single-mode embedding index is outside the basis");
}

Complex SingleModeEmbedding::second_moment(std::size_t i, std::size_t j) const {
    if (i == index_ && j == index_) return mean_photon(state_);
    return {};
}

Complex SingleModeEmbedding::fourth_moment(std::size_t i, std::size_t k, std::size_t j,
                                           std::size_t l) const {
    if (i != index_ || k != index_ || j != index_ || l != index_) return {};
    const double nbar = mean_photon(state_);
    // ⟨a†a†aa⟩ = ⟨n(n−1)⟩ = ⟨δn²⟩ + n̄² − n̄
    return photon_number_variance(state_) + nbar * nbar - nbar;
}

double general_width_variance(const MomentMatrices& m, const MomentProvider& p) {
    const std::size_t n = m.d.size();
    if (n == 0) throw std::invalid_argument("general_width_variance: empty moment matrices");
    if (p.mode_count() != n)
        throw std::invalid_argument("moment provider and matrices disagree on basis size");

    double n_all = 0.0;
    for (std::size_t i = 0; i < n; ++i) n_all += p.second_moment(i, i).real();
    if (n_all <= 0.0)
        throw std::domain_error("total photon number is zero; width noise is undefined");

    Complex acc{};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    acc += m.d.at(i, j) * m.d.at(k, l) *
                           (p.fourth_moment(i, k, j, l) -
                            p.second_moment(i, j) * p.second_moment(k, l));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) acc += m.f.at(i, l) * p.second_moment(i, l);
    return acc.real() / (n_all * n_all);
}

MeanField::MeanField(TransverseMode mode, double mean_amplitude, double n_all)
    : mode_(std::move(mode)), mean_amplitude_(mean_amplitude), n_all_(n_all) {
    if (mean_amplitude_ < 0.0)
        throw std::invalid_argument("mean amplitude must be non-negative (phase convention)");
    if (n_all_ < 0.0) throw std::invalid_argument("total photon number must be non-negative");
    if (mean_amplitude_ * mean_amplitude_ > n_all_ * (1.0 + 1e-12))
        throw std::invalid_argument(
            "mean amplitude squared exceeds the total photon number (negative sideband photons)");
}

double linearized_multimode_variance(const MeanField& mf, double f00, double x_variance) {
    if (mf.n_all() <= 0.0)
        throw std::domain_error("total photon number is zero; width noise is undefined");
    if (x_variance < 0.0)
        throw std::invalid_argument("quadrature variance must be non-negative");
    if (f00 < 0.0) throw std::invalid_argument("F00 must be non-negative");
    const double a0 = mf.mean_amplitude();
    return a0 * a0 * f00 / (mf.n_all() * mf.n_all()) * x_variance;
}

SqueezingOptimum optimal_squeezing(const ModeMoments& m, double nbar_total) {
    if (!(nbar_total > 0.0))
        throw std::domain_error("optimal_squeezing requires a positive total photon number");
    const double s_max = std::asinh(std::sqrt(nbar_total));
    auto ratio_at = [&](double s) {
        const double nsq = std::sinh(s) * std::sinh(s);
        const double alpha = std::sqrt(std::max(0.0, nbar_total - nsq));
        return relative_width_noise(m, SingleModeState(DisplacedSqueezed{alpha, s}));
    };
    auto [s, ratio] = bracketed_minimize(ratio_at, 0.0, s_max, 64, 1e-10);
    const double nsq = std::sinh(s) * std::sinh(s);
    return {s, ratio, std::max(0.0, nbar_total - nsq)};
}

SqueezingOptimum optimal_squeezing(const TransverseMode& mode, double nbar_total) {
    return optimal_squeezing(mode_moments(mode), nbar_total);
}

}  // namespace beamwidth
