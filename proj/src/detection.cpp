#include "beamwidth/detection.hpp"

#include <cmath>
#include <cstdio>
#include <memory>
#include <stdexcept>

namespace beamwidth {

SampledMode width_detection_mode(const TransverseMode& u0, const Quadrature& q) {
    const double f00 = spatial_moment(u0, u0, 2, q).real();
    if (!(f00 > 0.0)) throw std::domain_error("F00 must be positive to build a detection mode");
    const double scale = 1.0 / std::sqrt(f00);

    SampledMode v0;
    v0.grid = std::make_shared<Quadrature>(q);
    v0.values.resize(q.size());
    const bool one_d = q.dimension() == 1;
    for (std::size_t i = 0; i < q.size(); ++i) {
        const double r2 =
            one_d ? q.x(i) * q.x(i) : q.x(i) * q.x(i) + q.y(i) * q.y(i);
        v0.values[i] = scale * r2 * u0.amplitude(q.x(i), one_d ? 0.0 : q.y(i));
    }
    return v0;
}

SampledMode angular_detection_mode(const TransverseMode& u0, double k, const Quadrature& q) {
    if (!(k > 0.0)) throw std::invalid_argument("wavenumber k must be positive");
    const double ft00 = fourth_angular_moment(u0, u0, k, q).real();
    if (!(ft00 > 0.0))
        throw std::domain_error("Ftilde00 must be positive to build a detection mode");
    const double scale = -1.0 / (k * k * std::sqrt(ft00));

    SampledMode m0;
    m0.grid = std::make_shared<Quadrature>(q);
    m0.values.resize(q.size());
    const bool one_d = q.dimension() == 1;
    for (std::size_t i = 0; i < q.size(); ++i)
        m0.values[i] = scale * u0.laplacian(q.x(i), one_d ? 0.0 : q.y(i));
    return m0;
}

namespace {

std::vector<TransverseMode> decomposition_basis(BasisFamily family, int dimension,
                                                int max_order, double waist) {
    std::vector<TransverseMode> basis;
    if (dimension == 1) {
        if (family != BasisFamily::hermite_gauss)
            throw std::invalid_argument("1-D profiles decompose on Hermite-Gauss only");
        for (int n = 0; n <= max_order; ++n)
            basis.emplace_back(HermiteGauss1D{n}, waist);
        return basis;
    }
    if (family == BasisFamily::hermite_gauss) {
        for (int total = 0; total <= max_order; ++total)
            for (int nx = total; nx >= 0; --nx)
                basis.emplace_back(HermiteGauss{nx, total - nx}, waist);
        return basis;
    }
    for (int total = 0; total <= max_order; ++total)
        for (int l = -total; l <= total; ++l)
            if ((total - std::abs(l)) % 2 == 0)
                basis.emplace_back(LaguerreGauss{l, (total - std::abs(l)) / 2}, waist);
    return basis;
}

}  // namespace

Decomposition decompose_on_basis(const SampledMode& v, BasisFamily family, int max_order) {
    if (!v.grid) throw std::invalid_argument("sampled mode needs a companion quadrature");
    if (max_order < 0) throw std::invalid_argument("max_order must be non-negative");
    const auto& q = *v.grid;
    // basis members up to total order N carry azimuthal harmonics up to N;
    // a radial companion grid must resolve the cross terms
    if (q.scheme() == Quadrature::Scheme::gauss_laguerre_radial &&
        q.angular_nodes() <= 2 * max_order)
        throw std::invalid_argument(
            "companion grid has " + std::to_string(q.angular_nodes()) +
            " angular nodes, too few for a decomposition up to order " +
            std::to_string(max_order) +
            "; rebuild the sampled mode on a grid with more than " +
            std::to_string(2 * max_order) + " angular nodes");
    const auto basis = decomposition_basis(family, q.dimension(), max_order, q.waist());

    Decomposition dec;
    dec.coefficients.reserve(basis.size());
    for (const auto& u : basis) {
        Complex c{};
        const bool one_d = q.dimension() == 1;
        for (std::size_t i = 0; i < q.size(); ++i)
            c += q.weight(i) *
                 std::conj(u.amplitude(q.x(i), one_d ? 0.0 : q.y(i))) * v.values[i];
        dec.basis_labels.push_back(u.label());
        dec.coefficients.push_back(c);
        dec.completeness += std::norm(c);
    }

    // phase convention: lowest-order member with a resolvable coefficient
    // becomes real non-negative
    for (const auto& c : dec.coefficients) {
        if (std::abs(c) > 1e-12) {
            const Complex phase = std::conj(c) / std::abs(c);
            for (auto& ci : dec.coefficients) ci *= phase;
            break;
        }
    }
    if (dec.completeness < 1.0 - 1e-6) {
        char buf[120];
        std::snprintf(buf, sizeof buf,
                      "basis order %d captures only %.6f of the profile; increase max_order",
                      max_order, dec.completeness);
        dec.warning = buf;
    }
    return dec;
}

ResidualSplit residual_mode(const TransverseMode& u0, const Quadrature& q) {
    const double d00 = spatial_moment(u0, u0, 1, q).real();
    const double f00 = spatial_moment(u0, u0, 2, q).real();
    if (!(f00 > 0.0)) throw std::domain_error("F00 must be positive");
    const double c0_sq = d00 * d00 / f00;
    if (c0_sq >= 1.0 - 1e-12)
        throw std::domain_error(
            "mean field mode coincides with its detection mode; no residual mode exists");

    const SampledMode v0 = width_detection_mode(u0, q);

    ResidualSplit out;
    out.coeff0 = d00 / std::sqrt(f00);
    out.coeff1 = std::sqrt(1.0 - c0_sq);
    out.v1.grid = v0.grid;
    out.v1.values.resize(q.size());
    const bool one_d = q.dimension() == 1;
    for (std::size_t i = 0; i < q.size(); ++i) {
        const Complex u = u0.amplitude(q.x(i), one_d ? 0.0 : q.y(i));
        out.v1.values[i] = (u - out.coeff0 * v0.values[i]) / out.coeff1;
    }
    return out;
}

std::vector<double> find_profile_peaks(const std::function<double(double)>& f, double lo,
                                       double hi, int samples) {
    if (samples < 3) samples = 3;
    const double h = (hi - lo) / (samples - 1);
    std::vector<double> fs(samples);
    for (int i = 0; i < samples; ++i) fs[i] = f(lo + h * i);

    std::vector<double> peaks;
    for (int i = 1; i + 1 < samples; ++i) {
        // ties to the left count as rising, so a two-sample plateau (a
        // symmetric maximum between grid points) is reported exactly once
        if (fs[i] >= fs[i - 1] && fs[i] > fs[i + 1] &&
            (fs[i] > fs[i - 1] || (i >= 2 && fs[i] > fs[i - 2]))) {
            // parabola through the three bracketing samples
            const double denom = fs[i - 1] - 2.0 * fs[i] + fs[i + 1];
            double shift = 0.0;
            if (denom != 0.0) shift = 0.5 * (fs[i - 1] - fs[i + 1]) / denom;
            peaks.push_back(lo + h * (i + shift));
        }
    }
    return peaks;
}

}  // namespace beamwidth
