#include "beamwidth/moments.hpp"

#include <cmath>
#include <stdexcept>
#include <variant>

namespace beamwidth {

namespace {

void check_pair(const TransverseMode& a, const TransverseMode& b, const Quadrature& q) {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("cannot mix 1-D and 2-D modes in a moment integral");
    if (a.dimension() != q.dimension())
        throw std::invalid_argument("mode and quadrature dimensions differ");
    if (std::abs(a.waist() - b.waist()) > 1e-12 * a.waist())
        throw std::invalid_argument("modes must share waist units");
}

// Mode values at every node of q; sampled modes must live on q's grid.
std::vector<Complex> sample_values(const TransverseMode& m, const Quadrature& q) {
    if (const auto* s = std::get_if<SampledMode>(&m.family())) {
        if (!s->grid->same_nodes_as(q))
            throw std::invalid_argument("sampled mode is bound to a different grid");
        return s->values;
    }
    std::vector<Complex> v(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) v[i] = m.amplitude(q.x(i), q.y(i));
    return v;
}

std::vector<std::pair<Complex, Complex>> sample_gradients(const TransverseMode& m,
                                                          const Quadrature& q) {
    std::vector<std::pair<Complex, Complex>> v(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) v[i] = m.gradient(q.x(i), q.y(i));
    return v;
}

std::vector<Complex> sample_laplacians(const TransverseMode& m, const Quadrature& q) {
    std::vector<Complex> v(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) v[i] = m.laplacian(q.x(i), q.y(i));
    return v;
}

}  // namespace

double ComplexMatrix::hermiticity_residual() const {
    double r = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            r = std::max(r, std::abs(at(i, j) - std::conj(at(j, i))));
    return r;
}

double ComplexMatrix::hermitize() {
    const double r = hermiticity_residual();
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i; j < n_; ++j) {
            const Complex avg = 0.5 * (at(i, j) + std::conj(at(j, i)));
            at(i, j) = avg;
            at(j, i) = std::conj(avg);
        }
        at(i, i) = Complex{at(i, i).real(), 0.0};
    }
    return r;
}

Complex spatial_moment(const TransverseMode& ui, const TransverseMode& uj, int power,
                       const Quadrature& q) {
    if (power != 1 && power != 2)
        throw std::invalid_argument("spatial_moment: power must be 1 or 2");
    check_pair(ui, uj, q);
    const auto vi = sample_values(ui, q);
    const auto vj = sample_values(uj, q);
    Complex acc{};
    for (std::size_t n = 0; n < q.size(); ++n) {
        const double r2 = q.dimension() == 1 ? q.x(n) * q.x(n)
                                             : q.x(n) * q.x(n) + q.y(n) * q.y(n);
        const double wgt = power == 1 ? q.weight(n) * r2 : q.weight(n) * r2 * r2;
        acc += wgt * std::conj(vi[n]) * vj[n];
    }
    return acc;
}

Complex angular_moment(const TransverseMode& ui, const TransverseMode& uj, double k,
                       const Quadrature& q) {
    if (!(k > 0.0)) throw std::invalid_argument("wavenumber k must be positive");
    check_pair(ui, uj, q);
    const auto gi = sample_gradients(ui, q);
    const auto gj = sample_gradients(uj, q);
    Complex acc{};
    for (std::size_t n = 0; n < q.size(); ++n)
        acc += q.weight(n) * (std::conj(gi[n].first) * gj[n].first +
                              std::conj(gi[n].second) * gj[n].second);
    return acc / (k * k);
}

Complex fourth_angular_moment(const TransverseMode& ui, const TransverseMode& ul, double k,
                              const Quadrature& q) {
    if (!(k > 0.0)) throw std::invalid_argument("wavenumber k must be positive");
    check_pair(ui, ul, q);
    const auto li = sample_laplacians(ui, q);
    const auto ll = sample_laplacians(ul, q);
    Complex acc{};
    for (std::size_t n = 0; n < q.size(); ++n)
        acc += q.weight(n) * std::conj(li[n]) * ll[n];
    return acc / (k * k * k * k);
}

ComplexMatrix gram_matrix(const std::vector<TransverseMode>& basis, const Quadrature& q) {
    const std::size_t n = basis.size();
    std::vector<std::vector<Complex>> vals(n);
    for (std::size_t i = 0; i < n; ++i) vals[i] = sample_values(basis[i], q);
    ComplexMatrix g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Complex acc{};
            for (std::size_t m = 0; m < q.size(); ++m)
                acc += q.weight(m) * std::conj(vals[i][m]) * vals[j][m];
            g.at(i, j) = acc;
            g.at(j, i) = std::conj(acc);
        }
    }
    return g;
}

MomentMatrices build_matrices(const std::vector<TransverseMode>& basis, double k,
                              const Quadrature& q) {
    if (basis.empty()) throw std::invalid_argument("build_matrices: empty basis");
    if (!(k > 0.0)) throw std::invalid_argument("wavenumber k must be positive");
    const std::size_t n = basis.size();
    for (std::size_t i = 1; i < n; ++i) check_pair(basis[0], basis[i], q);

    const ComplexMatrix g = gram_matrix(basis, q);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double expected = i == j ? 1.0 : 0.0;
            if (std::abs(g.at(i, j) - expected) > 1e-8)
                throw std::invalid_argument("basis is not orthonormal: modes (" +
                                            basis[i].label() + ", " + basis[j].label() +
                                            ") have overlap " +
                                            std::to_string(std::abs(g.at(i, j))));
        }
    }

    std::vector<std::vector<Complex>> vals(n), laps(n);
    std::vector<std::vector<std::pair<Complex, Complex>>> grads(n);
    for (std::size_t i = 0; i < n; ++i) {
        vals[i] = sample_values(basis[i], q);
        grads[i] = sample_gradients(basis[i], q);
        laps[i] = sample_laplacians(basis[i], q);
    }

    MomentMatrices mm;
    mm.k = k;
    mm.waist = basis[0].waist();
    for (const auto& b : basis) mm.basis_labels.push_back(b.label());
    mm.d = ComplexMatrix(n);
    mm.f = ComplexMatrix(n);
    mm.d_tilde = ComplexMatrix(n);
    mm.f_tilde = ComplexMatrix(n);

    const bool one_d = q.dimension() == 1;
    const double k2 = k * k;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex d{}, f{}, dt{}, ft{};
            for (std::size_t m = 0; m < q.size(); ++m) {
                const double r2 =
                    one_d ? q.x(m) * q.x(m) : q.x(m) * q.x(m) + q.y(m) * q.y(m);
                const Complex pair_ij = std::conj(vals[i][m]) * vals[j][m];
                d += q.weight(m) * r2 * pair_ij;
                f += q.weight(m) * r2 * r2 * pair_ij;
                dt += q.weight(m) * (std::conj(grads[i][m].first) * grads[j][m].first +
                                     std::conj(grads[i][m].second) * grads[j][m].second);
                ft += q.weight(m) * std::conj(laps[i][m]) * laps[j][m];
            }
            mm.d.at(i, j) = d;
            mm.f.at(i, j) = f;
            mm.d_tilde.at(i, j) = dt / k2;
            mm.f_tilde.at(i, j) = ft / (k2 * k2);
        }
    }
    mm.residual.d = mm.d.hermitize();
    mm.residual.f = mm.f.hermitize();
    mm.residual.d_tilde = mm.d_tilde.hermitize();
    mm.residual.f_tilde = mm.f_tilde.hermitize();
    return mm;
}

ModeMoments mode_moments(const TransverseMode& mode, const Quadrature& q) {
    ModeMoments mm;
    mm.r2 = spatial_moment(mode, mode, 1, q).real();
    mm.r4 = spatial_moment(mode, mode, 2, q).real();
    return mm;
}

ModeMoments mode_moments(const TransverseMode& mode) {
    return mode_moments(mode, default_quadrature(mode));
}

}  // namespace beamwidth
