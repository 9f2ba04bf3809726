#include "beamwidth/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace beamwidth {

namespace detail {

namespace {

// Orthonormal Hermite function φ_n(ξ) = H_n(ξ) e^{−ξ²/2} / (2^n n! √π)^{1/2}.
// Returns φ_n(ξ) and φ_{n−1}(ξ); the Gaussian is folded into φ_0, so values
// stay O(1) for any ξ and the folded weights come out without under/overflow.
// Long double keeps the accumulated recurrence error below the 1e−12
// normalization invariant at high node counts.
void hermite_function_pair(int n, long double xi, long double& fn, long double& fnm1) {
    long double p0 = 0.75112554446494248286L * std::exp(-0.5L * xi * xi);  // π^{-1/4}
    if (n == 0) {
        fn = p0;
        fnm1 = 0.0L;
        return;
    }
    long double p1 = std::sqrt(2.0L) * xi * p0;
    for (int j = 1; j < n; ++j) {
        long double p2 = xi * std::sqrt(2.0L / (j + 1)) * p1 -
                         std::sqrt((long double)(j) / (j + 1)) * p0;
        p0 = p1;
        p1 = p2;
    }
    fn = p1;
    fnm1 = p0;
}

// Laguerre function ℓ_n(t) = L_n(t) e^{−t/2}; the α = 0 Laguerre polynomials
// are orthonormal on (0,∞) with weight e^{−t}.  Returns ℓ_n and ℓ_{n−1}.
void laguerre_function_pair(int n, long double t, long double& fn, long double& fnm1) {
    long double p0 = std::exp(-0.5L * t);
    if (n == 0) {
        fn = p0;
        fnm1 = 0.0L;
        return;
    }
    long double p1 = (1.0L - t) * p0;
    for (int j = 1; j < n; ++j) {
        long double p2 = ((2.0L * j + 1.0L - t) * p1 - j * p0) / (j + 1.0L);
        p0 = p1;
        p1 = p2;
    }
    fn = p1;
    fnm1 = p0;
}

}  // namespace

void gauss_hermite_nodes(int m, std::vector<double>& xi, std::vector<double>& w) {
    if (m < 1) throw std::invalid_argument("Gauss-Hermite rule needs at least one node");
    xi.assign(m, 0.0);
    w.assign(m, 0.0);

    constexpr int max_iter = 200;
    constexpr long double eps = 1e-17L;
    const int half = (m + 1) / 2;

    long double z = 0.0L;
    for (int i = 0; i < half; ++i) {
        // Initial guesses from Numerical Recipes, refined by Newton on φ_m.
        if (i == 0) {
            z = std::sqrt(2.0L * m + 1.0L) - 1.85575L * std::pow(2.0L * m + 1.0L, -1.0L / 6.0L);
        } else if (i == 1) {
            z -= 1.14L * std::pow((long double)(m), 0.426L) / z;
        } else if (i == 2) {
            z = 1.86L * z - 0.86L * xi[0];
        } else if (i == 3) {
            z = 1.91L * z - 0.91L * xi[1];
        } else {
            z = 2.0L * z - xi[i - 2];
        }
        long double fn = 0.0L, fnm1 = 0.0L;
        for (int it = 0; it < max_iter; ++it) {
            hermite_function_pair(m, z, fn, fnm1);
            // φ_m'(ξ) = √(2m) φ_{m−1}(ξ) − ξ φ_m(ξ)
            long double deriv = std::sqrt(2.0L * m) * fnm1 - z * fn;
            long double dz = fn / deriv;
            z -= dz;
            if (std::abs(dz) <= eps * std::max(1.0L, std::abs(z))) break;
        }
        hermite_function_pair(m, z, fn, fnm1);
        xi[i] = double(z);
        xi[m - 1 - i] = -double(z);
        // folded weight: w_i e^{ξ_i²} = 1 / (m φ_{m−1}(ξ_i)²)
        w[i] = double(1.0L / (m * fnm1 * fnm1));
        w[m - 1 - i] = w[i];
    }
    // store ascending
    for (int i = 0; i < m / 2; ++i) {
        std::swap(xi[i], xi[m - 1 - i]);
        std::swap(w[i], w[m - 1 - i]);
    }
}

void gauss_laguerre_nodes(int m, std::vector<double>& t, std::vector<double>& w) {
    if (m < 1) throw std::invalid_argument("Gauss-Laguerre rule needs at least one node");
    t.assign(m, 0.0);
    w.assign(m, 0.0);

    constexpr int max_iter = 200;
    constexpr long double eps = 1e-17L;

    long double z = 0.0L;
    for (int i = 0; i < m; ++i) {
        if (i == 0) {
            z = 3.0L / (1.0L + 2.4L * m);
        } else if (i == 1) {
            z += 15.0L / (1.0L + 2.5L * m);
        } else {
            long double ai = i - 1;
            z += ((1.0L + 2.55L * ai) / (1.9L * ai)) * (z - t[i - 2]);
        }
        long double fn = 0.0L, fnm1 = 0.0L;
        for (int it = 0; it < max_iter; ++it) {
            laguerre_function_pair(m, z, fn, fnm1);
            // ℓ_m'(t) = m (ℓ_m − ℓ_{m−1})/t − ℓ_m/2
            long double deriv = m * (fn - fnm1) / z - 0.5L * fn;
            long double dz = fn / deriv;
            z -= dz;
            if (std::abs(dz) <= eps * std::max(1.0L, std::abs(z))) break;
        }
        laguerre_function_pair(m, z, fn, fnm1);
        t[i] = double(z);
        // folded weight: w_i e^{t_i} = t_i / ((m+1) ℓ_{m+1}(t_i))²
        long double fnp1 = ((2.0L * m + 1.0L - z) * fn - m * fnm1) / (m + 1.0L);
        long double d = (m + 1.0L) * fnp1;
        w[i] = double(z / (d * d));
    }
}

}  // namespace detail

Quadrature Quadrature::gauss_hermite_1d(int nodes_per_axis, double waist) {
    if (waist <= 0.0) throw std::invalid_argument("waist must be positive");
    std::vector<double> xi, wi;
    detail::gauss_hermite_nodes(nodes_per_axis, xi, wi);

    // ξ = √2 x / w: folds the e^{−2x²/w²} decay of mode products into e^{−ξ²}.
    const double scale = waist / std::sqrt(2.0);
    Quadrature q;
    q.scheme_ = Scheme::gauss_hermite_per_axis;
    q.dimension_ = 1;
    q.waist_ = waist;
    q.x_.resize(xi.size());
    q.y_.assign(xi.size(), 0.0);
    q.weights_.resize(xi.size());
    for (std::size_t i = 0; i < xi.size(); ++i) {
        q.x_[i] = scale * xi[i];
        q.weights_[i] = scale * wi[i];
    }
    return q;
}

Quadrature Quadrature::gauss_hermite_2d(int nodes_per_axis, double waist) {
    Quadrature axis = gauss_hermite_1d(nodes_per_axis, waist);
    Quadrature q;
    q.scheme_ = Scheme::gauss_hermite_per_axis;
    q.dimension_ = 2;
    q.waist_ = waist;
    const std::size_t m = axis.size();
    q.x_.reserve(m * m);
    q.y_.reserve(m * m);
    q.weights_.reserve(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            q.x_.push_back(axis.x(i));
            q.y_.push_back(axis.x(j));
            q.weights_.push_back(axis.weight(i) * axis.weight(j));
        }
    }
    return q;
}

Quadrature Quadrature::gauss_laguerre_radial(int radial_nodes, double waist, int angular_nodes) {
    if (waist <= 0.0) throw std::invalid_argument("waist must be positive");
    if (angular_nodes < 1) throw std::invalid_argument("need at least one angular node");
    std::vector<double> t, wt;
    detail::gauss_laguerre_nodes(radial_nodes, t, wt);

    // t = 2r²/w² ⇒ ∬ f dx dy = 2π (w²/4) ∫ f dt for circularly symmetric f.
    const double radial_factor = waist * waist / 4.0;
    const double dphi = 2.0 * std::numbers::pi / angular_nodes;

    Quadrature q;
    q.scheme_ = Scheme::gauss_laguerre_radial;
    q.dimension_ = 2;
    q.angular_ = angular_nodes;
    q.waist_ = waist;
    q.x_.reserve(t.size() * angular_nodes);
    q.y_.reserve(t.size() * angular_nodes);
    q.weights_.reserve(t.size() * angular_nodes);
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double r = waist * std::sqrt(0.5 * t[i]);
        const double wi = radial_factor * wt[i] * dphi;
        for (int a = 0; a < angular_nodes; ++a) {
            const double phi = dphi * a;
            q.x_.push_back(r * std::cos(phi));
            q.y_.push_back(r * std::sin(phi));
            q.weights_.push_back(wi);
        }
    }
    return q;
}

Quadrature Quadrature::tensor_grid(std::vector<double> x, std::vector<double> y,
                                   std::vector<double> weights) {
    if (x.size() != weights.size() || y.size() != weights.size())
        throw std::invalid_argument("tensor grid: node and weight counts differ");
    for (double w : weights)
        if (!(w > 0.0)) throw std::invalid_argument("tensor grid: weights must be positive");
    Quadrature q;
    q.scheme_ = Scheme::tensor_grid;
    q.dimension_ = 2;
    q.x_ = std::move(x);
    q.y_ = std::move(y);
    q.weights_ = std::move(weights);
    return q;
}

Quadrature Quadrature::tensor_grid_1d(std::vector<double> x, std::vector<double> weights) {
    if (x.size() != weights.size())
        throw std::invalid_argument("tensor grid: node and weight counts differ");
    for (double w : weights)
        if (!(w > 0.0)) throw std::invalid_argument("tensor grid: weights must be positive");
    Quadrature q;
    q.scheme_ = Scheme::tensor_grid;
    q.dimension_ = 1;
    q.x_ = std::move(x);
    q.y_.assign(q.x_.size(), 0.0);
    q.weights_ = std::move(weights);
    return q;
}

bool Quadrature::same_nodes_as(const Quadrature& other, double tol) const {
    if (dimension_ != other.dimension_ || size() != other.size()) return false;
    for (std::size_t i = 0; i < size(); ++i) {
        if (std::abs(x_[i] - other.x_[i]) > tol) return false;
        if (dimension_ == 2 && std::abs(y_[i] - other.y_[i]) > tol) return false;
    }
    return true;
}

std::string Quadrature::describe() const {
    switch (scheme_) {
        case Scheme::gauss_hermite_per_axis:
            return (dimension_ == 1 ? "gauss-hermite 1d, " : "gauss-hermite 2d, ") +
                   std::to_string(size()) + " nodes";
        case Scheme::gauss_laguerre_radial:
            return "gauss-laguerre radial, " + std::to_string(size()) + " nodes";
        case Scheme::tensor_grid:
            return "tensor grid, " + std::to_string(size()) + " nodes";
    }
    return "quadrature";
}

}  // namespace beamwidth
