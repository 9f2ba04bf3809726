#ifndef BEAMWIDTH_QUADRATURE_HPP
#define BEAMWIDTH_QUADRATURE_HPP

#include <complex>
#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

namespace beamwidth {

/// Quadrature rule for transverse-plane integrals ∫ f dx (1-D) or ∬ f dx dy (2-D).
///
/// Weights absorb the Gaussian weight function, so the rule applies to the
/// integrand as written: ∬ f ≈ Σ_i W_i f(x_i, y_i).  The Gaussian factories
/// are exact for integrands of the form polynomial × exp(−2 r²/w²), which
/// covers every product of two analytic modes with a polynomial weight.
class Quadrature {
public:
    enum class Scheme {
        gauss_hermite_per_axis,  ///< tensor Gauss-Hermite in ξ = √2 x/w
        gauss_laguerre_radial,   ///< Gauss-Laguerre in t = 2r²/w², uniform angles
        tensor_grid,             ///< caller-supplied nodes and weights
    };

    /// 1-D Gauss-Hermite rule with m nodes: exact for p(x)·exp(−2x²/w²),
    /// deg p ≤ 2m−1.
    static Quadrature gauss_hermite_1d(int nodes_per_axis, double waist = 1.0);

    /// Tensor-product 2-D Gauss-Hermite rule, m×m nodes, same exactness per axis.
    static Quadrature gauss_hermite_2d(int nodes_per_axis, double waist = 1.0);

    /// Polar rule: Gauss-Laguerre in t = 2r²/w² times uniform angles.
    /// angular_nodes = 1 places all nodes on the positive x axis and folds the
    /// full 2π into the weights; valid for circularly symmetric integrands only.
    /// With M angular nodes the rule additionally integrates e^{imφ} factors
    /// exactly for |m| < M.
    static Quadrature gauss_laguerre_radial(int radial_nodes, double waist = 1.0,
                                            int angular_nodes = 1);

    /// Explicit rule from caller-supplied nodes and positive weights.
    static Quadrature tensor_grid(std::vector<double> x, std::vector<double> y,
                                  std::vector<double> weights);
    static Quadrature tensor_grid_1d(std::vector<double> x, std::vector<double> weights);

    Scheme scheme() const { return scheme_; }
    int dimension() const { return dimension_; }
    double waist() const { return waist_; }
    std::size_t size() const { return weights_.size(); }

    /// Angular node count of a radial rule (0 for other schemes).  A rule
    /// with M angular nodes integrates e^{imφ} factors exactly for |m| < M.
    int angular_nodes() const { return angular_; }

    double x(std::size_t i) const { return x_[i]; }
    double y(std::size_t i) const { return y_[i]; }  // 0 for 1-D rules
    double weight(std::size_t i) const { return weights_[i]; }

    const std::vector<double>& xs() const { return x_; }
    const std::vector<double>& ys() const { return y_; }
    const std::vector<double>& weights() const { return weights_; }

    /// Σ_i W_i f(node_i) for a callable f(x) in 1-D or f(x, y) in 2-D.
    template <typename F>
    auto integrate(F&& f) const {
        if constexpr (std::is_invocable_v<F&, double, double>) {
            decltype(f(0.0, 0.0)) acc{};
            for (std::size_t i = 0; i < weights_.size(); ++i)
                acc += weights_[i] * f(x_[i], y_[i]);
            return acc;
        } else {
            decltype(f(0.0)) acc{};
            for (std::size_t i = 0; i < weights_.size(); ++i)
                acc += weights_[i] * f(x_[i]);
            return acc;
        }
    }

    /// Two rules are node-compatible when sampled values on one can be
    /// integrated with the other.
    bool same_nodes_as(const Quadrature& other, double tol = 1e-12) const;

    std::string describe() const;

private:
    Quadrature() = default;

    Scheme scheme_ = Scheme::tensor_grid;
    int dimension_ = 2;
    int angular_ = 0;
    double waist_ = 1.0;
    std::vector<double> x_, y_, weights_;
};

namespace detail {

/// Nodes ξ_i and weights of the m-point Gauss-Hermite rule with the weight
/// function folded in: ∫ g(ξ) dξ ≈ Σ W_i g(ξ_i) for g = poly × e^{−ξ²}.
void gauss_hermite_nodes(int m, std::vector<double>& xi, std::vector<double>& w);

/// Same for Gauss-Laguerre on (0,∞): ∫ g(t) dt ≈ Σ W_i g(t_i), g = poly × e^{−t}.
void gauss_laguerre_nodes(int m, std::vector<double>& t, std::vector<double>& w);

}  // namespace detail

}  // namespace beamwidth

#endif
