#include "beamwidth/modes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace beamwidth {

namespace {

constexpr double pi = std::numbers::pi;

// Orthonormal Hermite functions φ_0..φ_m at ξ, Gaussian folded in:
// φ_0 = π^{-1/4} e^{-ξ²/2},  φ_{k+1} = ξ √(2/(k+1)) φ_k − √(k/(k+1)) φ_{k-1}.
std::vector<double> hermite_functions(int m, double xi) {
    std::vector<double> phi(m + 1);
    phi[0] = std::pow(pi, -0.25) * std::exp(-0.5 * xi * xi);
    if (m >= 1) phi[1] = std::sqrt(2.0) * xi * phi[0];
    for (int k = 1; k < m; ++k)
        phi[k + 1] = xi * std::sqrt(2.0 / (k + 1)) * phi[k] -
                     std::sqrt(double(k) / (k + 1)) * phi[k - 1];
    return phi;
}

// u_n(x) = (√2/w)^{1/2} φ_n(√2 x/w); returns u_{n-2}..u_{n+2} (absent → 0).
struct HermiteLadder {
    double um2 = 0, um1 = 0, u0 = 0, up1 = 0, up2 = 0;
};

HermiteLadder hermite_ladder(int n, double x, double w) {
    const double xi = std::sqrt(2.0) * x / w;
    const double scale = std::sqrt(std::sqrt(2.0) / w);
    auto phi = hermite_functions(n + 2, xi);
    HermiteLadder h;
    if (n >= 2) h.um2 = scale * phi[n - 2];
    if (n >= 1) h.um1 = scale * phi[n - 1];
    h.u0 = scale * phi[n];
    h.up1 = scale * phi[n + 1];
    h.up2 = scale * phi[n + 2];
    return h;
}

double hg1d_value(int n, double x, double w) {
    const double xi = std::sqrt(2.0) * x / w;
    return std::sqrt(std::sqrt(2.0) / w) * hermite_functions(n, xi)[n];
}

// u_n' = (√n u_{n-1} − √(n+1) u_{n+1}) / w
double hg1d_derivative(const HermiteLadder& h, int n, double w) {
    return (std::sqrt(double(n)) * h.um1 - std::sqrt(n + 1.0) * h.up1) / w;
}

// u_n'' = [√(n(n-1)) u_{n-2} − (2n+1) u_n + √((n+1)(n+2)) u_{n+2}] / w²
double hg1d_second_derivative(const HermiteLadder& h, int n, double w) {
    return (std::sqrt(double(n) * (n - 1)) * h.um2 - (2.0 * n + 1.0) * h.u0 +
            std::sqrt((n + 1.0) * (n + 2.0)) * h.up2) /
           (w * w);
}

// Generalized Laguerre L_p^{(α)}(t) by the three-term recurrence.
double laguerre(int p, int alpha, double t) {
    if (p == 0) return 1.0;
    double lm1 = 1.0;
    double l0 = 1.0 + alpha - t;
    for (int k = 1; k < p; ++k) {
        double lp1 = ((2.0 * k + 1.0 + alpha - t) * l0 - (k + alpha) * lm1) / (k + 1.0);
        lm1 = l0;
        l0 = lp1;
    }
    return l0;
}

// (x+iy)^m for m ≥ 0 (m ≤ a few tens, plain repeated multiply).
Complex int_power(Complex z, int m) {
    Complex r{1.0, 0.0};
    for (int i = 0; i < m; ++i) r *= z;
    return r;
}

struct LaguerrePieces {
    double norm;       // N_lp (√2/w)^{|l|}
    int abs_l;
    bool conjugate;    // l < 0: use (x − iy)^{|l|}
};

LaguerrePieces lg_pieces(const LaguerreGauss& lg, double w) {
    const int al = std::abs(lg.l);
    // N_lp = sqrt(2 p! / (π (p+|l|)!)) / w
    double fact_ratio = 1.0;  // p!/(p+|l|)!
    for (int j = lg.p + 1; j <= lg.p + al; ++j) fact_ratio /= j;
    const double n_lp = std::sqrt(2.0 * fact_ratio / pi) / w;
    return {n_lp * std::pow(std::sqrt(2.0) / w, al), al, lg.l < 0};
}

// Poisson term e^{−ρ} ρ^N / N!, the tail that survives the truncation of the
// flattened-Gaussian series under differentiation.
double poisson_term(int n, double rho) {
    if (rho == 0.0) return n == 0 ? 1.0 : 0.0;
    return std::exp(-rho + n * std::log(rho) - std::lgamma(n + 1.0));
}

// Truncated exponential e^{−ρ} Σ_{n≤N} ρ^n/n!, summed term by term so the
// partial sums never exceed 1.
double truncated_exp(int n_max, double rho) {
    double term = std::exp(-rho);
    double sum = term;
    for (int n = 1; n <= n_max; ++n) {
        term *= rho / n;
        sum += term;
    }
    return sum;
}

// Normalization A_N of the flattened Gaussian from the exact series
// ∬|u|² = A² 2π (w²/4) M₀ with M₀ = Σ_m 2^{−m} [Σ_n binom(m,n)] m!/m!,
// where n runs over max(0, m−N)..min(N, m).
double flattened_gaussian_norm(int order, double w) {
    const int n2 = 2 * order;
    double m0 = 0.0;
    for (int m = 0; m <= n2; ++m) {
        const int lo = std::max(0, m - order);
        const int hi = std::min(order, m);
        double binom = 1.0;  // binom(m, lo)
        for (int j = 0; j < lo; ++j) binom *= double(m - j) / (lo - j);
        double s = binom;
        for (int n = lo; n < hi; ++n) {
            binom *= double(m - n) / (n + 1);
            s += binom;
        }
        m0 += std::ldexp(s, -m);
    }
    return std::sqrt(2.0 / (pi * m0)) / w;
}

// Non-uniform three-point first derivative at x0 with neighbors at ±h∓.
Complex fd_first(Complex fm, Complex f0, Complex fp, double hm, double hp) {
    return -hp / (hm * (hm + hp)) * fm + (hp - hm) / (hm * hp) * f0 +
           hm / (hp * (hm + hp)) * fp;
}

// Non-uniform three-point second derivative.
Complex fd_second(Complex fm, Complex f0, Complex fp, double hm, double hp) {
    return 2.0 * (fm / (hm * (hm + hp)) - f0 / (hm * hp) + fp / (hp * (hm + hp)));
}

}  // namespace

std::pair<Complex, Complex> gradient_sampled_impl(const SampledMode& s, double x, double y);
Complex laplacian_sampled_impl(const SampledMode& s, double x, double y);

double SampledMode::norm() const {
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
        acc += grid->weight(i) * std::norm(values[i]);
    return std::sqrt(acc);
}

void SampledMode::normalize() {
    const double n = norm();
    if (!(n > 0.0)) throw std::domain_error("cannot normalize a null sampled profile");
    for (auto& v : values) v /= n;
}

Complex overlap(const SampledMode& a, const SampledMode& b) {
    if (!a.grid || !b.grid || !a.grid->same_nodes_as(*b.grid))
        throw std::invalid_argument("overlap requires sampled modes on the same grid");
    Complex acc{};
    for (std::size_t i = 0; i < a.values.size(); ++i)
        acc += a.grid->weight(i) * std::conj(a.values[i]) * b.values[i];
    return acc;
}

TransverseMode::TransverseMode(HermiteGauss hg, double waist)
    : family_(hg), waist_(waist), dimension_(2) {
    if (hg.nx < 0 || hg.ny < 0)
        throw std::invalid_argument("hermite-gauss indices must be non-negative");
    if (!(waist > 0.0)) throw std::invalid_argument("waist must be positive");
}

TransverseMode::TransverseMode(HermiteGauss1D hg, double waist)
    : family_(hg), waist_(waist), dimension_(1) {
    if (hg.n < 0) throw std::invalid_argument("hermite-gauss index must be non-negative");
    if (!(waist > 0.0)) throw std::invalid_argument("waist must be positive");
}

TransverseMode::TransverseMode(LaguerreGauss lg, double waist)
    : family_(lg), waist_(waist), dimension_(2) {
    if (lg.p < 0) throw std::invalid_argument("laguerre-gauss radial index must be non-negative");
    if (!(waist > 0.0)) throw std::invalid_argument("waist must be positive");
}

TransverseMode::TransverseMode(FlattenedGaussian fg, double waist)
    : family_(fg), waist_(waist), dimension_(2) {
    if (fg.order < 0) throw std::invalid_argument("flattened-gaussian order must be non-negative");
    if (!(waist > 0.0)) throw std::invalid_argument("waist must be positive");
    fg_norm_ = flattened_gaussian_norm(fg.order, waist);
}

TransverseMode::TransverseMode(SampledMode sampled, double waist)
    : family_(std::move(sampled)), waist_(waist) {
    const auto& s = std::get<SampledMode>(family_);
    if (!s.grid) throw std::invalid_argument("sampled mode needs a companion quadrature");
    if (s.values.size() != s.grid->size())
        throw std::invalid_argument("sampled mode: value count does not match the grid");
    if (!(waist > 0.0)) throw std::invalid_argument("waist must be positive");
    dimension_ = s.grid->dimension();
}

Complex TransverseMode::amplitude(double x, double y) const {
    if (dimension_ == 1 && y != 0.0)
        throw std::invalid_argument("1-D mode evaluated with nonzero y");
    return std::visit(
        [&](const auto& fam) -> Complex {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, HermiteGauss>) {
                return hg1d_value(fam.nx, x, waist_) * hg1d_value(fam.ny, y, waist_);
            } else if constexpr (std::is_same_v<T, HermiteGauss1D>) {
                return hg1d_value(fam.n, x, waist_);
            } else if constexpr (std::is_same_v<T, LaguerreGauss>) {
                const auto pc = lg_pieces(fam, waist_);
                const double s = x * x + y * y;
                const double t = 2.0 * s / (waist_ * waist_);
                const Complex z = pc.conjugate ? Complex{x, -y} : Complex{x, y};
                return pc.norm * int_power(z, pc.abs_l) * laguerre(fam.p, pc.abs_l, t) *
                       std::exp(-s / (waist_ * waist_));
            } else if constexpr (std::is_same_v<T, FlattenedGaussian>) {
                const double rho = (x * x + y * y) / (waist_ * waist_);
                return fg_norm_ * truncated_exp(fam.order, rho);
            } else {
                return amplitude_sampled(x, y);
            }
        },
        family_);
}

Complex TransverseMode::amplitude_sampled(double x, double y) const {
    const auto& s = std::get<SampledMode>(family_);
    const double tol = 1e-9 * waist_;
    for (std::size_t i = 0; i < s.grid->size(); ++i)
        if (std::abs(s.grid->x(i) - x) <= tol &&
            (dimension_ == 1 || std::abs(s.grid->y(i) - y) <= tol))
            return s.values[i];
    throw std::invalid_argument("sampled mode is only defined on its grid nodes");
}

std::pair<Complex, Complex> TransverseMode::gradient(double x, double y) const {
    if (dimension_ == 1 && y != 0.0)
        throw std::invalid_argument("1-D mode evaluated with nonzero y");
    return std::visit(
        [&](const auto& fam) -> std::pair<Complex, Complex> {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, HermiteGauss>) {
                auto hx = hermite_ladder(fam.nx, x, waist_);
                auto hy = hermite_ladder(fam.ny, y, waist_);
                return {hg1d_derivative(hx, fam.nx, waist_) * hy.u0,
                        hx.u0 * hg1d_derivative(hy, fam.ny, waist_)};
            } else if constexpr (std::is_same_v<T, HermiteGauss1D>) {
                auto h = hermite_ladder(fam.n, x, waist_);
                return {hg1d_derivative(h, fam.n, waist_), 0.0};
            } else if constexpr (std::is_same_v<T, LaguerreGauss>) {
                const auto pc = lg_pieces(fam, waist_);
                const double w2 = waist_ * waist_;
                const double s = x * x + y * y;
                const double t = 2.0 * s / w2;
                const double expf = std::exp(-s / w2);
                const double lv = laguerre(fam.p, pc.abs_l, t);
                const double ld = fam.p >= 1 ? -laguerre(fam.p - 1, pc.abs_l + 1, t) : 0.0;
                // g(s) = L(2s/w²) e^{−s/w²}; g' = (2L' − L) e^{−s/w²} / w²
                const double gp = (2.0 * ld - lv) * expf / w2;
                const Complex z = pc.conjugate ? Complex{x, -y} : Complex{x, y};
                const Complex zl = int_power(z, pc.abs_l);
                const Complex zlm1 =
                    pc.abs_l >= 1 ? int_power(z, pc.abs_l - 1) * double(pc.abs_l) : Complex{};
                const Complex iy = pc.conjugate ? Complex{0.0, -1.0} : Complex{0.0, 1.0};
                return {pc.norm * (zlm1 * (lv * expf) + zl * gp * 2.0 * x),
                        pc.norm * (zlm1 * iy * (lv * expf) + zl * gp * 2.0 * y)};
            } else if constexpr (std::is_same_v<T, FlattenedGaussian>) {
                const double w2 = waist_ * waist_;
                const double rho = (x * x + y * y) / w2;
                const double d = -fg_norm_ / w2 * poisson_term(fam.order, rho);
                return {2.0 * x * d, 2.0 * y * d};
            } else {
                return gradient_sampled_impl(fam, x, y);
            }
        },
        family_);
}

Complex TransverseMode::laplacian(double x, double y) const {
    if (dimension_ == 1 && y != 0.0)
        throw std::invalid_argument("1-D mode evaluated with nonzero y");
    return std::visit(
        [&](const auto& fam) -> Complex {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, HermiteGauss>) {
                auto hx = hermite_ladder(fam.nx, x, waist_);
                auto hy = hermite_ladder(fam.ny, y, waist_);
                return hg1d_second_derivative(hx, fam.nx, waist_) * hy.u0 +
                       hx.u0 * hg1d_second_derivative(hy, fam.ny, waist_);
            } else if constexpr (std::is_same_v<T, HermiteGauss1D>) {
                auto h = hermite_ladder(fam.n, x, waist_);
                return hg1d_second_derivative(h, fam.n, waist_);
            } else if constexpr (std::is_same_v<T, LaguerreGauss>) {
                // ∇²[z^m g(s)] = z^m 4[(m+1) g'(s) + s g''(s)],  s = x²+y²
                const auto pc = lg_pieces(fam, waist_);
                const double w2 = waist_ * waist_;
                const double s = x * x + y * y;
                const double t = 2.0 * s / w2;
                const double expf = std::exp(-s / w2);
                const double lv = laguerre(fam.p, pc.abs_l, t);
                const double ld = fam.p >= 1 ? -laguerre(fam.p - 1, pc.abs_l + 1, t) : 0.0;
                const double ldd = fam.p >= 2 ? laguerre(fam.p - 2, pc.abs_l + 2, t) : 0.0;
                const double gp = (2.0 * ld - lv) * expf / w2;
                const double gpp = (4.0 * ldd - 4.0 * ld + lv) * expf / (w2 * w2);
                const Complex z = pc.conjugate ? Complex{x, -y} : Complex{x, y};
                return pc.norm * int_power(z, pc.abs_l) * 4.0 *
                       ((pc.abs_l + 1.0) * gp + s * gpp);
            } else if constexpr (std::is_same_v<T, FlattenedGaussian>) {
                const double w2 = waist_ * waist_;
                const double rho = (x * x + y * y) / w2;
                return -4.0 * fg_norm_ / w2 * poisson_term(fam.order, rho) *
                       (1.0 + fam.order - rho);
            } else {
                return laplacian_sampled_impl(fam, x, y);
            }
        },
        family_);
}

namespace {

// Locates (x, y) in a Gauss-Hermite grid; returns the flat index.
std::size_t locate_node(const Quadrature& q, double x, double y, double tol) {
    for (std::size_t i = 0; i < q.size(); ++i)
        if (std::abs(q.x(i) - x) <= tol &&
            (q.dimension() == 1 || std::abs(q.y(i) - y) <= tol))
            return i;
    throw std::invalid_argument(
        "finite-difference fallback: point is not a grid node of the sampled mode");
}

void require_fd_grid(const Quadrature& q) {
    if (q.scheme() != Quadrature::Scheme::gauss_hermite_per_axis)
        throw std::invalid_argument(
            "finite-difference fallback supported on Gauss-Hermite grids only");
}

}  // namespace

// Grid finite differences for sampled modes.  Edge nodes carry negligible
// quadrature weight; their second derivative is reported as 0 and their
// first derivative one-sided.
std::pair<Complex, Complex> gradient_sampled_impl(const SampledMode& s, double x, double y) {
    const auto& q = *s.grid;
    require_fd_grid(q);
    const double tol = 1e-9;
    const std::size_t idx = locate_node(q, x, y, tol);
    if (q.dimension() == 1) {
        const std::size_t n = q.size();
        if (idx == 0 || idx == n - 1) {
            const std::size_t a = idx == 0 ? 0 : n - 2;
            return {(s.values[a + 1] - s.values[a]) / (q.x(a + 1) - q.x(a)), 0.0};
        }
        return {fd_first(s.values[idx - 1], s.values[idx], s.values[idx + 1],
                         q.x(idx) - q.x(idx - 1), q.x(idx + 1) - q.x(idx)),
                0.0};
    }
    const std::size_t m = std::size_t(std::lround(std::sqrt(double(q.size()))));
    const std::size_t i = idx / m, j = idx % m;
    auto v = [&](std::size_t a, std::size_t b) { return s.values[a * m + b]; };
    auto ax = [&](std::size_t a) { return q.x(a * m); };
    auto ay = [&](std::size_t b) { return q.y(b); };
    Complex dx, dy;
    if (i == 0 || i == m - 1) {
        const std::size_t a = i == 0 ? 0 : m - 2;
        dx = (v(a + 1, j) - v(a, j)) / (ax(a + 1) - ax(a));
    } else {
        dx = fd_first(v(i - 1, j), v(i, j), v(i + 1, j), ax(i) - ax(i - 1), ax(i + 1) - ax(i));
    }
    if (j == 0 || j == m - 1) {
        const std::size_t b = j == 0 ? 0 : m - 2;
        dy = (v(i, b + 1) - v(i, b)) / (ay(b + 1) - ay(b));
    } else {
        dy = fd_first(v(i, j - 1), v(i, j), v(i, j + 1), ay(j) - ay(j - 1), ay(j + 1) - ay(j));
    }
    return {dx, dy};
}

Complex laplacian_sampled_impl(const SampledMode& s, double x, double y) {
    const auto& q = *s.grid;
    require_fd_grid(q);
    const double tol = 1e-9;
    const std::size_t idx = locate_node(q, x, y, tol);
    if (q.dimension() == 1) {
        const std::size_t n = q.size();
        if (idx == 0 || idx == n - 1) return 0.0;
        return fd_second(s.values[idx - 1], s.values[idx], s.values[idx + 1],
                         q.x(idx) - q.x(idx - 1), q.x(idx + 1) - q.x(idx));
    }
    const std::size_t m = std::size_t(std::lround(std::sqrt(double(q.size()))));
    const std::size_t i = idx / m, j = idx % m;
    if (i == 0 || i == m - 1 || j == 0 || j == m - 1) return 0.0;
    auto v = [&](std::size_t a, std::size_t b) { return s.values[a * m + b]; };
    auto ax = [&](std::size_t a) { return q.x(a * m); };
    auto ay = [&](std::size_t b) { return q.y(b); };
    return fd_second(v(i - 1, j), v(i, j), v(i + 1, j), ax(i) - ax(i - 1), ax(i + 1) - ax(i)) +
           fd_second(v(i, j - 1), v(i, j), v(i, j + 1), ay(j) - ay(j - 1), ay(j + 1) - ay(j));
}

std::string TransverseMode::label() const {
    return std::visit(
        [&](const auto& fam) -> std::string {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, HermiteGauss>)
                return "hg:" + std::to_string(fam.nx) + "," + std::to_string(fam.ny);
            else if constexpr (std::is_same_v<T, HermiteGauss1D>)
                return "hg1d:" + std::to_string(fam.n);
            else if constexpr (std::is_same_v<T, LaguerreGauss>)
                return "lg:" + std::to_string(fam.l) + "," + std::to_string(fam.p);
            else if constexpr (std::is_same_v<T, FlattenedGaussian>)
                return "fg:" + std::to_string(fam.order);
            else
                return "sampled";
        },
        family_);
}

int TransverseMode::total_order() const {
    return std::visit(
        [&](const auto& fam) -> int {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, HermiteGauss>)
                return fam.nx + fam.ny;
            else if constexpr (std::is_same_v<T, HermiteGauss1D>)
                return fam.n;
            else if constexpr (std::is_same_v<T, LaguerreGauss>)
                return 2 * fam.p + std::abs(fam.l);
            else if constexpr (std::is_same_v<T, FlattenedGaussian>)
                return fam.order;
            else
                return 0;
        },
        family_);
}

double mode_norm(const TransverseMode& mode, const Quadrature& q) {
    if (mode.dimension() != q.dimension())
        throw std::invalid_argument("mode and quadrature dimensions differ");
    double acc = 0.0;
    if (const auto* s = std::get_if<SampledMode>(&mode.family())) {
        if (!s->grid->same_nodes_as(q))
            throw std::invalid_argument("sampled mode is bound to a different grid");
        for (std::size_t i = 0; i < q.size(); ++i)
            acc += q.weight(i) * std::norm(s->values[i]);
    } else {
        for (std::size_t i = 0; i < q.size(); ++i)
            acc += q.weight(i) * std::norm(mode.amplitude(q.x(i), q.y(i)));
    }
    return std::sqrt(acc);
}

Quadrature default_quadrature(const std::vector<TransverseMode>& modes, int nodes_override) {
    if (modes.empty()) throw std::invalid_argument("default_quadrature: empty mode set");
    const double w = modes.front().waist();
    for (const auto& m : modes)
        if (std::abs(m.waist() - w) > 1e-12 * w)
            throw std::invalid_argument("modes must share a common waist");

    const int per_axis = nodes_override > 0 ? nodes_override : 64;
    const int radial = nodes_override > 0 ? 2 * nodes_override : 128;

    // A sampled mode is bound to its companion grid; reuse it.
    for (const auto& m : modes)
        if (const auto* s = std::get_if<SampledMode>(&m.family())) return *s->grid;

    bool all_1d = true, all_radial = true;
    int max_abs_l = 0;
    for (const auto& m : modes) {
        if (m.dimension() != 1) all_1d = false;
        std::visit(
            [&](const auto& fam) {
                using T = std::decay_t<decltype(fam)>;
                if constexpr (std::is_same_v<T, LaguerreGauss>)
                    max_abs_l = std::max(max_abs_l, std::abs(fam.l));
                else if constexpr (!std::is_same_v<T, FlattenedGaussian>)
                    all_radial = false;
            },
            m.family());
    }
    if (all_1d) return Quadrature::gauss_hermite_1d(per_axis, w);
    for (const auto& m : modes)
        if (m.dimension() == 1)
            throw std::invalid_argument("cannot mix 1-D and 2-D modes in one basis");
    if (all_radial) {
        // e^{imφ} factors up to |m| = 2 l_max must integrate to exact zeros
        const int angular = max_abs_l == 0 ? 1 : 4 * max_abs_l + 4;
        return Quadrature::gauss_laguerre_radial(radial, w, angular);
    }
    return Quadrature::gauss_hermite_2d(per_axis, w);
}

Quadrature default_quadrature(const TransverseMode& mode, int nodes_override) {
    return default_quadrature(std::vector<TransverseMode>{mode}, nodes_override);
}

namespace {

int parse_int(const std::string& token, const std::string& spec) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(token, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid mode spec '" + spec + "': bad integer '" + token + "'");
    }
    if (pos != token.size())
        throw std::invalid_argument("invalid mode spec '" + spec + "': bad integer '" + token + "'");
    return v;
}

}  // namespace

TransverseMode parse_mode_spec(const std::string& spec, double waist) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("invalid mode spec '" + spec +
                                    "': expected <family>:<indices>");
    const std::string family = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    const auto comma = rest.find(',');

    if (family == "hg") {
        if (comma == std::string::npos)
            throw std::invalid_argument("invalid mode spec '" + spec + "': hg needs <nx>,<ny>");
        return TransverseMode(HermiteGauss{parse_int(rest.substr(0, comma), spec),
                                           parse_int(rest.substr(comma + 1), spec)},
                              waist);
    }
    if (family == "hg1d") {
        if (comma != std::string::npos)
            throw std::invalid_argument("invalid mode spec '" + spec + "': hg1d takes one index");
        return TransverseMode(HermiteGauss1D{parse_int(rest, spec)}, waist);
    }
    if (family == "lg") {
        if (comma == std::string::npos)
            throw std::invalid_argument("invalid mode spec '" + spec + "': lg needs <l>,<p>");
        return TransverseMode(LaguerreGauss{parse_int(rest.substr(0, comma), spec),
                                            parse_int(rest.substr(comma + 1), spec)},
                              waist);
    }
    if (family == "fg") {
        if (comma != std::string::npos)
            throw std::invalid_argument("invalid mode spec '" + spec + "': fg takes one order");
        return TransverseMode(FlattenedGaussian{parse_int(rest, spec)}, waist);
    }
    throw std::invalid_argument("invalid mode spec '" + spec + "': unknown family '" + family +
                                "'");
}

double suggested_plot_radius(const TransverseMode& mode) {
    return mode.waist() * (1.3 * std::sqrt(mode.total_order() + 1.0) + 2.5);
}

}  // namespace beamwidth
