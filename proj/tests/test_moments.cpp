// Moment matrices D, F and their angular-spectrum counterparts.
//
// Closed-form oracles (Gamma integrals over |u|²):
//   fundamental Gaussian: D₀₀ = w²/2, F₀₀ = w⁴/2, D̃₀₀ = 2/(k²w²), F̃₀₀ = 8/(k⁴w⁴)
//   LG_{l,0}:             D₀₀ = (l+1) w²/2, F₀₀ = (l+1)(l+2) w⁴/4
//   hg1d ladder:          ⟨u₀|x²|u₂⟩ = √2 w²/4

#include <doctest.h>

#include <cmath>
#include <vector>

#include "beamwidth/modes.hpp"
#include "beamwidth/moments.hpp"

using namespace beamwidth;

TEST_CASE("fundamental gaussian: D00 = F00 = 0.5 at unit waist") {
    const TransverseMode u00(HermiteGauss{0, 0});
    const auto q = default_quadrature(u00);
    CHECK(spatial_moment(u00, u00, 1, q).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(spatial_moment(u00, u00, 2, q).real() == doctest::Approx(0.5).epsilon(1e-12));

    const auto m = mode_moments(u00);
    CHECK(m.r2 * m.r2 / m.r4 == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("laguerre-gauss ring modes: gamma-integral moments up to l = 10") {
    const double w = 1.0;
    for (int l = 0; l <= 10; ++l) {
        const TransverseMode lg(LaguerreGauss{l, 0}, w);
        const auto m = mode_moments(lg);
        CHECK(m.r2 == doctest::Approx((l + 1.0) * w * w / 2.0).epsilon(1e-10));
        CHECK(m.r4 == doctest::Approx((l + 1.0) * (l + 2.0) * w * w * w * w / 4.0)
                          .epsilon(1e-10));
    }
    // spot value from the examples: D00 of LG{2,0} is 1.5
    CHECK(mode_moments(TransverseMode(LaguerreGauss{2, 0})).r2 ==
          doctest::Approx(1.5).epsilon(1e-10));
}

TEST_CASE("hermite-gauss moments from the ladder algebra") {
    // x̂ = (w/2)(a + a†): ⟨n|x²|n⟩ = (2n+1)w²/4, ⟨n|x⁴|n⟩ = 3(2n²+2n+1)w⁴/16
    const double w = 1.0;
    for (const auto& [nx, ny] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {2, 3}, {5, 5}}) {
        const auto m = mode_moments(TransverseMode(HermiteGauss{nx, ny}, w));
        const double x2 = (2.0 * nx + 1.0) / 4.0, y2 = (2.0 * ny + 1.0) / 4.0;
        const double x4 = 3.0 * (2.0 * nx * nx + 2.0 * nx + 1.0) / 16.0;
        const double y4 = 3.0 * (2.0 * ny * ny + 2.0 * ny + 1.0) / 16.0;
        CAPTURE(nx);
        CAPTURE(ny);
        CHECK(m.r2 == doctest::Approx(x2 + y2).epsilon(1e-10));
        CHECK(m.r4 == doctest::Approx(x4 + 2.0 * x2 * y2 + y4).epsilon(1e-10));
    }
}

TEST_CASE("flattened gaussian N=30 moments: frozen rational-arithmetic oracle") {
    // Exact values from the series  M_q = Σ_m c_m (m+q)!  evaluated in
    // rational arithmetic: D00 = (w²/2) M1/M0, F00 = (w⁴/4) M2/M0.
    const auto m = mode_moments(TransverseMode(FlattenedGaussian{30}));
    CHECK(m.r2 == doctest::Approx(14.260084138992587).epsilon(1e-9));
    CHECK(m.r4 == doctest::Approx(277.18361797668126).epsilon(1e-9));
    CHECK(m.r2 * m.r2 / m.r4 == doctest::Approx(0.7336292134993897).epsilon(1e-9));
}

TEST_CASE("angular moments of the fundamental gaussian") {
    const double w = 0.8, k = 2.0;
    const TransverseMode u00(HermiteGauss{0, 0}, w);
    const auto q = default_quadrature(u00);

    const double dt = angular_moment(u00, u00, k, q).real();
    CHECK(dt == doctest::Approx(2.0 / (k * k * w * w)).epsilon(1e-10));

    // Fourier-pair width product: D00 * Dtilde00 = 1/k²
    const double d = spatial_moment(u00, u00, 1, q).real();
    CHECK(d * dt == doctest::Approx(1.0 / (k * k)).epsilon(1e-10));

    const double ft = fourth_angular_moment(u00, u00, k, q).real();
    CHECK(ft == doctest::Approx(8.0 / std::pow(k * w, 4)).epsilon(1e-10));
    CHECK(dt * dt / ft == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("angular moment equals the finite-difference second-derivative form") {
    // integration by parts: (1/k²)∬ ∇u_i*·∇u_j = −(1/k²)∬ u_i* ∇²u_j for
    // decaying modes; the right side is evaluated with Richardson-extrapolated
    // central differences so the check is independent of the analytic
    // derivative path.
    auto fd_lap = [](const TransverseMode& m, double x, double y) {
        const double h = 1e-2;
        auto d2 = [&](double hh, bool ax) {
            const double dx = ax ? hh : 0.0, dy = ax ? 0.0 : hh;
            return (m.amplitude(x + dx, y + dy) - 2.0 * m.amplitude(x, y) +
                    m.amplitude(x - dx, y - dy)) /
                   (hh * hh);
        };
        Complex lap = (4.0 * d2(h, true) - d2(2 * h, true)) / 3.0;
        if (m.dimension() == 2) lap += (4.0 * d2(h, false) - d2(2 * h, false)) / 3.0;
        return lap;
    };

    const double k = 1.0;
    struct Pair {
        TransverseMode a, b;
    };
    std::vector<Pair> pairs = {{TransverseMode(HermiteGauss{0, 0}), TransverseMode(HermiteGauss{0, 0})},
                               {TransverseMode(HermiteGauss1D{1}), TransverseMode(HermiteGauss1D{1})},
                               {TransverseMode(HermiteGauss1D{0}), TransverseMode(HermiteGauss1D{2})},
                               {TransverseMode(LaguerreGauss{1, 0}), TransverseMode(LaguerreGauss{1, 0})}};
    for (const auto& [a, b] : pairs) {
        const auto q = default_quadrature(std::vector<TransverseMode>{a, b});
        const Complex grad_form = angular_moment(a, b, k, q);
        Complex second_form{};
        const bool one_d = q.dimension() == 1;
        for (std::size_t i = 0; i < q.size(); ++i)
            second_form -= q.weight(i) *
                           std::conj(a.amplitude(q.x(i), one_d ? 0.0 : q.y(i))) *
                           fd_lap(b, q.x(i), one_d ? 0.0 : q.y(i));
        second_form /= k * k;
        CAPTURE(a.label());
        CAPTURE(b.label());
        CHECK(std::abs(grad_form - second_form) / std::abs(grad_form) < 1e-6);
    }
}

TEST_CASE("hg1d basis {0,2}: x^2 couples n and n±2") {
    std::vector<TransverseMode> basis = {TransverseMode(HermiteGauss1D{0}),
                                         TransverseMode(HermiteGauss1D{2})};
    const auto q = default_quadrature(basis);
    const auto mm = build_matrices(basis, 1.0, q);

    // x² u₀ = (w²/4)(u₀ + √2 u₂)  ⇒  D₀₂ = √2/4
    CHECK(mm.d.at(0, 1).real() == doctest::Approx(std::sqrt(2.0) / 4.0).epsilon(1e-10));
    CHECK(mm.d.at(1, 0).real() == doctest::Approx(std::sqrt(2.0) / 4.0).epsilon(1e-10));
    CHECK(std::abs(mm.d.at(0, 1).imag()) < 1e-14);
    CHECK(mm.d.at(0, 0).real() == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("single-mode basis builds a 1x1 matrix set") {
    std::vector<TransverseMode> basis = {TransverseMode(HermiteGauss{0, 0})};
    const auto mm = build_matrices(basis, 1.0, default_quadrature(basis));
    CHECK(mm.d.size() == 1);
    CHECK(mm.d.at(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(mm.f.at(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(mm.d_tilde.at(0, 0).real() == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(mm.f_tilde.at(0, 0).real() == doctest::Approx(8.0).epsilon(1e-10));
}

TEST_CASE("build_matrices rejects degenerate input") {
    const auto q = Quadrature::gauss_hermite_2d(32);
    CHECK_THROWS_AS(build_matrices({}, 1.0, q), std::invalid_argument);

    std::vector<TransverseMode> dup = {TransverseMode(HermiteGauss{0, 0}),
                                       TransverseMode(HermiteGauss{0, 0})};
    CHECK_THROWS_WITH_AS(build_matrices(dup, 1.0, q), doctest::Contains("hg:0,0"),
                         std::invalid_argument);

    std::vector<TransverseMode> mixed = {TransverseMode(HermiteGauss{0, 0}),
                                         TransverseMode(HermiteGauss1D{1})};
    CHECK_THROWS_AS(build_matrices(mixed, 1.0, q), std::invalid_argument);
}

TEST_CASE("spatial_moment validates inputs") {
    const auto q = Quadrature::gauss_hermite_2d(32);
    const TransverseMode a(HermiteGauss{0, 0});
    const TransverseMode b(HermiteGauss1D{0});
    CHECK_THROWS_AS(spatial_moment(a, b, 1, q), std::invalid_argument);
    CHECK_THROWS_AS(spatial_moment(a, a, 3, q), std::invalid_argument);

    const TransverseMode widened(HermiteGauss{0, 0}, 2.0);
    CHECK_THROWS_AS(spatial_moment(a, widened, 1, q), std::invalid_argument);
}

TEST_CASE("waist scaling: D ~ w^2, F ~ w^4, Dtilde ~ 1/w^2, Ftilde ~ 1/w^4") {
    const double w = 1.7, k = 1.0;
    std::vector<std::pair<TransverseMode, TransverseMode>> variants;
    variants.emplace_back(TransverseMode(HermiteGauss{2, 1}), TransverseMode(HermiteGauss{2, 1}, w));
    variants.emplace_back(TransverseMode(LaguerreGauss{2, 1}), TransverseMode(LaguerreGauss{2, 1}, w));
    variants.emplace_back(TransverseMode(FlattenedGaussian{8}), TransverseMode(FlattenedGaussian{8}, w));

    for (const auto& [unit, scaled] : variants) {
        const auto q1 = default_quadrature(unit);
        const auto qw = default_quadrature(scaled);
        CAPTURE(unit.label());
        CHECK(spatial_moment(scaled, scaled, 1, qw).real() ==
              doctest::Approx(w * w * spatial_moment(unit, unit, 1, q1).real()).epsilon(1e-10));
        CHECK(spatial_moment(scaled, scaled, 2, qw).real() ==
              doctest::Approx(std::pow(w, 4) * spatial_moment(unit, unit, 2, q1).real())
                  .epsilon(1e-10));
        CHECK(angular_moment(scaled, scaled, k, qw).real() ==
              doctest::Approx(angular_moment(unit, unit, k, q1).real() / (w * w))
                  .epsilon(1e-10));
        CHECK(fourth_angular_moment(scaled, scaled, k, qw).real() ==
              doctest::Approx(fourth_angular_moment(unit, unit, k, q1).real() / std::pow(w, 4))
                  .epsilon(1e-10));
    }
}

TEST_CASE("cauchy-schwarz D00^2 <= F00 across supported modes") {
    std::vector<TransverseMode> modes = {
        TransverseMode(HermiteGauss{0, 0}), TransverseMode(HermiteGauss{3, 2}),
        TransverseMode(HermiteGauss1D{4}),  TransverseMode(LaguerreGauss{5, 2}),
        TransverseMode(LaguerreGauss{-2, 0}), TransverseMode(FlattenedGaussian{30}),
        TransverseMode(FlattenedGaussian{0})};
    for (const auto& m : modes) {
        const auto mm = mode_moments(m);
        CAPTURE(m.label());
        CHECK(mm.r2 * mm.r2 <= mm.r4 * (1.0 + 1e-12));
        CHECK(mm.r2 >= 0.0);
        CHECK(mm.r4 >= 0.0);
    }
}

TEST_CASE("matrices over a mixed 2-D basis are hermitian with tiny residuals") {
    std::vector<TransverseMode> basis = {
        TransverseMode(HermiteGauss{0, 0}), TransverseMode(HermiteGauss{2, 0}),
        TransverseMode(HermiteGauss{0, 2}), TransverseMode(HermiteGauss{1, 1}),
        TransverseMode(HermiteGauss{2, 2})};
    const auto mm = build_matrices(basis, 1.0, default_quadrature(basis));

    CHECK(mm.residual.d < 1e-12);
    CHECK(mm.residual.f < 1e-12);
    CHECK(mm.residual.d_tilde < 1e-12);
    CHECK(mm.residual.f_tilde < 1e-10);
    for (const auto* m : {&mm.d, &mm.f, &mm.d_tilde, &mm.f_tilde})
        CHECK(m->hermiticity_residual() == 0.0);

    // diagonal entries are real, non-negative second/fourth moments
    for (std::size_t i = 0; i < basis.size(); ++i) {
        CHECK(mm.d.at(i, i).real() > 0.0);
        CHECK(mm.f.at(i, i).real() > 0.0);
        CHECK(mm.f.at(i, i).real() >=
              mm.d.at(i, i).real() * mm.d.at(i, i).real() * (1.0 - 1e-12));
    }
}

TEST_CASE("laguerre-gauss matrices honor the angular selection rule") {
    std::vector<TransverseMode> basis = {TransverseMode(LaguerreGauss{0, 0}),
                                         TransverseMode(LaguerreGauss{1, 0}),
                                         TransverseMode(LaguerreGauss{-1, 0}),
                                         TransverseMode(LaguerreGauss{2, 0})};
    const auto mm = build_matrices(basis, 1.0, default_quadrature(basis));
    // (x²+y²) preserves the azimuthal index: off-l entries vanish
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (i != j) {
                CHECK(std::abs(mm.d.at(i, j)) < 1e-12);
                CHECK(std::abs(mm.f.at(i, j)) < 1e-12);
            }
}
