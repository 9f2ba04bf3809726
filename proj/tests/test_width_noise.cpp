// Beam-width noise: single-mode closed forms, the general fourth-moment
// contraction, the linearized multimode formula, and squeezing optimization.

#include <doctest.h>

#include <cmath>
#include <memory>
#include <random>
#include <vector>

#include "beamwidth/golden_section.hpp"
#include "beamwidth/modes.hpp"
#include "beamwidth/moments.hpp"
#include "beamwidth/states.hpp"
#include "beamwidth/width_noise.hpp"

using namespace beamwidth;

TEST_CASE("mean width is the second moment of the intensity profile") {
    CHECK(mean_width(TransverseMode(HermiteGauss{0, 0})) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(mean_width(TransverseMode(LaguerreGauss{1, 0})) == doctest::Approx(1.0).epsilon(1e-10));
    // dimensional: doubling the waist quadruples the area measure
    CHECK(mean_width(TransverseMode(HermiteGauss{0, 0}, 2.0)) ==
          doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("single-mode width variance: coherent and fock benchmarks") {
    const TransverseMode u00(HermiteGauss{0, 0});
    // coherent: ⟨δW²⟩ = F00/n̄ = 0.5/2
    CHECK(single_mode_width_variance(u00, SingleModeState(Coherent{std::sqrt(2.0)})) ==
          doctest::Approx(0.25).epsilon(1e-12));
    // fock(1): (F00 − D00²)/n = 0.25
    CHECK(single_mode_width_variance(u00, SingleModeState(Fock{1})) ==
          doctest::Approx(0.25).epsilon(1e-12));
    CHECK_THROWS_AS(single_mode_width_variance(u00, SingleModeState(Fock{0})),
                    std::domain_error);
    CHECK_THROWS_AS(single_mode_width_variance(u00, SingleModeState(Coherent{0.0})),
                    std::domain_error);
}

TEST_CASE("relative width noise of a fock state is 0.5 in the fundamental mode") {
    const auto m = mode_moments(TransverseMode(HermiteGauss{0, 0}));
    for (int n : {1, 5, 50})
        CHECK(relative_width_noise(m, SingleModeState(Fock{n})) ==
              doctest::Approx(0.5).epsilon(1e-12));
    // photon-number independence, and waist independence
    const auto mw = mode_moments(TransverseMode(HermiteGauss{0, 0}, 3.0));
    CHECK(relative_width_noise(mw, SingleModeState(Fock{3})) ==
          doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("squeezed vacuum with one photon: relative noise 2.5") {
    // ratio = (D00²/F00)(2 n̄ + 1) + 1 = 0.5·3 + 1
    const double s = std::asinh(1.0);  // sinh²s = 1
    CHECK(relative_width_noise(TransverseMode(HermiteGauss{0, 0}),
                               SingleModeState(SqueezedVacuum{s})) ==
          doctest::Approx(2.5).epsilon(1e-10));
}

TEST_CASE("flattened gaussian N=30: fock noise ratios against frozen oracles") {
    const auto m = mode_moments(TransverseMode(FlattenedGaussian{30}));
    // rational-arithmetic values: 1 − D²/F and F/D² − 1
    CHECK(relative_width_noise(m, SingleModeState(Fock{1})) ==
          doctest::Approx(0.2663707865006103).epsilon(1e-9));
    CHECK(relative_noise_by_mean(m, SingleModeState(Fock{1})) ==
          doctest::Approx(0.36308639514234925).epsilon(1e-9));
}

TEST_CASE("thermal noise approaches the coherent reference as n_th -> 0") {
    const auto m = mode_moments(TransverseMode(HermiteGauss{0, 0}));
    CHECK(relative_width_noise(m, SingleModeState(Thermal{1e-9})) ==
          doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("noise by mean: coherent LG ring modes fall off as (l+2)/(l+1)") {
    double previous = 3.0;
    for (int l = 0; l <= 10; ++l) {
        const auto m = mode_moments(TransverseMode(LaguerreGauss{l, 0}));
        const double got = relative_noise_by_mean(m, SingleModeState(Coherent{1.0}));
        CHECK(got == doctest::Approx((l + 2.0) / (l + 1.0)).epsilon(1e-10));
        CHECK(got < previous);
        previous = got;
    }
    CHECK(relative_noise_by_mean(mode_moments(TransverseMode(HermiteGauss{0, 0})),
                                 SingleModeState(Fock{1})) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("generic ratio equals every closed form at a non-gaussian mode ratio") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> par(0.1, 2.5);
    const auto m = mode_moments(TransverseMode(LaguerreGauss{3, 1}));
    for (int trial = 0; trial < 50; ++trial) {
        const std::vector<SingleModeState> states = {
            SingleModeState(Coherent{par(rng)}),
            SingleModeState(Fock{int(1 + 10 * par(rng))}),
            SingleModeState(SqueezedVacuum{par(rng)}),
            SingleModeState(DisplacedSqueezed{par(rng), par(rng)}),
            SingleModeState(Thermal{par(rng)}),
            SingleModeState(DisplacedThermal{par(rng), par(rng)})};
        for (const auto& st : states) {
            const double generic = relative_width_noise(m, st);
            const double closed = relative_width_noise_closed_form(m.r2 * m.r2 / m.r4, st);
            CHECK(std::abs(generic - closed) <= 1e-12 * std::abs(closed));
        }
    }
}

TEST_CASE("state ordering at fixed photon number matches the physical hierarchy") {
    const auto m = mode_moments(TransverseMode(HermiteGauss{0, 0}));
    for (double nbar : {2.0, 5.0, 10.0}) {
        const double fock = relative_width_noise(m, SingleModeState(Fock{int(nbar)}));
        const auto opt = optimal_squeezing(m, nbar);
        const double coherent =
            relative_width_noise(m, SingleModeState(Coherent{std::sqrt(nbar)}));
        const double disp_thermal = relative_width_noise(
            m, SingleModeState(DisplacedThermal{std::sqrt(nbar - 2.0), 2.0}));
        const double thermal = relative_width_noise(m, SingleModeState(Thermal{nbar}));
        const double sqvac =
            relative_width_noise(m, SingleModeState(SqueezedVacuum{std::asinh(std::sqrt(nbar))}));

        CAPTURE(nbar);
        CHECK(fock < opt.ratio);
        CHECK(opt.ratio <= coherent);
        CHECK(coherent == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(coherent <= disp_thermal * (1.0 + 1e-12));
        CHECK(disp_thermal <= thermal * (1.0 + 1e-12));
        CHECK(thermal <= sqvac);
    }
}

TEST_CASE("thermal and squeezed-vacuum ratios grow linearly in n̄") {
    const auto m = mode_moments(TransverseMode(HermiteGauss{0, 0}));
    const double c = m.r2 * m.r2 / m.r4;
    auto thermal_ratio = [&](double n) {
        return relative_width_noise(m, SingleModeState(Thermal{n}));
    };
    auto sqvac_ratio = [&](double n) {
        return relative_width_noise(m, SingleModeState(SqueezedVacuum{std::asinh(std::sqrt(n))}));
    };
    for (double n : {1.0, 4.0, 9.0}) {
        CHECK(thermal_ratio(n + 1.0) - thermal_ratio(n) == doctest::Approx(c).epsilon(1e-10));
        CHECK(sqvac_ratio(n + 1.0) - sqvac_ratio(n) == doctest::Approx(2.0 * c).epsilon(1e-10));
    }
}

TEST_CASE("dimensionless ratios are waist invariant") {
    const auto m1 = mode_moments(TransverseMode(LaguerreGauss{2, 1}));
    const auto m2 = mode_moments(TransverseMode(LaguerreGauss{2, 1}, 2.5));
    const SingleModeState fock(Fock{3});
    const SingleModeState th(Thermal{1.3});
    CHECK(relative_width_noise(m1, fock) ==
          doctest::Approx(relative_width_noise(m2, fock)).epsilon(1e-12));
    CHECK(relative_width_noise(m1, th) ==
          doctest::Approx(relative_width_noise(m2, th)).epsilon(1e-12));
    CHECK(relative_noise_by_mean(m1, fock) ==
          doctest::Approx(relative_noise_by_mean(m2, fock)).epsilon(1e-12));
}

// ---------------------------------------------------------------------------
// general_width_variance: the basis-summed fourth-moment contraction
// ---------------------------------------------------------------------------

TEST_CASE("general variance reproduces all six single-mode closed forms") {
    std::vector<TransverseMode> basis = {TransverseMode(HermiteGauss{0, 0}),
                                         TransverseMode(HermiteGauss{1, 0})};
    const auto mm = build_matrices(basis, 1.0, default_quadrature(basis));
    const auto m0 = mode_moments(basis[0]);

    const std::vector<SingleModeState> states = {
        SingleModeState(Coherent{1.3}),
        SingleModeState(Fock{4}),
        SingleModeState(SqueezedVacuum{0.8}),
        SingleModeState(DisplacedSqueezed{1.1, 0.6}),
        SingleModeState(Thermal{0.9}),
        SingleModeState(DisplacedThermal{1.2, 0.5})};
    for (const auto& st : states) {
        const SingleModeEmbedding provider(st, 0, basis.size());
        const double general = general_width_variance(mm, provider);
        const double closed = single_mode_width_variance(m0, st);
        CAPTURE(st.label());
        CHECK(std::abs(general - closed) <= 1e-10 * std::abs(closed));
    }
}

TEST_CASE("two-mode coherent product equals the coherent superposition mode") {
    // classically single mode: the coherent product in {u0, u1} is the
    // coherent state of the superposition (α u0 + β u1)/√(|α|²+|β|²)
    const Complex alpha{1.1, 0.0}, beta{0.7, -0.4};
    std::vector<TransverseMode> basis = {TransverseMode(HermiteGauss{0, 0}),
                                         TransverseMode(HermiteGauss{2, 0})};
    const auto q = default_quadrature(basis);
    const auto mm = build_matrices(basis, 1.0, q);

    const CoherentProduct product({alpha, beta});
    const double general = general_width_variance(mm, product);

    const double ntot = std::norm(alpha) + std::norm(beta);
    SampledMode sup;
    sup.grid = std::make_shared<Quadrature>(q);
    sup.values.resize(q.size());
    for (std::size_t i = 0; i < q.size(); ++i)
        sup.values[i] = (alpha * basis[0].amplitude(q.x(i), q.y(i)) +
                         beta * basis[1].amplitude(q.x(i), q.y(i))) /
                        std::sqrt(ntot);
    const TransverseMode sup_mode(sup);
    const auto msup = mode_moments(sup_mode, q);
    const double closed =
        single_mode_width_variance(msup, SingleModeState(Coherent{std::sqrt(ntot)}));
    CHECK(std::abs(general - closed) <= 1e-10 * std::abs(closed));
}

TEST_CASE("general variance is invariant under unitary basis rotation") {
    std::vector<TransverseMode> basis = {TransverseMode(HermiteGauss1D{0}),
                                         TransverseMode(HermiteGauss1D{2})};
    const auto mm = build_matrices(basis, 1.0, default_quadrature(basis));
    const std::vector<Complex> amps = {Complex{1.0, 0.2}, Complex{-0.3, 0.8}};
    const double reference = general_width_variance(mm, CoherentProduct(amps));

    std::mt19937 rng(5);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979);
    for (int trial = 0; trial < 12; ++trial) {
        // U = [[cosθ, −e^{iφ} sinθ], [e^{−iφ} sinθ, cosθ]] — unitary
        const double th = angle(rng), ph = angle(rng);
        Complex u[2][2] = {{std::cos(th), -std::polar(1.0, ph) * std::sin(th)},
                           {std::polar(1.0, -ph) * std::sin(th), std::cos(th)}};

        // rotated modes u'_j = Σ_i U_{ji} u_i carry D' = U* D Uᵀ and
        // amplitudes α' = U* α so the physical field is unchanged
        MomentMatrices rotated = mm;
        for (auto* mat : {&rotated.d, &rotated.f}) {
            ComplexMatrix orig = *mat;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    Complex acc{};
                    for (int a = 0; a < 2; ++a)
                        for (int b = 0; b < 2; ++b)
                            acc += std::conj(u[i][a]) * orig.at(a, b) * u[j][b];
                    mat->at(i, j) = acc;
                }
        }
        std::vector<Complex> rotated_amps(2);
        for (int i = 0; i < 2; ++i)
            rotated_amps[i] = std::conj(u[i][0]) * amps[0] + std::conj(u[i][1]) * amps[1];

        const double got = general_width_variance(rotated, CoherentProduct(rotated_amps));
        CHECK(got == doctest::Approx(reference).epsilon(1e-10));
    }
}

TEST_CASE("general variance rejects empty beams and mismatched bases") {
    std::vector<TransverseMode> basis = {TransverseMode(HermiteGauss{0, 0}),
                                         TransverseMode(HermiteGauss{1, 0})};
    const auto mm = build_matrices(basis, 1.0, default_quadrature(basis));
    CHECK_THROWS_AS(general_width_variance(mm, CoherentProduct({Complex{}, Complex{}})),
                    std::domain_error);
    CHECK_THROWS_AS(general_width_variance(mm, CoherentProduct({Complex{1.0, 0.0}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(SingleModeEmbedding(SingleModeState(Fock{1}), 5, 2),
                    std::invalid_argument);
}

// ---------------------------------------------------------------------------
// linearized multimode regime
// ---------------------------------------------------------------------------

TEST_CASE("linearized variance: coherent beam with vacuum side modes") {
    const TransverseMode u00(HermiteGauss{0, 0});
    const double f00 = mode_moments(u00).r4;
    const double nbar = 6.0;
    const MeanField mf(u00, std::sqrt(nbar), nbar);

    // ⟨δ²X⟩ = 1 for the coherent/vacuum case reproduces F00/n̄ exactly
    CHECK(linearized_multimode_variance(mf, f00, 1.0) ==
          doctest::Approx(f00 / nbar).epsilon(1e-12));
    // linear in the quadrature variance: 3 dB squeezing halves the noise
    CHECK(linearized_multimode_variance(mf, f00, 0.5) ==
          doctest::Approx(0.5 * f00 / nbar).epsilon(1e-12));
    CHECK(linearized_multimode_variance(mf, f00, 0.0) == 0.0);
}

TEST_CASE("mean field invariants") {
    const TransverseMode u00(HermiteGauss{0, 0});
    CHECK_THROWS_AS(MeanField(u00, 2.0, 1.0), std::invalid_argument);   // a0² > N
    CHECK_THROWS_AS(MeanField(u00, -1.0, 4.0), std::invalid_argument);  // phase convention
    const MeanField dark(u00, 0.0, 0.0);
    CHECK_THROWS_AS(linearized_multimode_variance(dark, 0.5, 1.0), std::domain_error);
    const MeanField bright(u00, 1.0, 2.0);
    CHECK_THROWS_AS(linearized_multimode_variance(bright, 0.5, -0.1), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// squeezing optimization
// ---------------------------------------------------------------------------

TEST_CASE("golden section: quadratic and boundary minima") {
    auto [x, fx] = golden_section_minimize([](double t) { return (t - 1.234) * (t - 1.234); },
                                           0.0, 3.0, 1e-12);
    CHECK(x == doctest::Approx(1.234).epsilon(1e-9));
    CHECK(fx == doctest::Approx(0.0));

    auto [xb, fxb] = bracketed_minimize([](double t) { return t; }, 2.0, 5.0, 32, 1e-10);
    CHECK(xb == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(fxb == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("optimal squeezing beats the coherent baseline at n̄ = 10") {
    const auto m = mode_moments(TransverseMode(HermiteGauss{0, 0}));
    const double nbar = 10.0;
    const auto opt = optimal_squeezing(m, nbar);
    CHECK(opt.s > 0.0);
    CHECK(opt.ratio < 1.0);
    CHECK(opt.alpha_sq + std::sinh(opt.s) * std::sinh(opt.s) ==
          doctest::Approx(nbar).epsilon(1e-10));

    // independent scan oracle over 10^4 grid points
    const double s_max = std::asinh(std::sqrt(nbar));
    double best_s = 0.0, best_ratio = 1e300;
    for (int i = 0; i < 10000; ++i) {
        const double s = s_max * i / 9999.0;
        const double nsq = std::sinh(s) * std::sinh(s);
        const double ratio = relative_width_noise(
            m, SingleModeState(DisplacedSqueezed{std::sqrt(nbar - nsq), s}));
        if (ratio < best_ratio) {
            best_ratio = ratio;
            best_s = s;
        }
    }
    CHECK(std::abs(opt.s - best_s) < 2.0 * s_max / 9999.0);
    CHECK(opt.ratio <= best_ratio + 1e-12);
}

TEST_CASE("squeezing endpoint: s = 0 is exactly the coherent reference") {
    const auto m = mode_moments(TransverseMode(HermiteGauss{0, 0}));
    const double nbar = 3.0;
    CHECK(relative_width_noise(
              m, SingleModeState(DisplacedSqueezed{std::sqrt(nbar), 0.0})) == 1.0);
}

TEST_CASE("optimal squeezing vanishes with the photon budget") {
    const auto m = mode_moments(TransverseMode(HermiteGauss{0, 0}));
    const double nbar = 1e-3;
    const auto opt = optimal_squeezing(m, nbar);
    CHECK(opt.ratio <= 1.0);
    CHECK(opt.s < 2e-3);

    // scan oracle confirms the interior minimum sits near s ≈ n̄
    const double s_max = std::asinh(std::sqrt(nbar));
    double best_s = 0.0, best_ratio = 1e300;
    for (int i = 0; i < 10000; ++i) {
        const double s = s_max * i / 9999.0;
        const double nsq = std::sinh(s) * std::sinh(s);
        const double ratio = relative_width_noise(
            m, SingleModeState(DisplacedSqueezed{std::sqrt(nbar - nsq), s}));
        if (ratio < best_ratio) {
            best_ratio = ratio;
            best_s = s;
        }
    }
    CHECK(std::abs(opt.s - best_s) < 2.0 * s_max / 9999.0);

    CHECK_THROWS_AS(optimal_squeezing(m, 0.0), std::domain_error);
    CHECK_THROWS_AS(optimal_squeezing(m, -1.0), std::domain_error);
}
