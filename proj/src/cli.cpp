#include "beamwidth/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "beamwidth/detection.hpp"
#include "beamwidth/modes.hpp"
#include "beamwidth/moments.hpp"
#include "beamwidth/states.hpp"
#include "beamwidth/width_noise.hpp"

namespace beamwidth::cli {

namespace {

using nlohmann::json;

// data values carry 12 significant digits
std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// exact round-trip formatting for command-line reconstruction
std::string fmt_exact(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

struct HelpRequested {
    std::string text;
};

// Splits a comma-joined list of mode specs; commas inside a spec (hg:0,0)
// belong to the previous token, which is recognized by its ':' prefix.
std::vector<std::string> split_mode_specs(const std::string& joined) {
    std::vector<std::string> out;
    std::string token;
    std::istringstream in(joined);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        if (token.find(':') != std::string::npos || out.empty())
            out.push_back(token);
        else
            out.back() += "," + token;
    }
    return out;
}

std::vector<std::string> split_plain(const std::string& joined) {
    std::vector<std::string> out;
    std::string token;
    std::istringstream in(joined);
    while (std::getline(in, token, ','))
        if (!token.empty()) out.push_back(token);
    return out;
}

struct Range {
    double start = 0, stop = 0;
    int steps = 1;
};

Range parse_range(const std::string& text) {
    const auto c1 = text.find(':');
    if (c1 == std::string::npos) {
        // scalar shorthand
        Range r;
        try {
            std::size_t pos = 0;
            r.start = r.stop = std::stod(text, &pos);
            if (pos != text.size()) throw std::invalid_argument(text);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid range '" + text +
                                        "': expected <start>:<stop>:<steps>");
        }
        return r;
    }
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos)
        throw std::invalid_argument("invalid range '" + text +
                                    "': expected <start>:<stop>:<steps>");
    Range r;
    try {
        std::size_t pos = 0;
        r.start = std::stod(text.substr(0, c1), &pos);
        r.stop = std::stod(text.substr(c1 + 1, c2 - c1 - 1), &pos);
        r.steps = std::stoi(text.substr(c2 + 1), &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid range '" + text +
                                    "': expected <start>:<stop>:<steps>");
    }
    if (r.steps < 1) throw std::invalid_argument("invalid range '" + text + "': steps < 1");
    if (r.stop < r.start)
        throw std::invalid_argument("invalid range '" + text + "': stop < start");
    return r;
}

double range_value(const Range& r, int i) {
    if (r.steps == 1) return r.start;
    return r.start + (r.stop - r.start) * double(i) / double(r.steps - 1);
}

int effective_nodes(const RunConfig& cfg) {
    if (cfg.nodes > 0) return cfg.nodes;
    if (const char* env = std::getenv("BEAMWIDTH_NODES")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 0;  // library default
}

// ---------------------------------------------------------------------------
// swept state families: the amplitude-like parameter is eliminated in favor
// of the swept mean photon number
// ---------------------------------------------------------------------------

struct SweepFamily {
    enum class Kind { coherent, fock, sqvac, thermal, dispsq, dispthermal } kind;
    double param = 0.0;  // dispsq: s; dispthermal: n_th
    std::string label;
};

SweepFamily parse_sweep_token(const std::string& token) {
    SweepFamily f;
    f.label = token;
    const auto colon = token.find(':');
    const std::string family = token.substr(0, colon);
    if (family == "coherent" && colon == std::string::npos) {
        f.kind = SweepFamily::Kind::coherent;
        return f;
    }
    if (family == "fock" && colon == std::string::npos) {
        f.kind = SweepFamily::Kind::fock;
        return f;
    }
    if (family == "sqvac" && colon == std::string::npos) {
        f.kind = SweepFamily::Kind::sqvac;
        return f;
    }
    if (family == "thermal" && colon == std::string::npos) {
        f.kind = SweepFamily::Kind::thermal;
        return f;
    }
    if (family == "dispsq" && colon != std::string::npos) {
        f.kind = SweepFamily::Kind::dispsq;
        std::string arg = token.substr(colon + 1);
        if (arg == "-3dB" || arg == "-3db") {
            f.param = 0.5 * std::log(2.0);  // e^{−2s} = 1/2
        } else {
            try {
                std::size_t pos = 0;
                f.param = std::stod(arg, &pos);
                if (pos != arg.size() || f.param < 0.0) throw std::invalid_argument(arg);
            } catch (const std::exception&) {
                throw std::invalid_argument("invalid sweep state '" + token +
                                            "': bad squeezing parameter");
            }
        }
        return f;
    }
    if (family == "dispthermal" && colon != std::string::npos) {
        f.kind = SweepFamily::Kind::dispthermal;
        try {
            std::size_t pos = 0;
            f.param = std::stod(token.substr(colon + 1), &pos);
            if (pos != token.size() - colon - 1 || f.param < 0.0)
                throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid sweep state '" + token +
                                        "': bad thermal photon number");
        }
        return f;
    }
    throw std::invalid_argument(
        "invalid sweep state '" + token +
        "': expected coherent | fock | sqvac | thermal | dispsq:<s|-3dB> | dispthermal:<nth>");
}

// Mandel Q of the family at total photon number nbar; NaN when the family
// cannot reach that nbar (negative displacement budget).
double sweep_mandel_q(const SweepFamily& f, double nbar) {
    switch (f.kind) {
        case SweepFamily::Kind::coherent:
            return 0.0;
        case SweepFamily::Kind::fock:
            return -1.0;
        case SweepFamily::Kind::sqvac:
            return 2.0 * nbar + 1.0;
        case SweepFamily::Kind::thermal:
            return nbar;
        case SweepFamily::Kind::dispsq: {
            const double nsq = std::sinh(f.param) * std::sinh(f.param);
            if (nbar < nsq) return std::nan("");
            const double var = (nbar - nsq) * std::exp(-2.0 * f.param) +
                               2.0 * nsq * (nsq + 1.0);
            return var / nbar - 1.0;
        }
        case SweepFamily::Kind::dispthermal:
            if (nbar < f.param) return std::nan("");
            return (2.0 - f.param / nbar) * f.param;
    }
    return std::nan("");
}

double sweep_ratio(const ModeMoments& m, const SweepFamily& f, double nbar,
                   const std::string& normalize) {
    const double q = sweep_mandel_q(f, nbar);
    if (normalize == "mean") return (m.r2 * m.r2 * q + m.r4) / (nbar * m.r2 * m.r2);
    return 1.0 + (m.r2 * m.r2 / m.r4) * q;
}

// ---------------------------------------------------------------------------
// command implementations; each returns the primary artifact (plus an
// optional sidecar document for detection-mode)
// ---------------------------------------------------------------------------

std::string run_moments(const RunConfig& cfg) {
    if (cfg.basis_specs.empty())
        throw std::invalid_argument("moments: --basis requires at least one mode spec");
    std::vector<TransverseMode> basis;
    for (const auto& spec : cfg.basis_specs) basis.push_back(parse_mode_spec(spec, cfg.waist));
    const auto q = default_quadrature(basis, effective_nodes(cfg));
    const auto mm = build_matrices(basis, cfg.k, q);

    auto matrix_json = [&](const ComplexMatrix& m) {
        json rows = json::array();
        for (std::size_t i = 0; i < m.size(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < m.size(); ++j)
                row.push_back({m.at(i, j).real(), m.at(i, j).imag()});
            rows.push_back(std::move(row));
        }
        return rows;
    };

    json doc;
    doc["basis"] = mm.basis_labels;
    doc["waist"] = mm.waist;
    doc["k"] = mm.k;
    doc["D"] = matrix_json(mm.d);
    doc["F"] = matrix_json(mm.f);
    doc["Dtilde"] = matrix_json(mm.d_tilde);
    doc["Ftilde"] = matrix_json(mm.f_tilde);
    doc["hermitization_residual"] = {{"D", mm.residual.d},
                                     {"F", mm.residual.f},
                                     {"Dtilde", mm.residual.d_tilde},
                                     {"Ftilde", mm.residual.f_tilde}};
    return doc.dump(2) + "\n";
}

std::string run_noise(const RunConfig& cfg) {
    if (cfg.state_spec.empty()) throw std::invalid_argument("noise: --state is required");
    if (cfg.normalize != "coherent" && cfg.normalize != "mean")
        throw std::invalid_argument("noise: --normalize must be 'coherent' or 'mean', got '" +
                                    cfg.normalize + "'");
    const TransverseMode mode = parse_mode_spec(cfg.mode_spec, cfg.waist);
    const SingleModeState state = parse_state_spec(cfg.state_spec);
    const auto m = mode_moments(mode, default_quadrature(mode, effective_nodes(cfg)));
    const double value = cfg.normalize == "mean" ? relative_noise_by_mean(m, state)
                                                 : relative_width_noise(m, state);
    if (cfg.format == "json") {
        json doc;
        doc["mode"] = mode.label();
        doc["state"] = state.label();
        doc["normalize"] = cfg.normalize;
        doc["value"] = value;
        return doc.dump(2) + "\n";
    }
    return fmt12(value) + "\n";
}

std::string run_sweep(const RunConfig& cfg) {
    if (cfg.sweep_states.empty())
        throw std::invalid_argument("sweep: --states requires at least one family");
    if (cfg.nbar_range.empty()) throw std::invalid_argument("sweep: --nbar is required");
    if (cfg.normalize != "coherent" && cfg.normalize != "mean")
        throw std::invalid_argument("sweep: --normalize must be 'coherent' or 'mean', got '" +
                                    cfg.normalize + "'");
    const Range range = parse_range(cfg.nbar_range);
    if (range.start <= 0.0)
        throw std::domain_error("sweep: nbar must be positive (the coherent reference "
                                "diverges at nbar = 0)");

    std::vector<SweepFamily> families;
    for (const auto& token : cfg.sweep_states) families.push_back(parse_sweep_token(token));

    const TransverseMode mode = parse_mode_spec(cfg.mode_spec, cfg.waist);
    const auto m = mode_moments(mode, default_quadrature(mode, effective_nodes(cfg)));

    if (cfg.format == "json") {
        json doc;
        json nbars = json::array();
        for (int i = 0; i < range.steps; ++i) nbars.push_back(range_value(range, i));
        doc["nbar"] = std::move(nbars);
        for (const auto& f : families) {
            json col = json::array();
            for (int i = 0; i < range.steps; ++i)
                col.push_back(sweep_ratio(m, f, range_value(range, i), cfg.normalize));
            doc["series"][f.label] = std::move(col);
        }
        return doc.dump(2) + "\n";
    }

    std::string out = "nbar";
    for (const auto& f : families) out += "," + f.label;
    out += "\n";
    for (int i = 0; i < range.steps; ++i) {
        const double nbar = range_value(range, i);
        out += fmt12(nbar);
        for (const auto& f : families)
            out += "," + fmt12(sweep_ratio(m, f, nbar, cfg.normalize));
        out += "\n";
    }
    return out;
}

std::string run_optimize(const RunConfig& cfg) {
    const TransverseMode mode = parse_mode_spec(cfg.mode_spec, cfg.waist);
    const auto m = mode_moments(mode, default_quadrature(mode, effective_nodes(cfg)));
    const auto opt = optimal_squeezing(m, cfg.nbar);
    if (cfg.format == "json") {
        json doc;
        doc["mode"] = mode.label();
        doc["nbar"] = cfg.nbar;
        doc["s"] = opt.s;
        doc["ratio"] = opt.ratio;
        doc["alpha_sq"] = opt.alpha_sq;
        return doc.dump(2) + "\n";
    }
    return "s,ratio,alpha_sq\n" + fmt12(opt.s) + "," + fmt12(opt.ratio) + "," +
           fmt12(opt.alpha_sq) + "\n";
}

struct DetectionArtifacts {
    std::string profile;
    std::string sidecar;  // empty when no decomposition was requested
};

int decompose_max_order(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string family = spec.substr(0, colon);
    if (colon == std::string::npos || (family != "hg" && family != "lg"))
        throw std::invalid_argument("invalid decompose spec '" + spec +
                                    "': expected hg:<max_order> or lg:<max_order>");
    try {
        std::size_t pos = 0;
        const int max_order = std::stoi(spec.substr(colon + 1), &pos);
        if (pos != spec.size() - colon - 1 || max_order < 0) throw std::invalid_argument(spec);
        return max_order;
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid decompose spec '" + spec + "': bad order");
    }
}

DetectionArtifacts run_detection(const RunConfig& cfg) {
    const TransverseMode mode = parse_mode_spec(cfg.mode_spec, cfg.waist);
    if (!mode.is_analytic())
        throw std::invalid_argument("detection-mode: mode must be an analytic family");
    Quadrature q = default_quadrature(mode, effective_nodes(cfg));
    if (!cfg.decompose.empty() &&
        q.scheme() == Quadrature::Scheme::gauss_laguerre_radial) {
        // the decomposition basis carries azimuthal harmonics the default
        // circularly symmetric grid cannot resolve
        const int mode_harmonic = std::holds_alternative<LaguerreGauss>(mode.family())
                                      ? std::abs(std::get<LaguerreGauss>(mode.family()).l)
                                      : 0;
        const int angular = 2 * (decompose_max_order(cfg.decompose) + mode_harmonic) + 2;
        const int radial = effective_nodes(cfg) > 0 ? 2 * effective_nodes(cfg) : 128;
        q = Quadrature::gauss_laguerre_radial(radial, cfg.waist, angular);
    }

    // normalization constants from the quadrature; the profile itself is
    // evaluated analytically on a uniform plot grid
    const double f00 =
        cfg.angular ? 0.0 : spatial_moment(mode, mode, 2, q).real();
    const double ft00 =
        cfg.angular ? fourth_angular_moment(mode, mode, cfg.k, q).real() : 0.0;
    auto profile_value = [&](double x, double y) -> Complex {
        if (cfg.angular)
            return -mode.laplacian(x, y) / (cfg.k * cfg.k * std::sqrt(ft00));
        return (x * x + y * y) * mode.amplitude(x, y) / std::sqrt(f00);
    };

    const double radius = suggested_plot_radius(mode);
    const bool one_d = mode.dimension() == 1;
    const int n = std::max(3, cfg.samples);

    std::string csv = one_d ? "x,re,im\n" : "x,y,re,im\n";
    for (int i = 0; i < n; ++i) {
        const double x = -radius + 2.0 * radius * double(i) / double(n - 1);
        const Complex v = profile_value(x, 0.0);
        csv += fmt12(x);
        if (!one_d) csv += ",0";
        csv += "," + fmt12(v.real()) + "," + fmt12(v.imag()) + "\n";
    }

    DetectionArtifacts art;
    art.profile = std::move(csv);

    if (!cfg.decompose.empty()) {
        const std::string family = cfg.decompose.substr(0, cfg.decompose.find(':'));
        const int max_order = decompose_max_order(cfg.decompose);
        const SampledMode detection = cfg.angular
                                          ? angular_detection_mode(mode, cfg.k, q)
                                          : width_detection_mode(mode, q);
        const auto dec = decompose_on_basis(detection,
                                            family == "hg" ? BasisFamily::hermite_gauss
                                                           : BasisFamily::laguerre_gauss,
                                            max_order);
        const auto peaks = find_profile_peaks(
            [&](double x) { return profile_value(x, 0.0).real(); }, -radius, radius, 4096);

        json doc;
        doc["mode"] = mode.label();
        doc["detection"] = cfg.angular ? "angular" : "width";
        doc["basis"] = dec.basis_labels;
        json coeffs = json::array();
        for (const auto& c : dec.coefficients) coeffs.push_back({c.real(), c.imag()});
        doc["coefficients"] = std::move(coeffs);
        doc["completeness"] = dec.completeness;
        if (!dec.warning.empty()) doc["warning"] = dec.warning;
        doc["peaks"] = peaks;
        art.sidecar = doc.dump(2) + "\n";
    }
    return art;
}

std::string run_figure(const RunConfig& cfg) {
    if (cfg.format != "csv")
        throw std::invalid_argument("figure commands emit csv only");

    if (cfg.figure_name == "fig2a") {
        // relative width noise of the fundamental mode vs photon number for
        // the six swept families; the displaced squeezed curve is pinned at
        // 3 dB of amplitude squeezing and the displaced thermal at nth = 2
        RunConfig sweep_cfg = cfg;
        sweep_cfg.command = RunConfig::Command::sweep;
        sweep_cfg.sweep_states = {"coherent", "fock",          "sqvac",
                                  "thermal",  "dispthermal:2", "dispsq:-3dB"};
        sweep_cfg.normalize = "coherent";
        if (sweep_cfg.nbar_range.empty()) sweep_cfg.nbar_range = "0.1:20:200";
        return run_sweep(sweep_cfg);
    }

    if (cfg.figure_name == "fig2b") {
        // coherent-state noise by mean width for the LG_{l,0} family
        const Range r = cfg.nbar_range.empty() ? Range{1.0, 1.0, 1}
                                               : parse_range(cfg.nbar_range);
        const double nbar = r.start;
        if (nbar <= 0.0)
            throw std::domain_error("fig2b: nbar must be positive (the noise diverges "
                                    "as nbar -> 0)");
        std::string out = "l,noise_by_mean\n";
        for (int l = 0; l <= cfg.lmax; ++l) {
            const TransverseMode mode(LaguerreGauss{l, 0}, cfg.waist);
            const auto m = mode_moments(mode, default_quadrature(mode, effective_nodes(cfg)));
            out += std::to_string(l) + "," +
                   fmt12(relative_noise_by_mean(m, SingleModeState(Coherent{std::sqrt(nbar)}))) +
                   "\n";
        }
        return out;
    }

    if (cfg.figure_name == "fig3a" || cfg.figure_name == "fig3b") {
        // mean field mode and its width detection mode along a diameter
        const TransverseMode mode =
            cfg.figure_name == "fig3a"
                ? TransverseMode(HermiteGauss1D{0}, cfg.waist)
                : TransverseMode(FlattenedGaussian{30}, cfg.waist);
        const auto q = default_quadrature(mode, effective_nodes(cfg));
        const double f00 = spatial_moment(mode, mode, 2, q).real();

        // v0 reaches past u0; size the window from its order-2 envelope
        const double radius = cfg.figure_name == "fig3a"
                                  ? suggested_plot_radius(TransverseMode(HermiteGauss1D{2}, cfg.waist))
                                  : suggested_plot_radius(mode);
        const int n = std::max(3, cfg.samples);
        std::string out = "x,u0,v0\n";
        for (int i = 0; i < n; ++i) {
            const double x = -radius + 2.0 * radius * double(i) / double(n - 1);
            const double u = mode.amplitude(x, 0.0).real();
            const double v = x * x * u / std::sqrt(f00);
            out += fmt12(x) + "," + fmt12(u) + "," + fmt12(v) + "\n";
        }
        return out;
    }

    throw std::invalid_argument("unknown figure '" + cfg.figure_name +
                                "': expected fig2a | fig2b | fig3a | fig3b");
}

void write_artifact(const RunConfig& cfg, const std::string& primary,
                    const std::string& sidecar, std::ostream& out) {
    if (cfg.out_path.empty()) {
        out << primary;
        if (!sidecar.empty()) out << "\n" << sidecar;
        return;
    }
    std::ofstream file(cfg.out_path);
    if (!file) throw std::runtime_error("cannot open output file '" + cfg.out_path + "'");
    file << primary;
    if (!sidecar.empty()) {
        const std::string side_path = cfg.out_path + ".decomposition.json";
        std::ofstream side(side_path);
        if (!side) throw std::runtime_error("cannot open output file '" + side_path + "'");
        side << sidecar;
    }
}

void build_app(CLI::App& app, RunConfig& cfg, std::string& basis_joined,
               std::string& states_joined) {
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--waist", cfg.waist, "beam waist w (length unit)");
        sub->add_option("--k", cfg.k, "wavenumber for angular-spectrum quantities");
        sub->add_option("--nodes", cfg.nodes,
                        "quadrature nodes per axis (radial rules use twice this; "
                        "overrides BEAMWIDTH_NODES)");
        sub->add_option("--out", cfg.out_path, "output path (default stdout)");
        sub->add_option("--format", cfg.format, "csv | json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    auto* moments = app.add_subcommand("moments", "moment matrices D, F, Dtilde, Ftilde");
    moments->add_option("--basis", basis_joined, "mode specs, comma separated")->required();
    add_common(moments);

    auto* noise = app.add_subcommand("noise", "width noise of a state in a mode");
    noise->add_option("--mode", cfg.mode_spec, "mode spec (hg:<nx>,<ny> | hg1d:<n> | "
                                               "lg:<l>,<p> | fg:<N>)");
    noise->add_option("--state", cfg.state_spec, "state spec")->required();
    noise->add_option("--normalize", cfg.normalize, "coherent | mean");
    add_common(noise);

    auto* sweep = app.add_subcommand("sweep", "noise ratios over a photon-number range");
    sweep->add_option("--mode", cfg.mode_spec, "mode spec");
    sweep->add_option("--states", states_joined,
                      "swept families: coherent | fock | sqvac | thermal | "
                      "dispsq:<s|-3dB> | dispthermal:<nth>")
        ->required();
    sweep->add_option("--nbar", cfg.nbar_range, "<start>:<stop>:<steps>")->required();
    sweep->add_option("--normalize", cfg.normalize, "coherent | mean");
    add_common(sweep);

    auto* det = app.add_subcommand("detection-mode", "detection-mode profile and decomposition");
    det->add_option("--mode", cfg.mode_spec, "mean field mode spec");
    det->add_flag("--angular", cfg.angular, "angular-spread detection mode m0 instead of v0");
    det->add_option("--decompose", cfg.decompose, "hg:<max_order> | lg:<max_order>");
    det->add_option("--samples", cfg.samples, "profile sample count");
    add_common(det);

    auto* opt = app.add_subcommand("optimize-squeezing",
                                   "optimal displaced-squeezed state at fixed photon number");
    opt->add_option("--mode", cfg.mode_spec, "mode spec");
    opt->add_option("--nbar", cfg.nbar, "total photon number")->required();
    add_common(opt);

    auto* fig = app.add_subcommand("figure", "dataset reproduction commands");
    fig->add_option("name", cfg.figure_name, "fig2a | fig2b | fig3a | fig3b")->required();
    fig->add_option("--nbar", cfg.nbar_range,
                    "fig2a: <start>:<stop>:<steps>; fig2b: scalar photon number");
    fig->add_option("--lmax", cfg.lmax, "fig2b: largest azimuthal index");
    fig->add_option("--samples", cfg.samples, "fig3a/fig3b: profile sample count");
    add_common(fig);
}

}  // namespace

RunConfig parse_command_line(const std::vector<std::string>& args) {
    RunConfig cfg;
    std::string basis_joined, states_joined;
    CLI::App app{"beam-width quantum noise toolkit"};
    app.name("beamwidth");
    build_app(app, cfg, basis_joined, states_joined);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        throw HelpRequested{app.help()};
    } catch (const CLI::CallForAllHelp& e) {
        throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        throw std::invalid_argument(e.what());
    }

    if (app.got_subcommand("moments")) {
        cfg.command = RunConfig::Command::moments;
        cfg.basis_specs = split_mode_specs(basis_joined);
    } else if (app.got_subcommand("noise")) {
        cfg.command = RunConfig::Command::noise;
    } else if (app.got_subcommand("sweep")) {
        cfg.command = RunConfig::Command::sweep;
        cfg.sweep_states = split_plain(states_joined);
    } else if (app.got_subcommand("detection-mode")) {
        cfg.command = RunConfig::Command::detection_mode;
    } else if (app.got_subcommand("optimize-squeezing")) {
        cfg.command = RunConfig::Command::optimize_squeezing;
    } else if (app.got_subcommand("figure")) {
        cfg.command = RunConfig::Command::figure;
    }
    return cfg;
}

std::string to_command_line(const RunConfig& cfg) {
    std::vector<std::string> parts;
    auto push_flag = [&](const std::string& flag, const std::string& value) {
        if (!value.empty()) {
            parts.push_back(flag);
            parts.push_back(value);
        }
    };
    auto join = [](const std::vector<std::string>& v) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
        return out;
    };

    switch (cfg.command) {
        case RunConfig::Command::moments:
            parts.push_back("moments");
            push_flag("--basis", join(cfg.basis_specs));
            break;
        case RunConfig::Command::noise:
            parts.push_back("noise");
            push_flag("--mode", cfg.mode_spec);
            push_flag("--state", cfg.state_spec);
            push_flag("--normalize", cfg.normalize);
            break;
        case RunConfig::Command::sweep:
            parts.push_back("sweep");
            push_flag("--mode", cfg.mode_spec);
            push_flag("--states", join(cfg.sweep_states));
            push_flag("--nbar", cfg.nbar_range);
            push_flag("--normalize", cfg.normalize);
            break;
        case RunConfig::Command::detection_mode:
            parts.push_back("detection-mode");
            push_flag("--mode", cfg.mode_spec);
            if (cfg.angular) parts.push_back("--angular");
            push_flag("--decompose", cfg.decompose);
            push_flag("--samples", std::to_string(cfg.samples));
            break;
        case RunConfig::Command::optimize_squeezing:
            parts.push_back("optimize-squeezing");
            push_flag("--mode", cfg.mode_spec);
            push_flag("--nbar", fmt_exact(cfg.nbar));
            break;
        case RunConfig::Command::figure:
            parts.push_back("figure");
            parts.push_back(cfg.figure_name);
            push_flag("--nbar", cfg.nbar_range);
            push_flag("--lmax", std::to_string(cfg.lmax));
            push_flag("--samples", std::to_string(cfg.samples));
            break;
    }
    push_flag("--waist", fmt_exact(cfg.waist));
    push_flag("--k", fmt_exact(cfg.k));
    if (cfg.nodes > 0) push_flag("--nodes", std::to_string(cfg.nodes));
    push_flag("--out", cfg.out_path);
    push_flag("--format", cfg.format);

    std::string line;
    for (std::size_t i = 0; i < parts.size(); ++i) line += (i ? " " : "") + parts[i];
    return line;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    switch (cfg.command) {
        case RunConfig::Command::moments:
            write_artifact(cfg, run_moments(cfg), "", out);
            return 0;
        case RunConfig::Command::noise:
            write_artifact(cfg, run_noise(cfg), "", out);
            return 0;
        case RunConfig::Command::sweep:
            write_artifact(cfg, run_sweep(cfg), "", out);
            return 0;
        case RunConfig::Command::detection_mode: {
            const auto art = run_detection(cfg);
            write_artifact(cfg, art.profile, art.sidecar, out);
            return 0;
        }
        case RunConfig::Command::optimize_squeezing:
            write_artifact(cfg, run_optimize(cfg), "", out);
            return 0;
        case RunConfig::Command::figure:
            write_artifact(cfg, run_figure(cfg), "", out);
            return 0;
    }
    return 1;
}

int run_main(int argc, const char* const* argv) {
    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        const RunConfig cfg = parse_command_line(args);
        return run(cfg, std::cout, std::cerr);
    } catch (const HelpRequested& h) {
        std::cout << h.text;
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace beamwidth::cli
