#include "beamwidth/states.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace beamwidth {

namespace {

void require_nonnegative(double v, const char* what) {
    if (v < 0.0 || !std::isfinite(v))
        throw std::invalid_argument(std::string(what) + " must be finite and non-negative");
}

}  // namespace

SingleModeState::SingleModeState(Coherent c) : family_(c) {
    require_nonnegative(c.alpha, "coherent amplitude");
}
SingleModeState::SingleModeState(Fock f) : family_(f) {
    if (f.n < 0) throw std::invalid_argument("fock photon number must be non-negative");
}
SingleModeState::SingleModeState(SqueezedVacuum s) : family_(s) {
    require_nonnegative(s.s, "squeezing parameter");
}
SingleModeState::SingleModeState(DisplacedSqueezed d) : family_(d) {
    require_nonnegative(d.alpha, "displacement");
    require_nonnegative(d.s, "squeezing parameter");
}
SingleModeState::SingleModeState(Thermal t) : family_(t) {
    require_nonnegative(t.n_th, "thermal photon number");
}
SingleModeState::SingleModeState(DisplacedThermal d) : family_(d) {
    require_nonnegative(d.alpha, "displacement");
    require_nonnegative(d.n_th, "thermal photon number");
}

std::string SingleModeState::label() const {
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%g", v);
        return std::string(buf);
    };
    return std::visit(
        [&](const auto& f) -> std::string {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Coherent>)
                return "coherent:" + num(f.alpha);
            else if constexpr (std::is_same_v<T, Fock>)
                return "fock:" + std::to_string(f.n);
            else if constexpr (std::is_same_v<T, SqueezedVacuum>)
                return "sqvac:" + num(f.s);
            else if constexpr (std::is_same_v<T, DisplacedSqueezed>)
                return "dispsq:" + num(f.alpha) + "," + num(f.s);
            else if constexpr (std::is_same_v<T, Thermal>)
                return "thermal:" + num(f.n_th);
            else
                return "dispthermal:" + num(f.alpha) + "," + num(f.n_th);
        },
        family_);
}

double mean_photon(const SingleModeState& state) {
    return std::visit(
        [](const auto& f) -> double {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Coherent>)
                return f.alpha * f.alpha;
            else if constexpr (std::is_same_v<T, Fock>)
                return double(f.n);
            else if constexpr (std::is_same_v<T, SqueezedVacuum>)
                return std::sinh(f.s) * std::sinh(f.s);
            else if constexpr (std::is_same_v<T, DisplacedSqueezed>)
                return std::sinh(f.s) * std::sinh(f.s) + f.alpha * f.alpha;
            else if constexpr (std::is_same_v<T, Thermal>)
                return f.n_th;
            else
                return f.n_th + f.alpha * f.alpha;
        },
        state.family());
}

double photon_number_variance(const SingleModeState& state) {
    return std::visit(
        [](const auto& f) -> double {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Coherent>) {
                return f.alpha * f.alpha;
            } else if constexpr (std::is_same_v<T, Fock>) {
                return 0.0;
            } else if constexpr (std::is_same_v<T, SqueezedVacuum>) {
                const double nsq = std::sinh(f.s) * std::sinh(f.s);
                return 2.0 * nsq * (nsq + 1.0);
            } else if constexpr (std::is_same_v<T, DisplacedSqueezed>) {
                const double nsq = std::sinh(f.s) * std::sinh(f.s);
                return f.alpha * f.alpha * std::exp(-2.0 * f.s) + 2.0 * nsq * (nsq + 1.0);
            } else if constexpr (std::is_same_v<T, Thermal>) {
                return f.n_th * (f.n_th + 1.0);
            } else {
                return f.n_th * (f.n_th + 1.0) + f.alpha * f.alpha * (1.0 + 2.0 * f.n_th);
            }
        },
        state.family());
}

bool is_vacuum(const SingleModeState& state) { return mean_photon(state) == 0.0; }

double mandel_q(const SingleModeState& state) {
    const double nbar = mean_photon(state);
    if (nbar == 0.0) return 0.0;  // vacuum-limit convention
    return photon_number_variance(state) / nbar - 1.0;
}

namespace {

double parse_real(const std::string& token, const std::string& spec) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(token, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid state spec '" + spec + "': bad number '" + token +
                                    "'");
    }
    if (pos != token.size())
        throw std::invalid_argument("invalid state spec '" + spec + "': bad number '" + token +
                                    "'");
    return v;
}

int parse_whole(const std::string& token, const std::string& spec) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(token, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid state spec '" + spec + "': bad integer '" + token +
                                    "'");
    }
    if (pos != token.size())
        throw std::invalid_argument("invalid state spec '" + spec + "': bad integer '" + token +
                                    "'");
    return v;
}

}  // namespace

SingleModeState parse_state_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("invalid state spec '" + spec +
                                    "': expected <family>:<parameters>");
    const std::string family = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    const auto comma = rest.find(',');

    auto one = [&]() {
        if (comma != std::string::npos)
            throw std::invalid_argument("invalid state spec '" + spec +
                                        "': family takes one parameter");
        return parse_real(rest, spec);
    };
    auto two = [&]() {
        if (comma == std::string::npos)
            throw std::invalid_argument("invalid state spec '" + spec +
                                        "': family takes two parameters");
        return std::pair<double, double>{parse_real(rest.substr(0, comma), spec),
                                         parse_real(rest.substr(comma + 1), spec)};
    };

    if (family == "coherent") return SingleModeState(Coherent{one()});
    if (family == "fock") {
        if (comma != std::string::npos)
            throw std::invalid_argument("invalid state spec '" + spec +
                                        "': family takes one parameter");
        return SingleModeState(Fock{parse_whole(rest, spec)});
    }
    if (family == "sqvac") return SingleModeState(SqueezedVacuum{one()});
    if (family == "dispsq") {
        auto [a, s] = two();
        return SingleModeState(DisplacedSqueezed{a, s});
    }
    if (family == "thermal") return SingleModeState(Thermal{one()});
    if (family == "dispthermal") {
        auto [a, n] = two();
        return SingleModeState(DisplacedThermal{a, n});
    }
    throw std::invalid_argument("invalid state spec '" + spec + "': unknown family '" + family +
                                "'");
}

}  // namespace beamwidth
