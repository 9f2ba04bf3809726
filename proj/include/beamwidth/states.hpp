#ifndef BEAMWIDTH_STATES_HPP
#define BEAMWIDTH_STATES_HPP

#include <string>
#include <variant>

namespace beamwidth {

// Single-mode quantum states, reduced to the photon statistics that the
// width-noise formulas consume: n̄, ⟨δn²⟩ and Mandel Q.

struct Coherent {
    double alpha = 0.0;  ///< real displacement, n̄ = α²
};

struct Fock {
    int n = 0;
};

struct SqueezedVacuum {
    double s = 0.0;  ///< squeezing parameter, n̄ = sinh²s
};

/// Displaced amplitude-squeezed state: real displacement α, squeezing along
/// the amplitude quadrature with parameter s.
struct DisplacedSqueezed {
    double alpha = 0.0;
    double s = 0.0;
};

struct Thermal {
    double n_th = 0.0;
};

struct DisplacedThermal {
    double alpha = 0.0;
    double n_th = 0.0;
};

class SingleModeState {
public:
    using Family =
        std::variant<Coherent, Fock, SqueezedVacuum, DisplacedSqueezed, Thermal, DisplacedThermal>;

    SingleModeState(Coherent c);
    SingleModeState(Fock f);
    SingleModeState(SqueezedVacuum s);
    SingleModeState(DisplacedSqueezed d);
    SingleModeState(Thermal t);
    SingleModeState(DisplacedThermal d);

    const Family& family() const { return family_; }
    std::string label() const;

private:
    Family family_;
};

/// Mean photon number n̄.
double mean_photon(const SingleModeState& state);

/// Photon-number variance ⟨δn²⟩:
///   coherent n̄ · Fock 0 · squeezed vacuum 2 sinh²s (sinh²s+1)
///   displaced squeezed α² e^{−2s} + 2 sinh²s (sinh²s+1)
///   thermal n̄(n̄+1) · displaced thermal n̄_th(n̄_th+1) + α²(1+2 n̄_th)
double photon_number_variance(const SingleModeState& state);

/// Mandel Q = ⟨δn²⟩/n̄ − 1; returns 0 for the vacuum limit n̄ = 0
/// (flagged by is_vacuum).
double mandel_q(const SingleModeState& state);

/// True when n̄ = 0 and the Q convention applies.
bool is_vacuum(const SingleModeState& state);

/// Parses `coherent:<alpha>`, `fock:<n>`, `sqvac:<s>`, `dispsq:<alpha>,<s>`,
/// `thermal:<nth>`, `dispthermal:<alpha>,<nth>`.
SingleModeState parse_state_spec(const std::string& spec);

}  // namespace beamwidth

#endif
