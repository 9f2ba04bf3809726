#ifndef BEAMWIDTH_CLI_HPP
#define BEAMWIDTH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace beamwidth::cli {

/// Parsed command line for the beamwidth tool.  A config formats back to an
/// equivalent command line (to_command_line) and reparses to the same value.
struct RunConfig {
    enum class Command { moments, noise, sweep, detection_mode, optimize_squeezing, figure };

    Command command = Command::noise;

    std::vector<std::string> basis_specs;   // moments
    std::string mode_spec = "hg:0,0";       // noise, sweep, detection-mode, optimize-squeezing
    std::string state_spec;                 // noise
    std::vector<std::string> sweep_states;  // sweep
    std::string normalize = "coherent";     // noise, sweep: coherent | mean

    double waist = 1.0;
    double k = 1.0;
    int nodes = 0;  // 0 → BEAMWIDTH_NODES env var or built-in default

    std::string nbar_range;  // sweep and figure fig2a/fig2b: start:stop:steps or scalar
    double nbar = 1.0;       // optimize-squeezing

    bool angular = false;     // detection-mode: emit m0 instead of v0
    std::string decompose;    // detection-mode: hg:<max_order> | lg:<max_order>
    int samples = 801;        // profile sample count
    int lmax = 10;            // figure fig2b

    std::string figure_name;  // figure: fig2a | fig2b | fig3a | fig3b
    std::string out_path;     // empty → stdout
    std::string format = "csv";

    bool operator==(const RunConfig&) const = default;
};

/// Parses argv (excluding the program name).  Throws std::invalid_argument
/// with a message naming the offending token on malformed input.
RunConfig parse_command_line(const std::vector<std::string>& args);

/// Canonical command line that reparses to an equal config.
std::string to_command_line(const RunConfig& cfg);

/// Executes the command.  Primary output goes to `out` unless cfg.out_path
/// names a file.  Returns the process exit status.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& diag);

/// Full entry point: parse, run, map errors to exit codes and diagnostics.
int run_main(int argc, const char* const* argv);

}  // namespace beamwidth::cli

#endif
