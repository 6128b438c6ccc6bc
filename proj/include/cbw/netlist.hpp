#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cbw/analysis.hpp"
#include "cbw/matrix2.hpp"
#include "cbw/optics.hpp"

namespace cbw {

/// One `block` directive: a run of `repeat` identical coupled double-MZI
/// blocks. A missing phi means the block takes the swept phase.
struct BlockDecl {
    std::optional<double> phi; // nullopt => swept
    double psi = 0.0;
    Coupling coupling = Coupling::Asymmetric;
    int repeat = 1;

    bool swept() const { return !phi.has_value(); }
    bool operator==(const BlockDecl&) const = default;
};

/// Parsed netlist. Blocks apply to the source field in declaration order,
/// first line first.
///
/// Grammar (one directive per line, '#' starts a comment):
///
///   source intensity=<float>                                # optional
///   block phi=<float>|sweep psi=<float> coupling=asym|sym repeat=<int>
///
/// `phi` is required per block; psi defaults to 0, coupling to asym, repeat
/// to 1. Angles are radians. All `sweep` blocks share the one swept phase.
struct CircuitSpec {
    double source_intensity = 1.0;
    std::vector<BlockDecl> blocks;

    bool has_sweep() const;
    int total_blocks() const; // sum of repeats
    bool operator==(const CircuitSpec&) const = default;
};

/// Parses netlist text; throws parse_error carrying the offending line.
CircuitSpec parse_netlist(const std::string& text);

/// Canonical text form; parse_netlist(render_netlist(s)) == s.
std::string render_netlist(const CircuitSpec& spec);

/// Transfer matrix of the whole circuit with the swept phase bound to
/// `swept_phi` (ignored when no block sweeps).
Matrix2 circuit_matrix(const CircuitSpec& spec, double swept_phi);

/// Port intensities of the circuit with the swept phase run over `grid`.
SweepResult sweep_circuit(const CircuitSpec& spec, const std::vector<double>& grid);

} // namespace cbw
