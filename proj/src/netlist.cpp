#include "cbw/netlist.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "cbw/emit.hpp"
#include "cbw/errors.hpp"

namespace cbw {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string token;
    while (in >> token) tokens.push_back(token);
    return tokens;
}

struct KeyValue {
    std::string key;
    std::string value;
};

KeyValue split_key_value(const std::string& token, int line) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= token.size()) {
        throw parse_error(line, "expected key=value, got '" + token + "'");
    }
    return {token.substr(0, eq), token.substr(eq + 1)};
}

double parse_number(const std::string& text, const std::string& key, int line) {
    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || text.empty() || errno == ERANGE ||
        !std::isfinite(value)) {
        throw parse_error(line, "malformed number for " + key + ": '" + text + "'");
    }
    return value;
}

int parse_repeat(const std::string& text, int line) {
    errno = 0;
    char* end = nullptr;
    const long value = std::strtol(text.c_str(), &end, 10);
    if (end != text.c_str() + text.size() || text.empty() || errno == ERANGE) {
        throw parse_error(line, "malformed integer for repeat: '" + text + "'");
    }
    if (value < 1) throw parse_error(line, "repeat must be >= 1");
    if (value > 1000000) throw parse_error(line, "repeat too large");
    return static_cast<int>(value);
}

void reject_known_bad_key(const std::string& key, int line) {
    if (key == "deg") {
        throw parse_error(line, "angles are radians; deg is not accepted");
    }
}

} // namespace

bool CircuitSpec::has_sweep() const {
    for (const BlockDecl& block : blocks) {
        if (block.swept()) return true;
    }
    return false;
}

int CircuitSpec::total_blocks() const {
    int total = 0;
    for (const BlockDecl& block : blocks) total += block.repeat;
    return total;
}

CircuitSpec parse_netlist(const std::string& text) {
    CircuitSpec spec;
    bool saw_source = false;
    int line_no = 0;

    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::vector<std::string> tokens = split_tokens(raw);
        if (tokens.empty()) continue;

        const std::string& directive = tokens.front();
        if (directive == "source") {
            if (saw_source) throw parse_error(line_no, "duplicate source directive");
            saw_source = true;
            bool saw_intensity = false;
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                const KeyValue kv = split_key_value(tokens[i], line_no);
                if (kv.key == "intensity") {
                    if (saw_intensity) throw parse_error(line_no, "duplicate key intensity");
                    saw_intensity = true;
                    const double value = parse_number(kv.value, kv.key, line_no);
                    if (value < 0.0) throw parse_error(line_no, "intensity must be >= 0");
                    spec.source_intensity = value;
                } else {
                    reject_known_bad_key(kv.key, line_no);
                    throw parse_error(line_no, "unknown source key '" + kv.key + "'");
                }
            }
        } else if (directive == "block") {
            BlockDecl block;
            bool saw_phi = false, saw_psi = false, saw_coupling = false, saw_repeat = false;
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                const KeyValue kv = split_key_value(tokens[i], line_no);
                if (kv.key == "phi") {
                    if (saw_phi) throw parse_error(line_no, "duplicate key phi");
                    saw_phi = true;
                    if (kv.value == "sweep") {
                        block.phi = std::nullopt;
                    } else {
                        block.phi = parse_number(kv.value, kv.key, line_no);
                    }
                } else if (kv.key == "psi") {
                    if (saw_psi) throw parse_error(line_no, "duplicate key psi");
                    saw_psi = true;
                    block.psi = parse_number(kv.value, kv.key, line_no);
                } else if (kv.key == "coupling") {
                    if (saw_coupling) throw parse_error(line_no, "duplicate key coupling");
                    saw_coupling = true;
                    if (kv.value == "asym") {
                        block.coupling = Coupling::Asymmetric;
                    } else if (kv.value == "sym") {
                        block.coupling = Coupling::Symmetric;
                    } else {
                        throw parse_error(line_no, "coupling must be asym or sym");
                    }
                } else if (kv.key == "repeat") {
                    if (saw_repeat) throw parse_error(line_no, "duplicate key repeat");
                    saw_repeat = true;
                    block.repeat = parse_repeat(kv.value, line_no);
                } else {
                    reject_known_bad_key(kv.key, line_no);
                    throw parse_error(line_no, "unknown block key '" + kv.key + "'");
                }
            }
            if (!saw_phi) throw parse_error(line_no, "block needs phi=<radians> or phi=sweep");
            spec.blocks.push_back(block);
        } else {
            throw parse_error(line_no, "unknown directive '" + directive + "'");
        }
    }
    if (spec.blocks.empty()) {
        throw parse_error(line_no == 0 ? 1 : line_no, "netlist declares no blocks");
    }
    return spec;
}

std::string render_netlist(const CircuitSpec& spec) {
    std::string out = "source intensity=" + format_double(spec.source_intensity) + "\n";
    for (const BlockDecl& block : spec.blocks) {
        out += "block phi=";
        out += block.swept() ? "sweep" : format_double(*block.phi);
        out += " psi=" + format_double(block.psi);
        out += " coupling=";
        out += block.coupling == Coupling::Asymmetric ? "asym" : "sym";
        out += " repeat=" + std::to_string(block.repeat) + "\n";
    }
    return out;
}

Matrix2 circuit_matrix(const CircuitSpec& spec, double swept_phi) {
    if (spec.blocks.empty()) throw input_error("circuit has no blocks");
    Matrix2 chain = Matrix2::identity();
    for (const BlockDecl& decl : spec.blocks) {
        const BlockParams params{decl.swept() ? swept_phi : *decl.phi, decl.psi,
                                 decl.coupling};
        const Matrix2 block = acd_block(params);
        for (int i = 0; i < decl.repeat; ++i) chain = block * chain;
    }
    return chain;
}

SweepResult sweep_circuit(const CircuitSpec& spec, const std::vector<double>& grid) {
    const FieldPair input = source_field(spec.source_intensity);
    SweepResult result;
    result.upper.meta = "I_C";
    result.lower.meta = "I_D";
    result.upper.xs = grid;
    result.lower.xs = grid;
    result.upper.ys.reserve(grid.size());
    result.lower.ys.reserve(grid.size());
    for (double phi : grid) {
        const PortIntensities ports = intensities(apply(circuit_matrix(spec, phi), input));
        result.upper.ys.push_back(ports.upper);
        result.lower.ys.push_back(ports.lower);
    }
    validate_curve(result.upper);
    validate_curve(result.lower);
    return result;
}

} // namespace cbw
