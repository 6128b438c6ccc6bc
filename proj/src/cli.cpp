#include "cbw/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cbw/analysis.hpp"
#include "cbw/cavity.hpp"
#include "cbw/emit.hpp"
#include "cbw/errors.hpp"
#include "cbw/netlist.hpp"
#include "cbw/optics.hpp"
#include "cbw/phase_basis.hpp"

namespace cbw {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Wrong invocation shape (as opposed to bad numeric input): exit code 1.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw usage_error("cannot open netlist file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw usage_error("cannot open output file: " + out_path);
    file << text;
}

const Curve& select_port(const SweepResult& sweep, const std::string& port) {
    return port == "D" ? sweep.lower : sweep.upper;
}

std::string report_curve(const Curve& curve, const std::string& report, double around) {
    if (report == "fwhm") return format_double(fwhm(curve, around)) + "\n";
    if (report == "zeta") return format_double(spectral_width_ratio(curve)) + "\n";
    if (report == "visibility") return format_double(visibility(curve)) + "\n";
    return std::to_string(fringe_count(curve)) + "\n"; // fringes
}

struct SweepOptions {
    std::string netlist_path;
    int points = 2001;
    double phi_min = 0.0;
    double phi_max = kTwoPi;
    std::string port = "C";
    std::string report;
    double around = 0.0;
    std::string format = "csv";
    std::string out_path;
};

std::string run_sweep(const SweepOptions& opt) {
    const CircuitSpec spec = parse_netlist(read_file(opt.netlist_path));
    if (!spec.has_sweep()) {
        throw usage_error("netlist has no phi=sweep block to sweep");
    }
    const SweepResult sweep =
        sweep_circuit(spec, linspace(opt.phi_min, opt.phi_max, opt.points));
    const Curve& curve = select_port(sweep, opt.port);
    if (!opt.report.empty()) return report_curve(curve, opt.report, opt.around);
    return opt.format == "json" ? emit_curve_json(curve) : emit_curve_csv(curve);
}

struct MapOptions {
    int blocks = 1;
    int phi_points = 501;
    int psi_points = 501;
    double eta = 1.0;
    double intensity = 1.0;
    std::string port = "C";
    std::string format = "json";
    std::string out_path;
};

std::string run_map(const MapOptions& opt) {
    const MapResult maps =
        map_phi_psi(opt.blocks, linspace(0.0, kTwoPi, opt.phi_points),
                    linspace(0.0, kTwoPi, opt.psi_points), opt.intensity, opt.eta);
    const Map2D& map = opt.port == "D" ? maps.lower : maps.upper;
    return opt.format == "csv" ? emit_map_csv(map) : emit_map_json(map);
}

struct CavityOptions {
    double eta = 0.0;
    int passes = 0;
    double airy_reflectance = -1.0;
    int points = 100001;
    std::string report;
    std::string format = "csv";
    std::string out_path;
};

std::string run_cavity(const CavityOptions& opt) {
    const std::vector<double> grid = linspace(0.0, kTwoPi, opt.points);
    Curve curve;
    if (opt.airy_reflectance >= 0.0) {
        curve = airy_curve(grid, {opt.airy_reflectance});
    } else {
        if (opt.passes < 1 || opt.eta <= 0.0) {
            throw usage_error("cavity needs --eta and --passes (or --airy R)");
        }
        curve = cavity_spectrum(grid, {opt.eta, opt.passes});
    }
    if (!opt.report.empty()) {
        const double around = curve.xs[std::distance(
            curve.ys.begin(), std::max_element(curve.ys.begin(), curve.ys.end()))];
        return report_curve(curve, opt.report, around);
    }
    return opt.format == "json" ? emit_curve_json(curve) : emit_curve_csv(curve);
}

struct PascalOptions {
    int q = 0;
    int n = 0;
};

std::string run_pascal(const PascalOptions& opt) {
    if ((opt.q > 0) == (opt.n > 0)) {
        throw usage_error("pascal needs exactly one of --q or --n");
    }
    const int q = opt.q > 0 ? opt.q : 2 * opt.n;
    const OrderHistogram histogram = order_histogram(q);
    std::string line;
    for (std::size_t j = 0; j < histogram.counts.size(); ++j) {
        if (j > 0) line += ',';
        line += std::to_string(histogram.counts[j]);
    }
    return line + "\n";
}

struct WavelengthOptions {
    double lambda0 = 0.0;
    int q = 0;
    int photons = 0;
};

std::string run_wavelength(const WavelengthOptions& opt) {
    if (opt.q < 1 && opt.photons < 1) {
        throw usage_error("wavelength needs --q and/or --photons");
    }
    std::string out;
    if (opt.q >= 1) out += "cbw," + format_double(cbw_wavelength(opt.lambda0, opt.q)) + "\n";
    if (opt.photons >= 1) {
        out += "pbw," + format_double(pbw_wavelength(opt.lambda0, opt.photons)) + "\n";
    }
    return out;
}

struct ValidateOptions {
    std::string netlist_path;
    int points = 201;
};

int run_validate(const ValidateOptions& opt, std::ostream& out) {
    const CircuitSpec spec = parse_netlist(read_file(opt.netlist_path));
    bool all_ok = true;
    auto check = [&](const char* name, bool ok) {
        out << (ok ? "ok " : "fail ") << name << "\n";
        all_ok = all_ok && ok;
    };

    check("round-trip", parse_netlist(render_netlist(spec)) == spec);

    const std::vector<double> samples = linspace(0.0, kTwoPi, 7);
    bool unitary = true;
    for (const BlockDecl& decl : spec.blocks) {
        for (double phi : samples) {
            const BlockParams params{decl.swept() ? phi : *decl.phi, decl.psi,
                                     decl.coupling};
            unitary = unitary && unitarity_error(acd_block(params)) <= 1e-12;
            if (!decl.swept()) break;
        }
    }
    check("unitarity", unitary);

    bool conserved = true;
    bool finite = true;
    const FieldPair input = source_field(spec.source_intensity);
    for (double phi : linspace(0.0, kTwoPi, opt.points)) {
        const Matrix2 chain = circuit_matrix(spec, phi);
        const FieldPair fields = apply(chain, input);
        const PortIntensities ports = intensities(fields);
        conserved = conserved && std::abs(ports.upper + ports.lower - spec.source_intensity) <=
                                     1e-12 * std::max(1.0, spec.source_intensity);
        finite = finite && all_finite(chain) && std::isfinite(ports.upper) &&
                 std::isfinite(ports.lower);
    }
    check("energy-conservation", conserved);
    check("finite-fields", finite);

    return all_ok ? 0 : 3;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coupled Mach-Zehnder interferometer and cavity fringe simulator"};
    app.name("cbwsim");
    app.require_subcommand(1);

    SweepOptions sweep_opt;
    CLI::App* sweep = app.add_subcommand("sweep", "Sweep a netlist circuit over phi");
    sweep->add_option("--netlist", sweep_opt.netlist_path, "Netlist file")->required();
    sweep->add_option("--points", sweep_opt.points, "Grid points")->check(CLI::Range(2, 100000000));
    sweep->add_option("--phi-min", sweep_opt.phi_min, "Sweep start (radians)");
    sweep->add_option("--phi-max", sweep_opt.phi_max, "Sweep end (radians)");
    sweep->add_option("--port", sweep_opt.port, "Output port")->check(CLI::IsMember({"C", "D"}));
    sweep->add_option("--report", sweep_opt.report, "Print a scalar instead of the curve")
        ->check(CLI::IsMember({"fwhm", "visibility", "fringes"}));
    sweep->add_option("--around", sweep_opt.around, "Peak location for --report fwhm");
    sweep->add_option("--format", sweep_opt.format, "Curve format")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--out", sweep_opt.out_path, "Write to file instead of stdout");

    MapOptions map_opt;
    CLI::App* map = app.add_subcommand("map", "2D intensity map over phi and psi");
    map->add_option("--blocks", map_opt.blocks, "Chain length")->required()->check(CLI::Range(1, 1000));
    map->add_option("--phi-points", map_opt.phi_points, "phi grid points")->check(CLI::Range(1, 100000));
    map->add_option("--psi-points", map_opt.psi_points, "psi grid points")->check(CLI::Range(1, 100000));
    map->add_option("--eta", map_opt.eta, "Per-block amplitude factor (1 = lossless)")
        ->check(CLI::Range(1e-6, 1.0));
    map->add_option("--intensity", map_opt.intensity, "Source intensity")
        ->check(CLI::NonNegativeNumber);
    map->add_option("--port", map_opt.port, "Output port")->check(CLI::IsMember({"C", "D"}));
    map->add_option("--format", map_opt.format, "Map format")->check(CLI::IsMember({"csv", "json"}));
    map->add_option("--out", map_opt.out_path, "Write to file instead of stdout");

    CavityOptions cavity_opt;
    CLI::App* cavity = app.add_subcommand("cavity", "Recursive cavity spectrum (or Airy reference)");
    cavity->add_option("--eta", cavity_opt.eta, "Amplitude reflection coefficient");
    cavity->add_option("--passes", cavity_opt.passes, "Passes summed");
    cavity->add_option("--airy", cavity_opt.airy_reflectance,
                       "Emit the Airy reference with intensity reflectance R instead")
        ->check(CLI::Range(0.0, 1.0));
    cavity->add_option("--points", cavity_opt.points, "Grid points")->check(CLI::Range(2, 100000000));
    cavity->add_option("--report", cavity_opt.report, "Print a scalar instead of the curve")
        ->check(CLI::IsMember({"fwhm", "zeta", "visibility"}));
    cavity->add_option("--format", cavity_opt.format, "Curve format")
        ->check(CLI::IsMember({"csv", "json"}));
    cavity->add_option("--out", cavity_opt.out_path, "Write to file instead of stdout");

    PascalOptions pascal_opt;
    CLI::App* pascal = app.add_subcommand("pascal", "Phase-order multiplicity row");
    pascal->add_option("--q", pascal_opt.q, "Number of interferometers")->check(CLI::Range(1, 62));
    pascal->add_option("--n", pascal_opt.n, "Number of double-MZI blocks (q = 2n)")
        ->check(CLI::Range(1, 31));

    WavelengthOptions wavelength_opt;
    CLI::App* wavelength = app.add_subcommand("wavelength", "Effective fringe wavelengths");
    wavelength->add_option("--lambda0", wavelength_opt.lambda0, "Source wavelength")
        ->required()
        ->check(CLI::PositiveNumber);
    wavelength->add_option("--q", wavelength_opt.q, "Coupled-chain multiplier")->check(CLI::Range(1, 1000000));
    wavelength->add_option("--photons", wavelength_opt.photons, "Entangled photon number")
        ->check(CLI::Range(1, 1000000));

    ValidateOptions validate_opt;
    CLI::App* validate = app.add_subcommand("validate", "Run invariant checks on a netlist");
    validate->add_option("--netlist", validate_opt.netlist_path, "Netlist file")->required();
    validate->add_option("--points", validate_opt.points, "Sweep samples for the checks")
        ->check(CLI::Range(2, 1000000));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (*sweep) {
            write_output(run_sweep(sweep_opt), sweep_opt.out_path, out);
        } else if (*map) {
            write_output(run_map(map_opt), map_opt.out_path, out);
        } else if (*cavity) {
            write_output(run_cavity(cavity_opt), cavity_opt.out_path, out);
        } else if (*pascal) {
            out << run_pascal(pascal_opt);
        } else if (*wavelength) {
            out << run_wavelength(wavelength_opt);
        } else if (*validate) {
            return run_validate(validate_opt, out);
        }
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const metrology_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

} // namespace cbw
