#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "cbw/cli.hpp"
#include "cbw/emit.hpp"
#include "cbw/errors.hpp"
#include "cbw/netlist.hpp"
#include "cbw/optics.hpp"

using namespace cbw;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct CliRun {
    int exit_code = 0;
    std::string out;
    std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("netlist parsing") {
    const CircuitSpec chain = parse_netlist(
        "source intensity=1.0\n"
        "block phi=sweep psi=0 coupling=asym repeat=4\n");
    CHECK(chain.source_intensity == 1.0);
    REQUIRE(chain.blocks.size() == 1);
    CHECK(chain.blocks[0].swept());
    CHECK(chain.blocks[0].repeat == 4);
    CHECK(chain.total_blocks() == 4);
    CHECK(chain.has_sweep());

    const CircuitSpec usckd =
        parse_netlist("block phi=3.14159 psi=3.14159 coupling=asym repeat=1\n");
    CHECK(usckd.source_intensity == 1.0);
    REQUIRE(usckd.blocks.size() == 1);
    CHECK(usckd.blocks[0].phi == doctest::Approx(3.14159));
    CHECK_FALSE(usckd.has_sweep());

    // Comments, blank lines, CRLF, defaults.
    const CircuitSpec relaxed = parse_netlist(
        "# a comment\r\n"
        "\n"
        "block phi=1.5   # trailing comment\n");
    CHECK(relaxed.blocks[0].psi == 0.0);
    CHECK(relaxed.blocks[0].coupling == Coupling::Asymmetric);
    CHECK(relaxed.blocks[0].repeat == 1);
}

TEST_CASE("netlist parse errors carry line numbers") {
    try {
        parse_netlist("source intensity=1\nblock phi=sweep psi=0 coupling=asym repeat=0\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("repeat must be >= 1") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_netlist("oscillator phi=1\n"), parse_error);
    CHECK_THROWS_AS(parse_netlist("block phi=abc\n"), parse_error);
    CHECK_THROWS_AS(parse_netlist("block phi=1 deg=90\n"), parse_error);
    CHECK_THROWS_AS(parse_netlist("block psi=0\n"), parse_error);
    CHECK_THROWS_AS(parse_netlist("block phi=1 coupling=diagonal\n"), parse_error);
    CHECK_THROWS_AS(parse_netlist("block phi=1 phi=2\n"), parse_error);
    CHECK_THROWS_AS(parse_netlist("source intensity=1\nsource intensity=2\nblock phi=1\n"),
                    parse_error);
    CHECK_THROWS_AS(parse_netlist("source intensity=-2\nblock phi=1\n"), parse_error);
    CHECK_THROWS_AS(parse_netlist("# nothing but comments\n"), parse_error);
    CHECK_THROWS_AS(parse_netlist(""), parse_error);
}

TEST_CASE("netlist round-trips through its canonical form") {
    const std::vector<std::string> corpus = {
        "block phi=sweep\n",
        "block phi=0\n",
        "source intensity=2.5\nblock phi=sweep psi=0 coupling=asym repeat=4\n",
        "block phi=3.141592653589793 psi=3.141592653589793\n",
        "block phi=sweep repeat=7\nblock phi=-1.25 psi=0.5 coupling=sym\n",
        "source intensity=0\nblock phi=1e-3\n",
        "block phi=sweep psi=1.0471975511965976 coupling=sym repeat=2\n",
        "block phi=0.1\nblock phi=0.2\nblock phi=0.3 repeat=3\n",
        "source intensity=1\nblock phi=sweep\nblock phi=sweep psi=3.14 repeat=2\n",
        "block phi=2.2250738585072014e-308\n",
    };
    for (const std::string& text : corpus) {
        const CircuitSpec spec = parse_netlist(text);
        const std::string canonical = render_netlist(spec);
        CHECK(parse_netlist(canonical) == spec);
        CHECK(render_netlist(parse_netlist(canonical)) == canonical);
    }
}

TEST_CASE("circuit matrix composes blocks in declaration order") {
    const CircuitSpec spec = parse_netlist(
        "block phi=0.4 psi=0\n"
        "block phi=sweep psi=0 repeat=2\n");
    const Matrix2 expected = chain_product({0.9, 0.0, Coupling::Asymmetric}, 2) *
                             acd_block({0.4, 0.0, Coupling::Asymmetric});
    CHECK(max_abs_diff(circuit_matrix(spec, 0.9), expected) < 1e-14);
}

TEST_CASE("uniform netlist sweep matches the direct chain sweep") {
    const CircuitSpec spec = parse_netlist("block phi=sweep psi=0 repeat=3\n");
    const auto grid = linspace(0.0, kTwoPi, 101);
    const SweepResult via_netlist = sweep_circuit(spec, grid);
    const SweepResult direct = sweep_phi(3, 0.0, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(std::abs(via_netlist.upper.ys[i] - direct.upper.ys[i]) < 1e-14);
    }
}

TEST_CASE("csv emission is byte-stable") {
    Curve curve;
    curve.xs = {0.0, kPi};
    curve.ys = {1.0, 0.0};
    CHECK(emit_curve_csv(curve) == "phi,value\n0,1\n3.1415926535897931,0\n");
    CHECK(emit_curve_csv(curve) == emit_curve_csv(curve));
}

TEST_CASE("map emission") {
    Map2D map;
    map.phis = {0.5};
    map.psis = {1.5};
    map.values = {0.25};
    CHECK(emit_map_json(map) ==
          "{\"phis\":[0.5],\"psis\":[1.5],\"values_row_major\":[0.25]}\n");
    CHECK(emit_map_csv(map) == "phi,psi,value\n0.5,1.5,0.25\n");

    map.values = {0.25, 0.5};
    CHECK_THROWS_AS(emit_map_json(map), input_error);
}

TEST_CASE("cli: pascal") {
    const CliRun row = cli({"pascal", "--q", "7"});
    CHECK(row.exit_code == 0);
    CHECK(row.out == "1,7,21,35,35,21,7,1\n");

    // --n labels the same chain by block count: n = 3 is q = 6.
    const CliRun by_n = cli({"pascal", "--n", "3"});
    CHECK(by_n.out == "1,6,15,20,15,6,1\n");

    CHECK(cli({"pascal"}).exit_code == 1);
    CHECK(cli({"pascal", "--q", "3", "--n", "2"}).exit_code == 1);
    CHECK(cli({"pascal", "--q", "99"}).exit_code == 1);
}

TEST_CASE("cli: wavelength") {
    const CliRun both = cli({"wavelength", "--lambda0", "1.0", "--q", "50", "--photons", "25"});
    CHECK(both.exit_code == 0);
    CHECK(both.out == "cbw,0.01\npbw,0.01\n");
    CHECK(cli({"wavelength", "--lambda0", "1.0"}).exit_code == 1);
    CHECK(cli({"wavelength", "--q", "5"}).exit_code == 1);
}

TEST_CASE("cli: sweep reports and determinism") {
    const std::string netlist_path = "test_sweep.nl";
    {
        std::ofstream file(netlist_path);
        file << "source intensity=1.0\nblock phi=sweep psi=0 coupling=asym repeat=4\n";
    }

    const CliRun fwhm_run =
        cli({"sweep", "--netlist", netlist_path, "--points", "2001", "--report", "fwhm"});
    CHECK(fwhm_run.exit_code == 0);
    CHECK(std::stod(fwhm_run.out) == doctest::Approx(kPi / 8.0).epsilon(1e-4));

    const CliRun csv_a = cli({"sweep", "--netlist", netlist_path, "--points", "51"});
    const CliRun csv_b = cli({"sweep", "--netlist", netlist_path, "--points", "51"});
    CHECK(csv_a.exit_code == 0);
    CHECK(csv_a.out == csv_b.out);
    CHECK(csv_a.out.substr(0, 10) == "phi,value\n");

    const CliRun fringes =
        cli({"sweep", "--netlist", netlist_path, "--report", "fringes"});
    CHECK(fringes.out == "8\n");

    // Flat psi = pi sweep: fwhm is a metrology failure, exit 3.
    {
        std::ofstream file(netlist_path);
        file << "block phi=sweep psi=3.141592653589793 repeat=2\n";
    }
    CHECK(cli({"sweep", "--netlist", netlist_path, "--report", "fwhm"}).exit_code == 3);

    // Netlist without a swept phase cannot be swept: usage error.
    {
        std::ofstream file(netlist_path);
        file << "block phi=1.0\n";
    }
    CHECK(cli({"sweep", "--netlist", netlist_path}).exit_code == 1);

    // Parse failures exit 2.
    {
        std::ofstream file(netlist_path);
        file << "block phi=sweep repeat=0\n";
    }
    CHECK(cli({"sweep", "--netlist", netlist_path}).exit_code == 2);

    CHECK(cli({"sweep", "--netlist", "does_not_exist.nl"}).exit_code == 1);
    CHECK(cli({"sweep"}).exit_code == 1);
    CHECK(cli({"unknown-subcommand"}).exit_code == 1);

    std::remove(netlist_path.c_str());
}

TEST_CASE("cli: cavity") {
    const CliRun zeta = cli({"cavity", "--eta", "0.9", "--passes", "50", "--points",
                             "100000", "--report", "zeta"});
    CHECK(zeta.exit_code == 0);
    CHECK(std::stod(zeta.out) == doctest::Approx(0.021).epsilon(0.1));

    const CliRun airy = cli({"cavity", "--airy", "0.25", "--points", "20001", "--report", "zeta"});
    CHECK(airy.exit_code == 0);
    CHECK(std::stod(airy.out) == doctest::Approx(0.54).epsilon(0.01));

    CHECK(cli({"cavity", "--points", "100"}).exit_code == 1);
    CHECK(cli({"cavity", "--eta", "1.5", "--passes", "5"}).exit_code == 3);
}

TEST_CASE("cli: map and validate") {
    const CliRun map = cli({"map", "--blocks", "2", "--phi-points", "3", "--psi-points", "2"});
    CHECK(map.exit_code == 0);
    const nlohmann::json parsed = nlohmann::json::parse(map.out);
    CHECK(parsed.at("phis").size() == 3);
    CHECK(parsed.at("psis").size() == 2);
    CHECK(parsed.at("values_row_major").size() == 6);
    CHECK(map.out == cli({"map", "--blocks", "2", "--phi-points", "3", "--psi-points", "2"}).out);

    const std::string netlist_path = "test_validate.nl";
    {
        std::ofstream file(netlist_path);
        file << "source intensity=2\nblock phi=sweep psi=0 repeat=2\nblock phi=0.3 psi=3.14\n";
    }
    const CliRun ok = cli({"validate", "--netlist", netlist_path});
    CHECK(ok.exit_code == 0);
    CHECK(ok.out ==
          "ok round-trip\nok unitarity\nok energy-conservation\nok finite-fields\n");

    std::remove(netlist_path.c_str());
}
