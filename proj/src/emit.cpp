#include "cbw/emit.hpp"

#include <cstdio>

#include <json.hpp>

#include "cbw/errors.hpp"

namespace cbw {

namespace {

void validate_map(const Map2D& map) {
    if (map.phis.empty() || map.psis.empty()) throw input_error("empty map grid");
    if (map.values.size() != map.phis.size() * map.psis.size()) {
        throw input_error("map values size does not match grid");
    }
}

} // namespace

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

std::string emit_curve_csv(const Curve& curve) {
    validate_curve(curve);
    std::string out = "phi,value\n";
    for (std::size_t i = 0; i < curve.xs.size(); ++i) {
        out += format_double(curve.xs[i]);
        out += ',';
        out += format_double(curve.ys[i]);
        out += '\n';
    }
    return out;
}

std::string emit_curve_json(const Curve& curve) {
    validate_curve(curve);
    nlohmann::json j;
    j["phis"] = curve.xs;
    j["values"] = curve.ys;
    return j.dump() + "\n";
}

std::string emit_map_json(const Map2D& map) {
    validate_map(map);
    nlohmann::json j;
    j["phis"] = map.phis;
    j["psis"] = map.psis;
    j["values_row_major"] = map.values;
    return j.dump() + "\n";
}

std::string emit_map_csv(const Map2D& map) {
    validate_map(map);
    std::string out = "phi,psi,value\n";
    std::size_t k = 0;
    for (double psi : map.psis) {
        for (double phi : map.phis) {
            out += format_double(phi);
            out += ',';
            out += format_double(psi);
            out += ',';
            out += format_double(map.values[k++]);
            out += '\n';
        }
    }
    return out;
}

} // namespace cbw
