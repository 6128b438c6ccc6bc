#include "cbw/cavity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cbw/errors.hpp"

namespace cbw {

namespace {

void validate(const CavityParams& params) {
    if (!(params.eta > 0.0) || params.eta > 1.0) {
        throw input_error("eta must be in (0, 1]");
    }
    if (params.passes < 1) throw input_error("passes must be >= 1");
}

} // namespace

Complex cavity_field_sum(double phi, const CavityParams& params) {
    validate(params);
    if (!std::isfinite(phi)) throw input_error("phi must be finite");
    // cos(n phi) by recurrence: cos(n x) = 2 cos(x) cos((n-1) x) - cos((n-2) x).
    const double two_cos = 2.0 * std::cos(phi);
    double cos_prev = 1.0;           // cos(0)
    double cos_curr = std::cos(phi); // cos(phi)
    double sign = -1.0;
    double eta_pow = 1.0;
    double sum = 0.0;
    for (int n = 1; n <= params.passes; ++n) {
        sum += sign * eta_pow * cos_curr;
        const double cos_next = two_cos * cos_curr - cos_prev;
        cos_prev = cos_curr;
        cos_curr = cos_next;
        sign = -sign;
        eta_pow *= params.eta;
    }
    return Complex(sum, 0.0);
}

Curve cavity_spectrum(const std::vector<double>& grid, const CavityParams& params) {
    validate(params);
    if (grid.size() < 2) throw input_error("spectrum grid needs at least 2 points");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] < -1e-12 || grid[i] > 2.0 * std::numbers::pi + 1e-12) {
            throw input_error("spectrum grid must lie within [0, 2 pi]");
        }
        if (i > 0 && !(grid[i] > grid[i - 1])) {
            throw input_error("spectrum grid must be strictly increasing");
        }
    }
    Curve curve;
    curve.meta = "cavity";
    curve.xs = grid;
    curve.ys.reserve(grid.size());
    for (double phi : grid) {
        curve.ys.push_back(std::norm(cavity_field_sum(phi, params)));
    }
    const double peak = *std::max_element(curve.ys.begin(), curve.ys.end());
    if (peak > 0.0) {
        for (double& y : curve.ys) y /= peak;
    }
    return curve;
}

double airy_transmission(double phi, const AiryParams& params) {
    if (!(params.reflectance >= 0.0) || params.reflectance >= 1.0) {
        throw input_error("reflectance must be in [0, 1)");
    }
    if (!std::isfinite(phi)) throw input_error("phi must be finite");
    const double r = params.reflectance;
    const double finesse_coeff = 4.0 * r / ((1.0 - r) * (1.0 - r));
    const double s = std::sin(phi / 2.0);
    return 1.0 / (1.0 + finesse_coeff * s * s);
}

Curve airy_curve(const std::vector<double>& grid, const AiryParams& params) {
    if (grid.size() < 2) throw input_error("airy grid needs at least 2 points");
    Curve curve;
    curve.meta = "airy";
    curve.xs = grid;
    curve.ys.reserve(grid.size());
    for (double phi : grid) curve.ys.push_back(airy_transmission(phi, params));
    validate_curve(curve);
    return curve;
}

double spectral_width_ratio(const Curve& curve) {
    validate_curve(curve);
    const auto peak = std::max_element(curve.ys.begin(), curve.ys.end());
    const double around = curve.xs[std::distance(curve.ys.begin(), peak)];
    const double period = curve.xs.back() - curve.xs.front();
    return fwhm(curve, around) / period;
}

} // namespace cbw
