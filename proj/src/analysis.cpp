#include "cbw/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "cbw/errors.hpp"
#include "cbw/optics.hpp"

namespace cbw {

namespace {

// Runs of equal samples are collapsed to their first index.
struct PeakScan {
    std::vector<int> peaks;
    bool periodic = false;
    int wrap_count = 0; // distinct samples when periodic (last duplicates first)
};

// Samples closer than this count as equal, so last-ulp noise on a physically
// constant curve does not register as structure.
double noise_floor(const std::vector<double>& ys) {
    double peak = 0.0;
    for (double y : ys) peak = std::max(peak, std::abs(y));
    return 1e-12 * peak;
}

bool endpoints_match(const std::vector<double>& ys) {
    const auto [lo, hi] = std::minmax_element(ys.begin(), ys.end());
    const double scale = std::max(*hi - *lo, std::abs(*hi));
    return std::abs(ys.front() - ys.back()) <= 1e-9 * std::max(scale, 1e-300);
}

PeakScan scan_peaks(const std::vector<double>& ys) {
    PeakScan scan;
    scan.periodic = endpoints_match(ys);
    const int n = static_cast<int>(ys.size());
    const int m = scan.periodic ? n - 1 : n; // drop the duplicated seam sample
    scan.wrap_count = m;
    if (m < 2) return scan;

    const double tol = noise_floor(ys);
    auto at = [&](int i) { return ys[((i % m) + m) % m]; };
    auto same = [&](double a, double b) { return std::abs(a - b) <= tol; };
    for (int i = 0; i < m; ++i) {
        if (same(ys[i], at(i - 1))) continue; // not the left edge of its run
        // Find the first distinct value to the right of the run.
        int j = i + 1;
        int steps = 0;
        while (steps < m && same(at(j), ys[i])) {
            ++j;
            ++steps;
        }
        if (steps >= m) continue; // constant curve
        if (!scan.periodic && (i == 0 || j >= m)) {
            // Edge runs of an open curve have only one distinct neighbour; an
            // fwhm crossing there would leave the domain anyway.
            continue;
        }
        if (ys[i] > at(i - 1) + tol && ys[i] > at(j) + tol) scan.peaks.push_back(i);
    }
    // A periodic run crossing the seam is reported at its wrapped left edge.
    return scan;
}

double interpolate_crossing(double x1, double y1, double x2, double y2, double level) {
    return x1 + (x2 - x1) * (y1 - level) / (y1 - y2);
}

} // namespace

void validate_curve(const Curve& curve) {
    if (curve.xs.size() != curve.ys.size()) {
        throw input_error("curve xs/ys lengths differ");
    }
    if (curve.xs.size() < 2) throw input_error("curve needs at least 2 samples");
    for (std::size_t i = 1; i < curve.xs.size(); ++i) {
        if (!(curve.xs[i] > curve.xs[i - 1])) {
            throw input_error("curve xs must be strictly increasing");
        }
    }
    for (double y : curve.ys) {
        if (!std::isfinite(y) || y < 0.0) {
            throw input_error("curve ys must be finite and nonnegative");
        }
    }
}

std::vector<double> linspace(double lo, double hi, int points) {
    if (points < 1) throw input_error("linspace needs at least 1 point");
    if (points == 1) return {lo};
    if (!(hi > lo)) throw input_error("linspace needs hi > lo");
    std::vector<double> xs(points);
    const double step = (hi - lo) / (points - 1);
    for (int i = 0; i < points; ++i) xs[i] = lo + step * i;
    xs.back() = hi;
    return xs;
}

SweepResult sweep_phi(int n_blocks, double psi, const std::vector<double>& grid,
                      double source_intensity) {
    if (n_blocks < 1) throw input_error("n_blocks must be >= 1");
    const FieldPair input = source_field(source_intensity);
    SweepResult result;
    result.upper.meta = "I_C";
    result.lower.meta = "I_D";
    result.upper.xs = grid;
    result.lower.xs = grid;
    result.upper.ys.reserve(grid.size());
    result.lower.ys.reserve(grid.size());
    for (double phi : grid) {
        const Matrix2 chain = chain_product({phi, psi, Coupling::Asymmetric}, n_blocks);
        const PortIntensities ports = intensities(apply(chain, input));
        result.upper.ys.push_back(ports.upper);
        result.lower.ys.push_back(ports.lower);
    }
    validate_curve(result.upper);
    validate_curve(result.lower);
    return result;
}

MapResult map_phi_psi(int n_blocks, const std::vector<double>& phi_grid,
                      const std::vector<double>& psi_grid,
                      double source_intensity, double block_amplitude) {
    if (n_blocks < 1) throw input_error("n_blocks must be >= 1");
    if (phi_grid.empty() || psi_grid.empty()) throw input_error("empty map grid");
    if (!(block_amplitude > 0.0) || block_amplitude > 1.0) {
        throw input_error("block amplitude must be in (0, 1]");
    }
    const FieldPair input = source_field(source_intensity);
    MapResult result;
    result.upper.phis = phi_grid;
    result.upper.psis = psi_grid;
    result.lower.phis = phi_grid;
    result.lower.psis = psi_grid;
    result.upper.values.reserve(phi_grid.size() * psi_grid.size());
    result.lower.values.reserve(phi_grid.size() * psi_grid.size());
    for (double psi : psi_grid) {
        for (double phi : phi_grid) {
            Matrix2 block = acd_block({phi, psi, Coupling::Asymmetric});
            if (block_amplitude != 1.0) block = block * Complex(block_amplitude, 0.0);
            Matrix2 chain = block;
            for (int i = 1; i < n_blocks; ++i) chain = block * chain;
            const PortIntensities ports = intensities(apply(chain, input));
            result.upper.values.push_back(ports.upper);
            result.lower.values.push_back(ports.lower);
        }
    }
    return result;
}

double fwhm(const Curve& curve, double around) {
    validate_curve(curve);
    const PeakScan scan = scan_peaks(curve.ys);
    if (scan.peaks.empty()) throw metrology_error("no local maximum found");

    const double span = curve.xs.back() - curve.xs.front();
    auto distance = [&](double x) {
        double d = std::abs(x - around);
        if (scan.periodic) {
            d = std::fmod(d, span);
            d = std::min(d, span - d);
        }
        return d;
    };
    int peak = scan.peaks.front();
    for (int idx : scan.peaks) {
        if (distance(curve.xs[idx]) < distance(curve.xs[peak])) peak = idx;
    }

    const int m = scan.wrap_count;
    auto y_at = [&](int t) { return curve.ys[((t % m) + m) % m]; };
    auto x_at = [&](int t) {
        const int idx = ((t % m) + m) % m;
        const double wraps = std::floor(static_cast<double>(t) / m);
        return curve.xs[idx] + wraps * span;
    };
    const double level = curve.ys[peak] / 2.0;

    auto find_crossing = [&](int direction) {
        int t = peak;
        for (int steps = 0; steps < m; ++steps) {
            const int next = t + direction;
            if (!scan.periodic && (next < 0 || next >= m)) {
                throw metrology_error("half-max crossing outside curve domain");
            }
            if (y_at(next) < level) {
                return interpolate_crossing(x_at(t), y_at(t), x_at(next), y_at(next), level);
            }
            t = next;
        }
        throw metrology_error("no half-max crossing found");
    };

    const double right = find_crossing(+1);
    const double left = find_crossing(-1);
    return right - left;
}

double visibility(const Curve& curve) {
    validate_curve(curve);
    const auto [lo, hi] = std::minmax_element(curve.ys.begin(), curve.ys.end());
    if (*hi - *lo <= noise_floor(curve.ys)) {
        throw metrology_error("constant curve has no visibility");
    }
    if (*hi + *lo == 0.0) throw metrology_error("degenerate curve");
    return (*hi - *lo) / (*hi + *lo);
}

int fringe_count(const Curve& curve) {
    validate_curve(curve);
    return static_cast<int>(scan_peaks(curve.ys).peaks.size());
}

} // namespace cbw
