#pragma once

#include <string>
#include <vector>

namespace cbw {

/// Sampled intensity vs phase. xs strictly increasing, equal length >= 2,
/// ys nonnegative and finite.
struct Curve {
    std::vector<double> xs;
    std::vector<double> ys;
    std::string meta;
};

/// Intensity sampled on a phi x psi grid; values are row-major with psi as
/// the row index (values.size() == psis.size() * phis.size()).
struct Map2D {
    std::vector<double> phis;
    std::vector<double> psis;
    std::vector<double> values;
};

struct SweepResult {
    Curve upper; // I_C
    Curve lower; // I_D
};

struct MapResult {
    Map2D upper;
    Map2D lower;
};

/// Throws input_error if the Curve invariants are violated.
void validate_curve(const Curve& curve);

/// `points` evenly spaced samples covering [lo, hi], endpoints inclusive.
std::vector<double> linspace(double lo, double hi, int points);

/// Port intensities of an n-block asymmetric chain swept over `grid`, every
/// block carrying (phi, psi) with phi taken from the grid.
SweepResult sweep_phi(int n_blocks, double psi, const std::vector<double>& grid,
                      double source_intensity = 1.0);

/// Port intensities of an n-block chain over a phi x psi grid; every block
/// carries the same cell (phi, psi). `block_amplitude` scales each block's
/// field amplitude (1.0 = lossless).
MapResult map_phi_psi(int n_blocks, const std::vector<double>& phi_grid,
                      const std::vector<double>& psi_grid,
                      double source_intensity = 1.0,
                      double block_amplitude = 1.0);

/// Full width at half maximum of the peak nearest `around`, with half-max
/// crossings located by linear interpolation between samples.
///
/// A curve whose first and last samples agree is treated as one sampled
/// period of a periodic function, and peaks or crossings may wrap across the
/// seam (this is what makes the width of a fringe peaked exactly at the grid
/// edge measurable). On open curves a crossing running off the edge is a
/// metrology_error, as are curves with no local maximum or no crossings.
double fwhm(const Curve& curve, double around);

/// (max - min) / (max + min). Constant curves are degenerate.
double visibility(const Curve& curve);

/// Number of strict local maxima; plateaus count once. Curves closing on
/// themselves are counted circularly so a fringe peaked at the seam is not
/// counted twice.
int fringe_count(const Curve& curve);

} // namespace cbw
