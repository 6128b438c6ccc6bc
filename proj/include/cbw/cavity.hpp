#pragma once

#include <vector>

#include "cbw/analysis.hpp"
#include "cbw/matrix2.hpp"

namespace cbw {

/// Recursive (bow-tie) cavity settings: output-coupler amplitude reflection
/// eta in (0, 1] and the number of intracavity passes summed coherently.
struct CavityParams {
    double eta = 1.0;
    int passes = 1;
};

/// Conventional two-mirror cavity reference. R is the intensity reflectance
/// (for an amplitude coefficient eta, R = eta^2).
struct AiryParams {
    double reflectance = 0.0;
};

/// Coherent sum of the pass amplitudes escaping the cavity,
/// S_N(phi) = sum_{n=1..N} (-1)^n eta^{n-1} cos(n phi): pass n carries the
/// n-block chain's upper-port amplitude attenuated by n-1 reflections. The
/// alternating signs cancel everywhere except around phi = pi.
Complex cavity_field_sum(double phi, const CavityParams& params);

/// |cavity_field_sum|^2 sampled over `grid` (within [0, 2 pi]), normalized so
/// the peak value is 1.
Curve cavity_spectrum(const std::vector<double>& grid, const CavityParams& params);

/// Airy transmission 1 / (1 + F sin^2(phi/2)) with F = 4R/(1-R)^2; period
/// 2 pi spans one free spectral range.
double airy_transmission(double phi, const AiryParams& params);

/// airy_transmission sampled over `grid`.
Curve airy_curve(const std::vector<double>& grid, const AiryParams& params);

/// FWHM of the curve's dominant peak divided by the curve's span (one
/// period), i.e. the spectral width ratio.
double spectral_width_ratio(const Curve& curve);

} // namespace cbw
