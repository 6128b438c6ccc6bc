#pragma once

#include <cstdint>
#include <vector>

namespace cbw {

/// One term of the binary phase-basis expansion over q interferometers.
/// Bit j of `choices` set means factor j contributed the phi branch (factor 1
/// is the most significant bit, Kronecker order); `order` is the popcount,
/// i.e. the exponent of the resulting phi^order term.
struct BasisTerm {
    std::uint32_t choices = 0;
    int order = 0;

    bool operator==(const BasisTerm&) const = default;
};

/// Multiplicity of each phase order 0..q; counts[j] = C(q, j), exact.
struct OrderHistogram {
    int q = 0;
    std::vector<std::uint64_t> counts;
};

/// Enumerate all 2^q binary {0, phi} choices in Kronecker order.
/// q is capped at 30 because the full term list is materialized.
std::vector<BasisTerm> tensor_expand(int q);

/// Binomial row C(q, 0..q) built by exact integer addition; valid up to
/// q = 62 (C(62, 31) fits in 64 bits).
OrderHistogram order_histogram(int q);

/// Effective fringe wavelength of a q-fold coupled chain: lambda0 / (2 q).
double cbw_wavelength(double lambda0, int q);

/// Photonic de Broglie wavelength of N entangled photons: lambda0 / (4 N),
/// comparison formula only.
double pbw_wavelength(double lambda0, int n_photons);

/// Extremum positions of cos^2(q phi) on [0, 2 pi): (pi/q) m for
/// m = 0 .. 2q-1.
std::vector<double> fringe_extrema(int q);

} // namespace cbw
