#include "cbw/phase_basis.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "cbw/errors.hpp"

namespace cbw {

std::vector<BasisTerm> tensor_expand(int q) {
    if (q < 1 || q > 30) throw input_error("tensor_expand requires 1 <= q <= 30");
    const std::uint64_t total = std::uint64_t{1} << q;
    std::vector<BasisTerm> terms;
    terms.reserve(total);
    for (std::uint64_t word = 0; word < total; ++word) {
        const auto choices = static_cast<std::uint32_t>(word);
        terms.push_back({choices, std::popcount(choices)});
    }
    return terms;
}

OrderHistogram order_histogram(int q) {
    if (q < 1 || q > 62) throw input_error("order_histogram requires 1 <= q <= 62");
    // Additive Pascal rows; every intermediate is a binomial coefficient, so
    // nothing exceeds C(62, 31) < 2^63.
    std::vector<std::uint64_t> row{1, 1};
    for (int n = 2; n <= q; ++n) {
        std::vector<std::uint64_t> next(n + 1, 1);
        for (int j = 1; j < n; ++j) next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    return {q, std::move(row)};
}

double cbw_wavelength(double lambda0, int q) {
    if (!(lambda0 > 0.0) || !std::isfinite(lambda0)) {
        throw input_error("lambda0 must be positive and finite");
    }
    if (q < 1) throw input_error("q must be >= 1");
    return lambda0 / (2.0 * q);
}

double pbw_wavelength(double lambda0, int n_photons) {
    if (!(lambda0 > 0.0) || !std::isfinite(lambda0)) {
        throw input_error("lambda0 must be positive and finite");
    }
    if (n_photons < 1) throw input_error("photon number must be >= 1");
    return lambda0 / (4.0 * n_photons);
}

std::vector<double> fringe_extrema(int q) {
    if (q < 1) throw input_error("q must be >= 1");
    std::vector<double> positions;
    positions.reserve(2 * q);
    for (int m = 0; m < 2 * q; ++m) {
        positions.push_back(std::numbers::pi * m / q);
    }
    return positions;
}

} // namespace cbw
