#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "cbw/errors.hpp"
#include "cbw/phase_basis.hpp"

using namespace cbw;

namespace {

std::vector<std::uint64_t> tally_orders(int q) {
    std::vector<std::uint64_t> counts(q + 1, 0);
    for (const BasisTerm& term : tensor_expand(q)) counts[term.order]++;
    return counts;
}

} // namespace

TEST_CASE("tensor expansion of small chains") {
    const auto two = tensor_expand(2);
    REQUIRE(two.size() == 4);
    CHECK(two[0].order == 0);
    CHECK(two[1].order == 1);
    CHECK(two[2].order == 1);
    CHECK(two[3].order == 2);

    const auto one = tensor_expand(1);
    REQUIRE(one.size() == 2);
    CHECK(one[0].order == 0);
    CHECK(one[1].order == 1);

    CHECK(tally_orders(3) == std::vector<std::uint64_t>{1, 3, 3, 1});

    CHECK_THROWS_AS(tensor_expand(0), input_error);
    CHECK_THROWS_AS(tensor_expand(31), input_error);
}

TEST_CASE("order histogram rows") {
    CHECK(order_histogram(2).counts == std::vector<std::uint64_t>{1, 2, 1});
    CHECK(order_histogram(6).counts == std::vector<std::uint64_t>{1, 6, 15, 20, 15, 6, 1});
    CHECK(order_histogram(7).counts ==
          std::vector<std::uint64_t>{1, 7, 21, 35, 35, 21, 7, 1});
    CHECK_THROWS_AS(order_histogram(0), input_error);
    CHECK_THROWS_AS(order_histogram(63), input_error);
}

TEST_CASE("histogram equals the exhaustive tally up to q = 16") {
    for (int q = 1; q <= 16; ++q) {
        CHECK(order_histogram(q).counts == tally_orders(q));
    }
}

TEST_CASE("histogram row structure") {
    for (int q : {1, 2, 5, 12, 30, 62}) {
        const OrderHistogram histogram = order_histogram(q);
        REQUIRE(static_cast<int>(histogram.counts.size()) == q + 1);

        // Rows sum to 2^q (as unsigned arithmetic; q = 62 < 64 bits).
        std::uint64_t sum = 0;
        for (std::uint64_t c : histogram.counts) sum += c;
        CHECK(sum == (std::uint64_t{1} << q));

        // Palindromic, and every entry satisfies the multiplicative
        // recurrence counts[j] * j == counts[j-1] * (q - j + 1).
        for (int j = 0; j <= q; ++j) {
            CHECK(histogram.counts[j] == histogram.counts[q - j]);
            if (j >= 1) {
                CHECK(histogram.counts[j] * static_cast<std::uint64_t>(j) ==
                      histogram.counts[j - 1] * static_cast<std::uint64_t>(q - j + 1));
            }
        }
    }
}

TEST_CASE("each row is the shifted sum of the previous row") {
    for (int q = 2; q <= 40; ++q) {
        const auto prev = order_histogram(q - 1).counts;
        const auto curr = order_histogram(q).counts;
        for (int j = 1; j < q; ++j) CHECK(curr[j] == prev[j - 1] + prev[j]);
        CHECK(curr.front() == 1);
        CHECK(curr.back() == 1);
    }
}

TEST_CASE("effective wavelengths") {
    CHECK(cbw_wavelength(1.0, 1) == 0.5);
    CHECK(cbw_wavelength(1.0, 50) == doctest::Approx(0.01).epsilon(1e-15));
    CHECK(cbw_wavelength(1.0, 300) == doctest::Approx(1.0 / 600).epsilon(1e-15));
    CHECK(pbw_wavelength(1.0, 1) == 0.25);
    CHECK(pbw_wavelength(2.0, 4) == 0.125);

    // Same multiplier: the coupled-chain wavelength is twice the entangled
    // N-photon one.
    for (int n = 1; n <= 16; ++n) {
        CHECK(cbw_wavelength(1.7, n) / pbw_wavelength(1.7, n) ==
              doctest::Approx(2.0).epsilon(1e-15));
    }

    CHECK_THROWS_AS(cbw_wavelength(0.0, 3), input_error);
    CHECK_THROWS_AS(cbw_wavelength(-2.0, 3), input_error);
    CHECK_THROWS_AS(pbw_wavelength(0.0, 3), input_error);
}

TEST_CASE("fringe extrema") {
    constexpr double pi = std::numbers::pi;
    CHECK(fringe_extrema(1) == std::vector<double>{0.0, pi});

    const auto q2 = fringe_extrema(2);
    REQUIRE(q2.size() == 4);
    CHECK(q2[1] == doctest::Approx(pi / 2).epsilon(1e-15));
    CHECK(q2[3] == doctest::Approx(3 * pi / 2).epsilon(1e-15));

    for (int q : {1, 2, 3, 7}) {
        const auto extrema = fringe_extrema(q);
        REQUIRE(static_cast<int>(extrema.size()) == 2 * q);
        for (std::size_t i = 0; i < extrema.size(); ++i) {
            // d/dphi cos^2(q phi) = -q sin(2 q phi) vanishes at every entry.
            CHECK(std::abs(std::sin(2.0 * q * extrema[i])) < 1e-12);
            if (i > 0) {
                CHECK(extrema[i] - extrema[i - 1] == doctest::Approx(pi / q).epsilon(1e-12));
            }
        }
    }

    CHECK_THROWS_AS(fringe_extrema(0), input_error);
}
