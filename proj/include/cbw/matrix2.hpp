#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace cbw {

using Complex = std::complex<double>;

/// 2x2 complex transfer matrix, row-major [[a, b], [c, d]].
struct Matrix2 {
    Complex a{}, b{}, c{}, d{};

    static Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Matrix2 operator*(const Matrix2& rhs) const {
        return {a * rhs.a + b * rhs.c, a * rhs.b + b * rhs.d,
                c * rhs.a + d * rhs.c, c * rhs.b + d * rhs.d};
    }

    Matrix2 operator*(Complex scale) const {
        return {scale * a, scale * b, scale * c, scale * d};
    }

    /// Conjugate transpose.
    Matrix2 dagger() const {
        return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
    }

    Complex det() const { return a * d - b * c; }
};

/// Two complex field amplitudes (upper and lower interferometer arm) plus the
/// source intensity the circuit was driven with.
struct FieldPair {
    Complex upper{};
    Complex lower{};
    double input_intensity = 1.0;
};

struct PortIntensities {
    double upper = 0.0;
    double lower = 0.0;
};

inline double max_abs_diff(const Matrix2& lhs, const Matrix2& rhs) {
    return std::max({std::abs(lhs.a - rhs.a), std::abs(lhs.b - rhs.b),
                     std::abs(lhs.c - rhs.c), std::abs(lhs.d - rhs.d)});
}

/// Largest elementwise deviation of M†M from the identity.
inline double unitarity_error(const Matrix2& m) {
    return max_abs_diff(m.dagger() * m, Matrix2::identity());
}

inline bool all_finite(const Matrix2& m) {
    for (Complex v : {m.a, m.b, m.c, m.d}) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
    return true;
}

} // namespace cbw
