#include "cbw/optics.hpp"

#include <cmath>

#include "cbw/errors.hpp"

namespace cbw {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void require_finite(double value, const char* name) {
    if (!std::isfinite(value)) {
        throw input_error(std::string(name) + " must be finite");
    }
}

} // namespace

Matrix2 bs_matrix() {
    return {Complex(kInvSqrt2, 0.0), Complex(0.0, kInvSqrt2),
            Complex(0.0, kInvSqrt2), Complex(kInvSqrt2, 0.0)};
}

Matrix2 phase_matrix(double phi) {
    require_finite(phi, "phi");
    return {1.0, 0.0, 0.0, std::polar(1.0, phi)};
}

Matrix2 mzi_matrix(double phi) {
    return bs_matrix() * phase_matrix(phi) * bs_matrix();
}

Matrix2 acd_block(const BlockParams& params) {
    require_finite(params.phi, "phi");
    require_finite(params.psi, "psi");
    const double second_phi =
        params.coupling == Coupling::Asymmetric ? -params.phi : params.phi;
    return mzi_matrix(second_phi) * phase_matrix(params.psi) * mzi_matrix(params.phi);
}

Matrix2 chain_product(const BlockParams& params, int n) {
    if (n < 1) throw input_error("chain length must be >= 1");
    const Matrix2 block = acd_block(params);
    Matrix2 result = block;
    for (int i = 1; i < n; ++i) result = block * result;
    return result;
}

Matrix2 chain_closed_form(double phi, int n) {
    if (n < 1) throw input_error("chain length must be >= 1");
    require_finite(phi, "phi");
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const double c = std::cos(n * phi);
    const double s = std::sin(n * phi);
    return {Complex(sign * c, 0.0), Complex(sign * s, 0.0),
            Complex(-sign * s, 0.0), Complex(sign * c, 0.0)};
}

FieldPair apply(const Matrix2& m, const FieldPair& in) {
    return {m.a * in.upper + m.b * in.lower,
            m.c * in.upper + m.d * in.lower,
            in.input_intensity};
}

PortIntensities intensities(const FieldPair& fields) {
    return {std::norm(fields.upper), std::norm(fields.lower)};
}

FieldPair source_field(double intensity) {
    if (!(intensity >= 0.0) || !std::isfinite(intensity)) {
        throw input_error("source intensity must be finite and >= 0");
    }
    return {Complex(std::sqrt(intensity), 0.0), Complex(0.0, 0.0), intensity};
}

} // namespace cbw
