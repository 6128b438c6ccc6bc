#pragma once

#include "cbw/matrix2.hpp"

namespace cbw {

/// Whether the second MZI of a double-MZI block carries the negated internal
/// phase (Asymmetric, the CBW configuration) or repeats it (Symmetric).
enum class Coupling { Asymmetric, Symmetric };

/// Settings for one coupled double-MZI block: internal phase phi, control
/// phase psi applied on the lower arm between the two MZIs, and the coupling
/// sign convention. Angles are radians and may be any finite value.
struct BlockParams {
    double phi = 0.0;
    double psi = 0.0;
    Coupling coupling = Coupling::Asymmetric;

    bool operator==(const BlockParams&) const = default;
};

/// 50:50 beam splitter, (1/sqrt 2) [[1, i], [i, 1]].
Matrix2 bs_matrix();

/// Lower-arm phase plate diag(1, e^{i phi}).
Matrix2 phase_matrix(double phi);

/// Single Mach-Zehnder interferometer: BS * phase(phi) * BS, rightmost factor
/// acting first on the input field.
Matrix2 mzi_matrix(double phi);

/// Transfer matrix of one coupled double-MZI block: the input-side MZI with
/// phi, the control phase plate psi, then the second MZI with -phi
/// (Asymmetric) or +phi (Symmetric). Always unitary.
Matrix2 acd_block(const BlockParams& params);

/// Literal n-fold product of identical blocks. Brute-force reference for
/// chain_closed_form; n must be >= 1.
Matrix2 chain_product(const BlockParams& params, int n);

/// Closed form of the n-block asymmetric chain at psi = 0:
/// (-1)^n [[cos n*phi, sin n*phi], [-sin n*phi, cos n*phi]]. n must be >= 1.
Matrix2 chain_closed_form(double phi, int n);

/// Matrix-vector product; carries input_intensity through unchanged.
FieldPair apply(const Matrix2& m, const FieldPair& in);

/// Port intensities (|upper|^2, |lower|^2).
PortIntensities intensities(const FieldPair& fields);

/// Source field (sqrt(intensity), 0) entering the upper port.
FieldPair source_field(double intensity);

} // namespace cbw
