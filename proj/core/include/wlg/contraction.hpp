#pragma once

#include <span>
#include <vector>

#include "wlg/generators.hpp"
#include "wlg/group_element.hpp"

namespace wlg {

enum class ConjugationDirection { conjugate, inverse_conjugate };

/// Frozen bookkeeping for the O(3) → E(2) contraction, selected empirically
/// as the (direction, sign) combination minimizing the distance to the N
/// targets at η = 8 (a regression test re-derives the minimizer):
///   N1 = lim −(1/cosh η) B J2 B⁻¹,   N2 = lim +(1/cosh η) B J1 B⁻¹.
inline constexpr ConjugationDirection kContractionDirection =
    ConjugationDirection::conjugate;
inline constexpr double kContractionSignN1 = -1.0;  // axis 2 (J2 → N1)
inline constexpr double kContractionSignN2 = +1.0;  // axis 1 (J1 → N2)

/// B J_i B⁻¹ (conjugate) or B⁻¹ J_i B (inverse_conjugate) with B = boost_z(η).
/// axis must be 1 or 2.
Matrix4c boosted_rotation(int axis, Rapidity eta,
                          ConjugationDirection direction =
                              ConjugationDirection::conjugate);

/// (sign/cosh η)·(boosted rotation) with the frozen direction and sign for
/// the given axis. Converges to N1 (axis 2) or N2 (axis 1) like e^{−2η}.
Matrix4c contracted_generator(int axis, Rapidity eta);

/// Largest singular value, basis-independent deviation measure.
double operator_norm(const Matrix4c& m);

struct ContractionReport {
    std::vector<double> etas;
    std::vector<double> deviations_n1;  // ‖contracted(axis 2, η) − N1‖
    std::vector<double> deviations_n2;  // ‖contracted(axis 1, η) − N2‖
    double fitted_decay_rate = 0.0;     // least-squares slope of ln(dev) vs η
};

/// Deviations for both axes at each η plus an unweighted least-squares fit of
/// log-deviation against η (both axes pooled). The η list must be nonempty,
/// positive, and strictly increasing.
ContractionReport contraction_report(std::span<const double> etas);

}  // namespace wlg
