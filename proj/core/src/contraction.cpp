#include "wlg/contraction.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

namespace wlg {

Matrix4c boosted_rotation(int axis, Rapidity eta,
                          ConjugationDirection direction) {
    if (axis != 1 && axis != 2) {
        throw std::invalid_argument("boosted_rotation: axis must be 1 or 2");
    }
    const Matrix4c j = generator_matrix(axis == 1 ? GeneratorLabel::J1
                                                  : GeneratorLabel::J2);
    const auto b = boost_z(eta).matrix.cast<std::complex<double>>();
    const auto b_inv =
        boost_z(Rapidity{-eta.eta}).matrix.cast<std::complex<double>>();
    return direction == ConjugationDirection::conjugate ? b * j * b_inv
                                                        : b_inv * j * b;
}

Matrix4c contracted_generator(int axis, Rapidity eta) {
    const double sign = axis == 2 ? kContractionSignN1 : kContractionSignN2;
    // Divide entrywise by cosh η so the cosh-scale entries collapse to
    // exactly ±1 and only the tanh-scale entries carry the e^{−2η} defect.
    return sign *
           (boosted_rotation(axis, eta, kContractionDirection) /
            std::cosh(eta.eta));
}

double operator_norm(const Matrix4c& m) {
    return Eigen::JacobiSVD<Matrix4c>(m).singularValues()(0);
}

ContractionReport contraction_report(std::span<const double> etas) {
    if (etas.empty()) {
        throw std::invalid_argument("contraction_report: empty eta list");
    }
    double prev = 0.0;
    for (double e : etas) {
        if (!(e > prev)) {
            throw std::invalid_argument(
                "contraction_report: etas must be positive and strictly "
                "increasing");
        }
        prev = e;
    }

    const auto [n1, n2] = n_generators();
    ContractionReport report;
    report.etas.assign(etas.begin(), etas.end());
    report.deviations_n1.reserve(etas.size());
    report.deviations_n2.reserve(etas.size());
    for (double e : etas) {
        const Rapidity eta{e};
        report.deviations_n1.push_back(
            operator_norm(contracted_generator(2, eta) - n1.matrix));
        report.deviations_n2.push_back(
            operator_norm(contracted_generator(1, eta) - n2.matrix));
    }

    // Unweighted least-squares slope of ln(dev) against η, both axes pooled.
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    double count = 0.0;
    auto accumulate = [&](const std::vector<double>& devs) {
        for (std::size_t i = 0; i < devs.size(); ++i) {
            const double x = report.etas[i];
            const double y = std::log(devs[i]);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            count += 1.0;
        }
    };
    accumulate(report.deviations_n1);
    accumulate(report.deviations_n2);
    const double denom = count * sxx - sx * sx;
    report.fitted_decay_rate =
        denom != 0.0 ? (count * sxy - sx * sy) / denom : 0.0;
    return report;
}

}  // namespace wlg
