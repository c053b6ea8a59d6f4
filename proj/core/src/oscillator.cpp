#include "wlg/oscillator.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace wlg {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kAmplitudeScale = std::numbers::inv_sqrtpi;  // (1/π)^{1/2}

}  // namespace

LightCone lightcone_from_zt(double z, double t) {
    return {(z + t) / kSqrt2, (z - t) / kSqrt2};
}

std::pair<double, double> zt_from_lightcone(const LightCone& lc) {
    return {(lc.u + lc.v) / kSqrt2, (lc.u - lc.v) / kSqrt2};
}

LightCone boost_lightcone(const LightCone& lc, Rapidity eta) {
    return {std::exp(eta.eta) * lc.u, std::exp(-eta.eta) * lc.v};
}

RelativeCoordinates hadron_coordinates(const FourVector& x_a,
                                       const FourVector& x_b) {
    return {0.5 * (x_a + x_b), (1.0 / (2.0 * kSqrt2)) * (x_a - x_b)};
}

std::pair<FourVector, FourVector> constituent_coordinates(
    const RelativeCoordinates& rc) {
    return {rc.X + kSqrt2 * rc.x, rc.X - kSqrt2 * rc.x};
}

RelativeMomenta hadron_momenta(const FourVector& p_a, const FourVector& p_b) {
    return {p_a + p_b, kSqrt2 * (p_a - p_b)};
}

std::pair<FourVector, FourVector> constituent_momenta(
    const RelativeMomenta& rm) {
    const FourVector half_sep = (1.0 / (2.0 * kSqrt2)) * rm.q;
    return {0.5 * rm.P + half_sep, 0.5 * rm.P - half_sep};
}

double amplitude(Rapidity eta, double z, double t) {
    const LightCone lc = lightcone_from_zt(z, t);
    const double squeeze_u = std::exp(-2.0 * eta.eta);
    const double squeeze_v = std::exp(2.0 * eta.eta);
    return kAmplitudeScale *
           std::exp(-0.5 * (squeeze_u * lc.u * lc.u +
                            squeeze_v * lc.v * lc.v));
}

double momentum_amplitude(Rapidity eta, double q_z, double q_0) {
    const double q_u = (q_0 - q_z) / kSqrt2;
    const double q_v = (q_0 + q_z) / kSqrt2;
    const double squeeze_u = std::exp(-2.0 * eta.eta);
    const double squeeze_v = std::exp(2.0 * eta.eta);
    return kAmplitudeScale *
           std::exp(-0.5 * (squeeze_u * q_u * q_u + squeeze_v * q_v * q_v));
}

Eigen::Matrix2d covariance(Rapidity eta) {
    const double var = 0.5 * std::cosh(2.0 * eta.eta);
    const double cov = 0.5 * std::sinh(2.0 * eta.eta);
    Eigen::Matrix2d m;
    m << var, cov, cov, var;
    return m;
}

double default_half_width(Rapidity eta) {
    return 6.0 * std::sqrt(0.5 * std::cosh(2.0 * eta.eta));
}

ResidualReport invariant_equation_residual(Rapidity eta,
                                           const GridGeometry& geom) {
    validate(geom);
    const auto [n1, n2] = geom.n;
    const double h1 = geom.spacing[0];
    const double h2 = geom.spacing[1];

    ResidualReport report;
    report.h1 = h1;
    report.h2 = h2;
    report.coarse_grid = std::max(h1, h2) > 0.1;

    std::vector<double> psi(static_cast<std::size_t>(n1) * n2);
    for (int i = 0; i < n1; ++i) {
        const double z = geom.origin[0] + i * h1;
        for (int j = 0; j < n2; ++j) {
            const double t = geom.origin[1] + j * h2;
            psi[static_cast<std::size_t>(i) * n2 + j] = amplitude(eta, z, t);
        }
    }

    // (1/2){(z² − t²) − (∂²_z − ∂²_t)}ψ against 0·ψ, central differences on
    // the one-cell-inset interior.
    const double inv_h1sq = 1.0 / (h1 * h1);
    const double inv_h2sq = 1.0 / (h2 * h2);
    double max_residual = 0.0;
    for (int i = 1; i + 1 < n1; ++i) {
        const double z = geom.origin[0] + i * h1;
        for (int j = 1; j + 1 < n2; ++j) {
            const double t = geom.origin[1] + j * h2;
            const std::size_t idx = static_cast<std::size_t>(i) * n2 + j;
            const double center = psi[idx];
            const double dzz =
                (psi[idx + n2] - 2.0 * center + psi[idx - n2]) * inv_h1sq;
            const double dtt =
                (psi[idx + 1] - 2.0 * center + psi[idx - 1]) * inv_h2sq;
            const double residual =
                0.5 * ((z * z - t * t) * center - (dzz - dtt));
            max_residual = std::max(max_residual, std::abs(residual));
        }
    }
    report.max_residual = max_residual;
    return report;
}

}  // namespace wlg
