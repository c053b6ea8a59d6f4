#include "wlg/group_element.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace wlg {

namespace {

// sinh(x)/x and sin(x)/x with series guards near zero.
double sinhc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 + x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sinh(x) / x;
}

double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

}  // namespace

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    return GroupElement{a.matrix * b.matrix};
}

Eigen::Matrix4d exp_lorentz_algebra(const Eigen::Matrix4d& a) {
    // Rotation-like and boost-like coefficient vectors of a ∈ so(3,1).
    const Eigen::Vector3d rot{a(2, 1), a(0, 2), a(1, 0)};
    const Eigen::Vector3d boo{a(0, 3), a(1, 3), a(2, 3)};

    // Invariants fixing the eigenvalue pairs ±α, ±iβ.
    const double w = boo.squaredNorm() - rot.squaredNorm();
    const double tau = rot.dot(boo);
    const double hyp = std::sqrt(w * w + 4.0 * tau * tau);  // α² + β²

    if (hyp == 0.0) {
        // Null (nilpotent) element: a³ = 0, the series terminates exactly.
        return Eigen::Matrix4d::Identity() + a + 0.5 * (a * a);
    }

    const double alpha2 = 0.5 * (hyp + w);
    const double beta2 = 0.5 * (hyp - w);
    const double alpha = std::sqrt(std::max(alpha2, 0.0));
    const double beta = std::sqrt(std::max(beta2, 0.0));

    const Eigen::Matrix4d a2 = a * a;
    const Eigen::Matrix4d id = Eigen::Matrix4d::Identity();
    // Spectral projectors onto the boost-like (a² = α²) and rotation-like
    // (a² = −β²) invariant planes.
    const Eigen::Matrix4d ph = (a2 + beta2 * id) / hyp;
    const Eigen::Matrix4d pe = (alpha2 * id - a2) / hyp;

    return std::cosh(alpha) * ph + sinhc(alpha) * (a * ph) +
           std::cos(beta) * pe + sinc(beta) * (a * pe);
}

GroupElement exp_generator(const Matrix4c& g, double theta) {
    const Matrix4c scaled = std::complex<double>(0.0, -theta) * g;
    const double scale = std::max(1.0, scaled.cwiseAbs().maxCoeff());
    if (scaled.imag().cwiseAbs().maxCoeff() > 1e-12 * scale) {
        throw std::invalid_argument(
            "exp_generator: non-real combination of generators");
    }
    const Eigen::Matrix4d a = scaled.real();
    const Eigen::Matrix4d gm = minkowski_metric();
    if ((a + gm * a.transpose() * gm).cwiseAbs().maxCoeff() > 1e-12 * scale) {
        throw std::invalid_argument(
            "exp_generator: matrix outside the Lorentz algebra span");
    }
    return GroupElement{exp_lorentz_algebra(a)};
}

GroupElement exp_generator(const Generator& g, double theta) {
    return exp_generator(g.matrix, theta);
}

GroupElement boost_z(Rapidity eta) {
    const double ch = std::cosh(eta.eta);
    const double sh = std::sinh(eta.eta);
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m(2, 2) = ch;
    m(2, 3) = sh;
    m(3, 2) = sh;
    m(3, 3) = ch;
    return GroupElement{m};
}

FourVector apply(const GroupElement& elem, const FourVector& v) {
    return from_eigen(elem.matrix * to_eigen(v));
}

}  // namespace wlg
