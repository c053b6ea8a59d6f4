#pragma once

#include <Eigen/Dense>

#include "wlg/four_vector.hpp"
#include "wlg/generators.hpp"

namespace wlg {

/// Additive boost parameter. Boost matrix entries are cosh η, sinh η.
struct Rapidity {
    double eta = 0.0;
};

/// A real 4×4 Lorentz transformation. Elements produced by this module
/// preserve the metric (ΛᵀgΛ = g) and have unit determinant.
struct GroupElement {
    Eigen::Matrix4d matrix = Eigen::Matrix4d::Identity();
};

GroupElement operator*(const GroupElement& a, const GroupElement& b);

/// exp(−iθg) for g in the real span of the eight labeled generators.
///
/// Closed forms throughout: trigonometric on the rotation-like part,
/// hyperbolic on the boost-like part, and a terminating quadratic polynomial
/// on the nilpotent span (where the series ends exactly at the second-order
/// term). Throws std::invalid_argument for complex combinations or matrices
/// outside the Lorentz algebra span.
GroupElement exp_generator(const Matrix4c& g, double theta);
GroupElement exp_generator(const Generator& g, double theta);

/// exp(A) for real A in so(3,1); the branch selection described above.
Eigen::Matrix4d exp_lorentz_algebra(const Eigen::Matrix4d& a);

/// Boost along z: identity on (x, y), cosh/sinh mixing on (z, t).
GroupElement boost_z(Rapidity eta);

/// Matrix–vector product in (x, y, z, t) ordering.
FourVector apply(const GroupElement& elem, const FourVector& v);

}  // namespace wlg
