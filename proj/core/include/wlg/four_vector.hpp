#pragma once

#include <Eigen/Dense>

namespace wlg {

/// Real four-vector in (x, y, z, t) component ordering, natural units (c = 1).
struct FourVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double t = 0.0;
};

/// Minkowski quadratic form x² + y² + z² − t² under the metric diag(1,1,1,−1).
double minkowski_norm(const FourVector& v);

/// Metric matrix g = diag(1, 1, 1, −1).
Eigen::Matrix4d minkowski_metric();

Eigen::Vector4d to_eigen(const FourVector& v);
FourVector from_eigen(const Eigen::Vector4d& v);

FourVector operator+(const FourVector& a, const FourVector& b);
FourVector operator-(const FourVector& a, const FourVector& b);
FourVector operator*(double s, const FourVector& v);

}  // namespace wlg
