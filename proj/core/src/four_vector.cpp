#include "wlg/four_vector.hpp"

namespace wlg {

double minkowski_norm(const FourVector& v) {
    return v.x * v.x + v.y * v.y + v.z * v.z - v.t * v.t;
}

Eigen::Matrix4d minkowski_metric() {
    Eigen::Matrix4d g = Eigen::Matrix4d::Identity();
    g(3, 3) = -1.0;
    return g;
}

Eigen::Vector4d to_eigen(const FourVector& v) {
    return {v.x, v.y, v.z, v.t};
}

FourVector from_eigen(const Eigen::Vector4d& v) {
    return {v(0), v(1), v(2), v(3)};
}

FourVector operator+(const FourVector& a, const FourVector& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z, a.t + b.t};
}

FourVector operator-(const FourVector& a, const FourVector& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z, a.t - b.t};
}

FourVector operator*(double s, const FourVector& v) {
    return {s * v.x, s * v.y, s * v.z, s * v.t};
}

}  // namespace wlg
