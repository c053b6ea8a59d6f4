#include "wlg/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace wlg {

void validate(const GridGeometry& geom) {
    for (int axis = 0; axis < 2; ++axis) {
        if (geom.n[axis] < 2) {
            throw std::invalid_argument("grid: need at least 2 samples per axis");
        }
        if (!(geom.spacing[axis] > 0.0) ||
            !std::isfinite(geom.spacing[axis])) {
            throw std::invalid_argument("grid: spacing must be positive");
        }
        if (!std::isfinite(geom.origin[axis])) {
            throw std::invalid_argument("grid: origin must be finite");
        }
    }
}

void validate(const Grid2D& grid) {
    validate(grid.geom);
    const auto expected = static_cast<std::size_t>(grid.geom.n[0]) *
                          static_cast<std::size_t>(grid.geom.n[1]);
    if (grid.values.size() != expected) {
        throw std::invalid_argument("grid: values length must equal n0*n1");
    }
}

Grid2D sample_grid(const std::function<double(double, double)>& f,
                   const GridWindow& window, std::array<int, 2> n) {
    for (int axis = 0; axis < 2; ++axis) {
        if (!(window.half_width[axis] > 0.0) ||
            !std::isfinite(window.half_width[axis]) ||
            !std::isfinite(window.center[axis])) {
            throw std::invalid_argument("sample_grid: degenerate window");
        }
    }
    Grid2D grid;
    grid.geom.n = n;
    for (int axis = 0; axis < 2; ++axis) {
        grid.geom.origin[axis] = window.center[axis] - window.half_width[axis];
        grid.geom.spacing[axis] =
            2.0 * window.half_width[axis] / (n[axis] - 1);
    }
    validate(grid.geom);

    grid.values.resize(static_cast<std::size_t>(n[0]) *
                       static_cast<std::size_t>(n[1]));
    for (int i = 0; i < n[0]; ++i) {
        const double x1 = grid.geom.origin[0] + i * grid.geom.spacing[0];
        for (int j = 0; j < n[1]; ++j) {
            const double x2 = grid.geom.origin[1] + j * grid.geom.spacing[1];
            grid.values[static_cast<std::size_t>(i) * n[1] + j] = f(x1, x2);
        }
    }
    return grid;
}

namespace {

inline double trapezoid_weight(int i, int n) {
    return (i == 0 || i == n - 1) ? 0.5 : 1.0;
}

}  // namespace

double norm2(const Grid2D& grid) {
    validate(grid);
    const auto [n1, n2] = grid.geom.n;
    double sum = 0.0;
    for (int i = 0; i < n1; ++i) {
        const double wi = trapezoid_weight(i, n1);
        double row = 0.0;
        for (int j = 0; j < n2; ++j) {
            const double v = grid.values[static_cast<std::size_t>(i) * n2 + j];
            row += trapezoid_weight(j, n2) * v * v;
        }
        sum += wi * row;
    }
    return sum * grid.geom.spacing[0] * grid.geom.spacing[1];
}

Eigen::Matrix2d second_moments(const Grid2D& grid) {
    validate(grid);
    const auto [n1, n2] = grid.geom.n;
    double mass = 0.0;
    Eigen::Vector2d mean = Eigen::Vector2d::Zero();
    Eigen::Matrix2d raw = Eigen::Matrix2d::Zero();
    for (int i = 0; i < n1; ++i) {
        const double x1 = grid.geom.origin[0] + i * grid.geom.spacing[0];
        const double wi = trapezoid_weight(i, n1);
        for (int j = 0; j < n2; ++j) {
            const double x2 = grid.geom.origin[1] + j * grid.geom.spacing[1];
            const double v = grid.values[static_cast<std::size_t>(i) * n2 + j];
            const double w = wi * trapezoid_weight(j, n2) * v * v;
            mass += w;
            mean(0) += w * x1;
            mean(1) += w * x2;
            raw(0, 0) += w * x1 * x1;
            raw(0, 1) += w * x1 * x2;
            raw(1, 1) += w * x2 * x2;
        }
    }
    if (!(mass > 0.0)) {
        throw std::invalid_argument("second_moments: zero-mass density");
    }
    mean /= mass;
    raw(1, 0) = raw(0, 1);
    return raw / mass - mean * mean.transpose();
}

}  // namespace wlg
