#pragma once

#include <array>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace wlg {

/// Uniform sampling geometry over a 2-plane.
struct GridGeometry {
    std::array<double, 2> origin = {0.0, 0.0};
    std::array<double, 2> spacing = {1.0, 1.0};
    std::array<int, 2> n = {2, 2};
};

/// Rectangular sampling of an amplitude, row-major over the first axis:
/// values[i*n[1] + j] is the sample at (origin0 + i·spacing0,
/// origin1 + j·spacing1).
struct Grid2D {
    GridGeometry geom;
    std::vector<double> values;
};

/// Throws std::invalid_argument unless spacing > 0, n ≥ 2 per axis, and (for
/// Grid2D) values.size() == n0·n1.
void validate(const GridGeometry& geom);
void validate(const Grid2D& grid);

struct GridWindow {
    std::array<double, 2> center = {0.0, 0.0};
    std::array<double, 2> half_width = {1.0, 1.0};
};

/// Uniform sampling of f over the window, endpoints included, deterministic
/// row-major ordering. Degenerate windows (half-width not positive/finite)
/// are rejected.
Grid2D sample_grid(const std::function<double(double, double)>& f,
                   const GridWindow& window, std::array<int, 2> n);

/// ∫|values|² by the tensor-product trapezoid rule. The caller is responsible
/// for a window wide enough for the intended accuracy (≥ 6 standard
/// deviations per principal axis for the squeezed Gaussians).
double norm2(const Grid2D& grid);

/// Second moments of the probability density |values|² over the grid, by the
/// same trapezoid rule: covariance matrix of the two axes after normalizing
/// total mass and subtracting the mean.
Eigen::Matrix2d second_moments(const Grid2D& grid);

}  // namespace wlg
