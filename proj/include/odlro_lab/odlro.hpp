#pragma once

#include <span>
#include <utility>
#include <vector>

#include "odlro_lab/geometry.hpp"

namespace odlro_lab {

/// Dominant-eigenvalue diagnostic of a density-matrix spectrum.
struct OdlroReport {
    double alpha = 0.0;  // lambda_max / trace
    double threshold = 0.0;
    bool flag = false;
    std::vector<double> spectrum_head;  // top eigenvalue fractions, descending
};

struct ScanPoint {
    double separation = 0.0;
    double x = 0.0;        // scan-axis coordinate of the first point
    double x_prime = 0.0;  // scan-axis coordinate of the second point
    double value = 0.0;    // rho_1(x, x') * V, trace-1 convention
};

struct OffDiagonalScan {
    std::vector<ScanPoint> points;
    double volume = 1.0;
};

// rho_1(x, x') = sum_k (<n_k>/N) phi_k(x) phi_k(x'), normalized so the
// diagonal integrates to 1 over the box (multiply by N for the extensive
// convention).
double rho1_position(std::span<const double> occupations,
                     const std::vector<Mode>& modes, const Point& x,
                     const Point& x_prime);

// Antipodal pairs x = c - s/2, x' = c + s/2 around the box center along
// one axis, separations 0..max_separation.
std::vector<std::pair<Point, Point>> antipodal_path(int dimension, int axis,
                                                    int n_points,
                                                    double max_separation = 0.9);

OffDiagonalScan offdiagonal_scan(std::span<const double> occupations,
                                 const std::vector<Mode>& modes,
                                 const std::vector<std::pair<Point, Point>>& path);

// alpha = lambda_max / sum(lambda); flag = (alpha >= threshold). Accepts any
// nonnegative spectrum; ideal-gas occupations can be passed directly since
// they are the rho_1 eigenvalues up to the 1/N normalization.
OdlroReport odlro_detect(std::span<const double> spectrum, double threshold);

}  // namespace odlro_lab
