#include "odlro_lab/odlro.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace odlro_lab {

double rho1_position(std::span<const double> occupations,
                     const std::vector<Mode>& modes, const Point& x,
                     const Point& x_prime) {
    if (occupations.size() != modes.size())
        throw std::invalid_argument("rho1_position: occupation/mode size mismatch");
    double total = 0.0;
    for (double n : occupations) total += n;
    if (total <= 0.0) throw std::invalid_argument("rho1_position: empty occupations");

    double sum = 0.0;
    for (std::size_t k = 0; k < modes.size(); ++k)
        sum += occupations[k] *
               mode_wavefunction_value(modes[k], x) *
               mode_wavefunction_value(modes[k], x_prime);
    return sum / total;
}

std::vector<std::pair<Point, Point>> antipodal_path(int dimension, int axis,
                                                    int n_points,
                                                    double max_separation) {
    if (dimension < 1 || dimension > 3)
        throw std::invalid_argument("antipodal_path: dimension must be 1, 2 or 3");
    if (axis < 0 || axis >= dimension)
        throw std::invalid_argument("antipodal_path: axis outside trap dimension");
    if (n_points < 1) throw std::invalid_argument("antipodal_path: need >= 1 point");
    if (!(max_separation > 0.0 && max_separation < 1.0))
        throw std::invalid_argument("antipodal_path: separation must lie in (0, 1)");

    std::vector<std::pair<Point, Point>> path;
    path.reserve(n_points);
    for (int i = 0; i < n_points; ++i) {
        const double s =
            n_points == 1 ? max_separation
                          : max_separation * double(i) / double(n_points - 1);
        Point x{0.5, 0.5, 0.5};
        Point xp{0.5, 0.5, 0.5};
        x[axis] = 0.5 - 0.5 * s;
        xp[axis] = 0.5 + 0.5 * s;
        path.emplace_back(x, xp);
    }
    return path;
}

OffDiagonalScan offdiagonal_scan(std::span<const double> occupations,
                                 const std::vector<Mode>& modes,
                                 const std::vector<std::pair<Point, Point>>& path) {
    if (path.empty()) throw std::invalid_argument("offdiagonal_scan: empty path");
    OffDiagonalScan scan;
    scan.points.reserve(path.size());
    for (const auto& [x, xp] : path) {
        ScanPoint point;
        int axis = 0;
        double sep = 0.0;
        for (int i = 0; i < 3; ++i) {
            const double d = std::abs(xp[i] - x[i]);
            if (d > sep) {
                sep = d;
                axis = i;
            }
        }
        point.separation = sep;
        point.x = x[axis];
        point.x_prime = xp[axis];
        point.value = rho1_position(occupations, modes, x, xp) * scan.volume;
        scan.points.push_back(point);
    }
    return scan;
}

OdlroReport odlro_detect(std::span<const double> spectrum, double threshold) {
    if (spectrum.empty()) throw std::invalid_argument("odlro_detect: empty spectrum");
    double trace = 0.0;
    double lambda_max = 0.0;
    for (double ev : spectrum) {
        if (ev < -1e-10)
            throw std::invalid_argument("odlro_detect: negative eigenvalue, not a density operator");
        trace += ev;
        lambda_max = std::max(lambda_max, ev);
    }
    if (lambda_max <= 0.0)
        throw std::invalid_argument("odlro_detect: no positive eigenvalue");

    OdlroReport report;
    report.alpha = lambda_max / trace;
    report.threshold = threshold;
    report.flag = report.alpha >= threshold;

    std::vector<double> fractions(spectrum.begin(), spectrum.end());
    std::sort(fractions.begin(), fractions.end(), std::greater<>());
    const std::size_t head = std::min<std::size_t>(4, fractions.size());
    report.spectrum_head.reserve(head);
    for (std::size_t i = 0; i < head; ++i)
        report.spectrum_head.push_back(fractions[i] / trace);
    return report;
}

}  // namespace odlro_lab
