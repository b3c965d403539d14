#include "odlro_lab/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace odlro_lab {

namespace {

constexpr double kPi = std::numbers::pi;

// Primitive of 2 sin^2(n pi x): F(x) = x - sin(2 pi n x) / (2 pi n).
double sin_sq_primitive(int n, double x) {
    return x - std::sin(2.0 * kPi * n * x) / (2.0 * kPi * n);
}

// Primitive of 2 sin(n pi x) sin(m pi x) for n != m.
double sin_cross_primitive(int n, int m, double x) {
    return std::sin((n - m) * kPi * x) / ((n - m) * kPi) -
           std::sin((n + m) * kPi * x) / ((n + m) * kPi);
}

// int_lo^hi 2 sin(n pi x) sin(m pi x) dx.
double axis_integral(int n, int m, double lo, double hi) {
    if (n == m) return sin_sq_primitive(n, hi) - sin_sq_primitive(n, lo);
    return sin_cross_primitive(n, m, hi) - sin_cross_primitive(n, m, lo);
}

RegionProbabilities axis_probabilities(int n, const PartitionSpec& p) {
    RegionProbabilities out;
    out.a = sin_sq_primitive(n, p.a);
    out.b = 1.0 - sin_sq_primitive(n, p.b);
    out.c = 1.0 - out.a - out.b;
    return out;
}

}  // namespace

void PartitionSpec::validate() const {
    if (!(a > 0.0) || !(a <= b) || !(b < 1.0))
        throw std::invalid_argument("PartitionSpec: require 0 < a <= b < 1");
    if (axis < 0 || axis > 2)
        throw std::invalid_argument("PartitionSpec: axis must be 0, 1 or 2");
}

double mode_wavefunction_value(const Mode& mode, const Point& x) {
    double v = 1.0;
    for (int i = 0; i < mode.dim; ++i)
        v *= std::numbers::sqrt2 * std::sin(mode.n[i] * kPi * x[i]);
    return v;
}

RegionProbabilities partition_probabilities(const Mode& mode,
                                            const PartitionSpec& partition) {
    partition.validate();
    if (partition.axis >= mode.dim)
        throw std::invalid_argument("partition_probabilities: axis outside trap dimension");
    // Non-split axes integrate to exactly 1.
    return axis_probabilities(mode.n[partition.axis], partition);
}

double overlap(const Mode& mode_k, const Mode& mode_l, Region region,
               const PartitionSpec& partition) {
    partition.validate();
    if (mode_k.dim != mode_l.dim)
        throw std::invalid_argument("overlap: mixed-dimension modes");
    if (partition.axis >= mode_k.dim)
        throw std::invalid_argument("overlap: axis outside trap dimension");

    const int ax = partition.axis;
    const int n = mode_k.n[ax];
    const int m = mode_l.n[ax];
    const RegionProbabilities pk = axis_probabilities(n, partition);
    const RegionProbabilities pl = axis_probabilities(m, partition);
    const double prob_k = region == Region::A ? pk.a : pk.b;
    const double prob_l = region == Region::A ? pl.a : pl.b;
    if (prob_k <= 0.0 || prob_l <= 0.0)
        throw std::invalid_argument("overlap: zero-probability region");

    // Kronecker deltas across the non-split axes.
    for (int i = 0; i < mode_k.dim; ++i)
        if (i != ax && mode_k.n[i] != mode_l.n[i]) return 0.0;

    const double integral = region == Region::A
                                ? axis_integral(n, m, 0.0, partition.a)
                                : axis_integral(n, m, partition.b, 1.0);
    return integral / std::sqrt(prob_k * prob_l);
}

GramSet gram_matrices(const std::vector<Mode>& modes, const PartitionSpec& partition) {
    partition.validate();
    if (modes.empty()) throw std::invalid_argument("gram_matrices: empty mode list");

    const Eigen::Index m = static_cast<Eigen::Index>(modes.size());
    GramSet g;
    g.p_a.resize(m);
    g.p_b.resize(m);
    g.p_c.resize(m);
    g.gram_a.resize(m, m);
    g.gram_b.resize(m, m);

    for (Eigen::Index k = 0; k < m; ++k) {
        const RegionProbabilities p = partition_probabilities(modes[k], partition);
        g.p_a(k) = p.a;
        g.p_b(k) = p.b;
        g.p_c(k) = p.c;
    }
    for (Eigen::Index k = 0; k < m; ++k) {
        g.gram_a(k, k) = 1.0;
        g.gram_b(k, k) = 1.0;
        for (Eigen::Index l = k + 1; l < m; ++l) {
            const double oa = overlap(modes[k], modes[l], Region::A, partition);
            const double ob = overlap(modes[k], modes[l], Region::B, partition);
            g.gram_a(k, l) = g.gram_a(l, k) = oa;
            g.gram_b(k, l) = g.gram_b(l, k) = ob;
        }
    }

    // Mirror identity of the symmetric half-box split:
    // gramB_{kl} = (-1)^{n_x + m_x} gramA_{kl}.
    if (partition.a == 0.5 && partition.b == 0.5) {
        const int ax = partition.axis;
        for (Eigen::Index k = 0; k < m; ++k)
            for (Eigen::Index l = 0; l < m; ++l) {
                const int parity = (modes[k].n[ax] + modes[l].n[ax]) % 2 == 0 ? 1 : -1;
                if (std::abs(g.gram_b(k, l) - parity * g.gram_a(k, l)) > 1e-12)
                    throw std::logic_error("gram_matrices: half-box mirror identity violated");
            }
    }
    return g;
}

}  // namespace odlro_lab
