#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "odlro_lab/bose_gas.hpp"

namespace odlro_lab {

using Point = std::array<double, 3>;

/// Axis-aligned split of the unit box into A = [0,a], C = (a,b), B = [b,1]
/// along one coordinate. Adjacent partition <=> a == b (empty C).
struct PartitionSpec {
    double a = 0.5;
    double b = 0.5;
    int axis = 0;

    bool adjacent() const { return a == b; }
    void validate() const;
};

enum class Region { A, B };

struct RegionProbabilities {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

/// Per-mode partition probabilities and the normalized-overlap Gram
/// matrices <A_k|A_l>, <B_k|B_l> of the restricted eigenfunctions.
struct GramSet {
    Eigen::VectorXd p_a, p_b, p_c;
    Eigen::MatrixXd gram_a, gram_b;
};

/// Box eigenfunction value: prod_i sqrt(2) sin(n_i pi x_i).
double mode_wavefunction_value(const Mode& mode, const Point& x);

RegionProbabilities partition_probabilities(const Mode& mode,
                                            const PartitionSpec& partition);

// <M_k|M_l> = int_M phi_k phi_l / sqrt(p_k p_l). Off-axis quantum numbers
// give Kronecker deltas; the split-axis integral has a closed form.
double overlap(const Mode& mode_k, const Mode& mode_l, Region region,
               const PartitionSpec& partition);

GramSet gram_matrices(const std::vector<Mode>& modes, const PartitionSpec& partition);

}  // namespace odlro_lab
