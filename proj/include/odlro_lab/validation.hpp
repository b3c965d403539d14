#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "odlro_lab/geometry.hpp"

namespace odlro_lab {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Structural Gram-set invariants: unit diagonal, entries in [-1, 1],
// positive semidefinite, Hadamard product positive semidefinite. The detail
// carries the minimal eigenvalues as a conditioning diagnostic.
CheckResult check_gram_set(const GramSet& grams);

// Adaptive Simpson quadrature; test-side oracle for the closed-form
// overlap integrals, not used by any production path.
double adaptive_simpson(const std::function<double(double)>& f, double lo,
                        double hi, double tol);

// Draws a partition whose region Grams stay well conditioned at the given
// cutoff (small regions make the restricted modes nearly dependent).
PartitionSpec random_partition(std::mt19937_64& rng, int cutoff, bool gapped);

/// Runs the whole invariant suite; one result per named property.
std::vector<CheckResult> run_all_checks(std::uint64_t seed);

}  // namespace odlro_lab
