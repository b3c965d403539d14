#pragma once

#include <Eigen/Dense>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "odlro_lab/geometry.hpp"

namespace odlro_lab {

/// Gram matrix too close to singular for Loewdin orthogonalization.
struct ConditioningError : std::runtime_error {
    double min_eigenvalue;
    ConditioningError(const std::string& what, double min_eig)
        : std::runtime_error(what), min_eigenvalue(min_eig) {}
};

/// Coefficients of the coherence ket: c_k = <n_k>/N, and the gapped-case
/// pieces d_k = c_k sqrt(pA_k pB_k), q = sum_k c_k pC_k.
struct ChiVector {
    Eigen::VectorXd c;
    Eigen::VectorXd d;
    double q = 0.0;
};

enum class NegativityMethod {
    analytic_adjacent,
    analytic_gapped,
    analytic_ground_state,
    pt_oracle,
};

const char* to_string(NegativityMethod method);

struct NegativityReport {
    double value = 0.0;
    NegativityMethod method = NegativityMethod::pt_oracle;
    int negative_count = -1;  // -1 when not applicable (closed forms)
    // context, filled by callers that know it
    double temperature = std::numeric_limits<double>::quiet_NaN();
    double partition_a = std::numeric_limits<double>::quiet_NaN();
    double partition_b = std::numeric_limits<double>::quiet_NaN();
    int mode_cutoff = 0;
    double tail_weight = std::numeric_limits<double>::quiet_NaN();
};

// ---- generic dense machinery ----

/// Transposition of the B tensor factor of a (dim_a*dim_b)-dimensional operator.
Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd& op, Eigen::Index dim_a,
                                   Eigen::Index dim_b);

struct PtSpectrum {
    double negativity = 0.0;   // sum of |negative eigenvalues| of rho^{T_B}
    int negative_count = 0;    // eigenvalues below -1e-12
    double min_eigenvalue = 0.0;
};

PtSpectrum negativity_of_density(const Eigen::MatrixXcd& rho, Eigen::Index dim_a,
                                 Eigen::Index dim_b);

// Symmetric (Loewdin) square root G^{1/2}; throws ConditioningError when
// the smallest Gram eigenvalue is below min_eigenvalue.
Eigen::MatrixXd lowdin_sqrt(const Eigen::MatrixXd& gram, double min_eigenvalue = 1e-12);

// ---- single-particle density matrix negativity ----

/// Normalizes occupations over the given mode set (c sums to 1 exactly).
ChiVector make_chi(std::span<const double> occupations, const GramSet& grams);

// <chi|chi> = sum_{k,l} c_k c_l gramA_{kl} gramB_{kl}, in [0, 1].
double chi_norm_squared(const ChiVector& chi, const GramSet& grams);

// Adjacent partitions (pC = 0): value = (1/2) sqrt(<chi|chi>). Exact for the
// symmetric half-box split where the restriction amplitudes are 1/sqrt(2).
NegativityReport negativity_adjacent(const ChiVector& chi, const GramSet& grams);

// General split: value = (1/2)(sqrt(4 <delta|delta> + q^2) - q).
NegativityReport negativity_gapped(const ChiVector& chi, const GramSet& grams);

// Ground-state closed form at T = 0 from the ground-mode probabilities alone.
NegativityReport negativity_ground_state_gapped(double p0a, double p0b, double p0c);

// Independent numerical route: assembles rho_1 in an explicit orthonormal
// basis (Loewdin bases of the A, B restrictions and of the paired kets
// |A_k B_k>), applies the transposition on the B factor term by term, and
// takes the full symmetric eigendecomposition. The four sectors
// vacuum x vacuum, A x vacuum, vacuum x B, A x B carry the entire support
// and range of rho_1^{T_B}; the orthogonal complement contributes only
// zero eigenvalues, so restricting to them is exact.
NegativityReport pt_oracle(std::span<const double> occupations,
                           const std::vector<Mode>& modes,
                           const PartitionSpec& partition, const GramSet& grams);

inline constexpr int kPtOracleMaxModes = 512;
inline constexpr double kNegativeEigenvalueTol = 1e-12;

}  // namespace odlro_lab
