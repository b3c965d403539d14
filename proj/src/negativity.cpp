#include "odlro_lab/negativity.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace odlro_lab {

const char* to_string(NegativityMethod method) {
    switch (method) {
        case NegativityMethod::analytic_adjacent: return "analytic_adjacent";
        case NegativityMethod::analytic_gapped: return "analytic_gapped";
        case NegativityMethod::analytic_ground_state: return "analytic_ground_state";
        case NegativityMethod::pt_oracle: return "pt_oracle";
    }
    return "unknown";
}

Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd& op, Eigen::Index dim_a,
                                   Eigen::Index dim_b) {
    if (op.rows() != op.cols() || op.rows() != dim_a * dim_b)
        throw std::invalid_argument("partial_transpose: dimension mismatch");
    Eigen::MatrixXcd out(op.rows(), op.cols());
    for (Eigen::Index ia = 0; ia < dim_a; ++ia)
        for (Eigen::Index jb = 0; jb < dim_b; ++jb)
            for (Eigen::Index ka = 0; ka < dim_a; ++ka)
                for (Eigen::Index lb = 0; lb < dim_b; ++lb)
                    out(ia * dim_b + jb, ka * dim_b + lb) =
                        op(ia * dim_b + lb, ka * dim_b + jb);
    return out;
}

PtSpectrum negativity_of_density(const Eigen::MatrixXcd& rho, Eigen::Index dim_a,
                                 Eigen::Index dim_b) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("negativity_of_density: matrix not Hermitian");
    const Eigen::MatrixXcd pt = partial_transpose(rho, dim_a, dim_b);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(pt, Eigen::EigenvaluesOnly);
    PtSpectrum result;
    result.min_eigenvalue = solver.eigenvalues()(0);
    for (double ev : solver.eigenvalues()) {
        if (ev < 0.0) result.negativity -= ev;
        if (ev < -kNegativeEigenvalueTol) ++result.negative_count;
    }
    return result;
}

Eigen::MatrixXd lowdin_sqrt(const Eigen::MatrixXd& gram, double min_eigenvalue) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
    const double min_eig = solver.eigenvalues()(0);
    if (min_eig < min_eigenvalue)
        throw ConditioningError(
            "lowdin_sqrt: Gram matrix numerically singular (min eigenvalue " +
                std::to_string(min_eig) + ")",
            min_eig);
    return solver.eigenvectors() *
           solver.eigenvalues().cwiseSqrt().asDiagonal() *
           solver.eigenvectors().transpose();
}

ChiVector make_chi(std::span<const double> occupations, const GramSet& grams) {
    const Eigen::Index m = grams.p_a.size();
    if (static_cast<Eigen::Index>(occupations.size()) != m)
        throw std::invalid_argument("make_chi: occupation/Gram size mismatch");
    ChiVector chi;
    chi.c.resize(m);
    double total = 0.0;
    for (double n : occupations) {
        if (n < 0.0) throw std::invalid_argument("make_chi: negative occupation");
        total += n;
    }
    if (total <= 0.0) throw std::invalid_argument("make_chi: empty occupation profile");
    for (Eigen::Index k = 0; k < m; ++k) chi.c(k) = occupations[k] / total;
    chi.d = chi.c.cwiseProduct((grams.p_a.cwiseProduct(grams.p_b)).cwiseSqrt());
    chi.q = chi.c.dot(grams.p_c);
    return chi;
}

namespace {

double quadratic_form(const Eigen::VectorXd& v, const GramSet& grams) {
    if (v.size() != grams.gram_a.rows())
        throw std::invalid_argument("negativity: chi/Gram dimension mismatch");
    return v.dot(grams.gram_a.cwiseProduct(grams.gram_b) * v);
}

void check_range(double value) {
    if (!(value >= 0.0 && value <= 0.5 + 1e-9))
        throw std::logic_error("negativity out of [0, 1/2]: " + std::to_string(value));
}

}  // namespace

double chi_norm_squared(const ChiVector& chi, const GramSet& grams) {
    double v = quadratic_form(chi.c, grams);
    if (v < -1e-10 || v > 1.0 + 1e-10)
        throw std::logic_error("chi_norm_squared out of [0, 1]: " + std::to_string(v));
    return std::clamp(v, 0.0, 1.0);
}

NegativityReport negativity_adjacent(const ChiVector& chi, const GramSet& grams) {
    if (grams.p_c.cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("negativity_adjacent: partition is gapped");
    NegativityReport report;
    report.value = 0.5 * std::sqrt(chi_norm_squared(chi, grams));
    report.method = NegativityMethod::analytic_adjacent;
    check_range(report.value);
    return report;
}

NegativityReport negativity_gapped(const ChiVector& chi, const GramSet& grams) {
    const double delta_sq = std::max(quadratic_form(chi.d, grams), 0.0);
    NegativityReport report;
    report.value = 0.5 * (std::sqrt(4.0 * delta_sq + chi.q * chi.q) - chi.q);
    report.method = NegativityMethod::analytic_gapped;
    check_range(report.value);
    return report;
}

NegativityReport negativity_ground_state_gapped(double p0a, double p0b, double p0c) {
    if (std::abs(p0a + p0b + p0c - 1.0) > 1e-9 || p0a < 0.0 || p0b < 0.0 || p0c < 0.0)
        throw std::invalid_argument(
            "negativity_ground_state_gapped: probabilities must be >= 0 and sum to 1");
    NegativityReport report;
    report.method = NegativityMethod::analytic_ground_state;
    if (p0c <= 0.0) {
        report.value = std::sqrt(p0a * p0b);  // continuous extension of the formula
    } else {
        report.value = 0.5 * p0c * (std::sqrt(1.0 + 4.0 * p0a * p0b / (p0c * p0c)) - 1.0);
    }
    check_range(report.value);
    return report;
}

// rho_1 is a sum of product operators over H_A (x) H_B, with H_M spanned by
// the local vacuum and the Loewdin-orthonormalized restrictions:
//
//   rho_1 = sum_k c_k (sqrt(pA_k) |A_k Om> + sqrt(pB_k) |Om B_k>)(h.c.)
//         + q |Om Om><Om Om|.
//
// With real coordinates the transposition on the B factor leaves the
// diagonal-in-B terms alone and maps each coherence
// |A_k Om><Om B_k| -> |A_k B_k><Om Om|, so rho_1^{T_B} acts only on
// span{|Om Om>, |A_k Om>, |Om B_k>, |A_k B_k>}. The matrix below is the
// restriction of rho_1^{T_B} to that span in an orthonormal basis; the
// orthogonal complement of the span contributes zero eigenvalues only.
NegativityReport pt_oracle(std::span<const double> occupations,
                           const std::vector<Mode>& modes,
                           const PartitionSpec& partition, const GramSet& grams) {
    const Eigen::Index m = grams.p_a.size();
    if (static_cast<Eigen::Index>(modes.size()) != m)
        throw std::invalid_argument("pt_oracle: mode/Gram size mismatch");
    if (m > kPtOracleMaxModes)
        throw std::invalid_argument("pt_oracle: mode count exceeds dense regime");
    partition.validate();

    const ChiVector chi = make_chi(occupations, grams);
    const Eigen::MatrixXd sqrt_a = lowdin_sqrt(grams.gram_a);
    const Eigen::MatrixXd sqrt_b = lowdin_sqrt(grams.gram_b);
    // Pair-sector Gram <A_k B_k|A_l B_l> is the Hadamard product; by the
    // Schur product theorem its smallest eigenvalue is no smaller than
    // lambda_min(gram_a), so conditioning is never worse than the factors.
    const Eigen::MatrixXd sqrt_pair = lowdin_sqrt(grams.gram_a.cwiseProduct(grams.gram_b));

    const Eigen::Index dim = 3 * m + 1;
    Eigen::MatrixXd pt = Eigen::MatrixXd::Zero(dim, dim);
    pt(0, 0) = chi.q;
    pt.block(1, 1, m, m) =
        sqrt_a * chi.c.cwiseProduct(grams.p_a).asDiagonal() * sqrt_a;
    pt.block(m + 1, m + 1, m, m) =
        sqrt_b * chi.c.cwiseProduct(grams.p_b).asDiagonal() * sqrt_b;
    const Eigen::VectorXd coupling = sqrt_pair * chi.d;
    pt.block(2 * m + 1, 0, m, 1) = coupling;
    pt.block(0, 2 * m + 1, 1, m) = coupling.transpose();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(pt, Eigen::EigenvaluesOnly);
    NegativityReport report;
    report.method = NegativityMethod::pt_oracle;
    report.negative_count = 0;
    for (double ev : solver.eigenvalues()) {
        if (ev < 0.0) report.value -= ev;
        if (ev < -kNegativeEigenvalueTol) ++report.negative_count;
    }
    report.partition_a = partition.a;
    report.partition_b = partition.b;
    int cutoff = 1;
    for (const Mode& mode : modes)
        for (int i = 0; i < mode.dim; ++i) cutoff = std::max(cutoff, mode.n[i]);
    report.mode_cutoff = cutoff;
    check_range(report.value);
    return report;
}

}  // namespace odlro_lab
