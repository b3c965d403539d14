#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "odlro_lab/bose_gas.hpp"
#include "odlro_lab/negativity.hpp"
#include "odlro_lab/validation.hpp"

using namespace odlro_lab;

namespace {

const double kHalfBoxOverlap = 8.0 / (3.0 * std::numbers::pi);

// Literal reference construction on the full (M+1)^2 product space: the
// Loewdin vectors give explicit coordinates for |A_k>, |B_k>, the state is
// assembled with Kronecker indexing and handed to the generic
// partial-transpose eigensolver. Exponential in memory, test-only.
PtSpectrum full_space_pt(std::span<const double> occupations, const GramSet& grams) {
    const Eigen::Index m = grams.p_a.size();
    const Eigen::Index d = m + 1;  // vacuum + one-particle sector per side
    const Eigen::MatrixXd sqrt_a = lowdin_sqrt(grams.gram_a);
    const Eigen::MatrixXd sqrt_b = lowdin_sqrt(grams.gram_b);

    double total = 0.0;
    for (double n : occupations) total += n;

    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d * d, d * d);
    double vacuum_weight = 0.0;
    for (Eigen::Index k = 0; k < m; ++k) {
        Eigen::VectorXd a_k = Eigen::VectorXd::Zero(d);
        Eigen::VectorXd b_k = Eigen::VectorXd::Zero(d);
        a_k.tail(m) = sqrt_a.col(k);
        b_k.tail(m) = sqrt_b.col(k);
        Eigen::VectorXd v = Eigen::VectorXd::Zero(d * d);
        for (Eigen::Index i = 0; i < d; ++i) {
            v(i * d + 0) += std::sqrt(grams.p_a(k)) * a_k(i);
            v(0 * d + i) += std::sqrt(grams.p_b(k)) * b_k(i);
        }
        const double c_k = occupations[k] / total;
        rho += c_k * (v * v.transpose()).cast<std::complex<double>>();
        vacuum_weight += c_k * grams.p_c(k);
    }
    rho(0, 0) += vacuum_weight;
    return negativity_of_density(rho, d, d);
}

}  // namespace

TEST_CASE("partial transpose of a generic 2x2 (x) 2x2 operator") {
    Eigen::MatrixXcd op(4, 4);
    for (int i = 0; i < 16; ++i) op(i / 4, i % 4) = std::complex<double>(i, -i);
    const Eigen::MatrixXcd pt = partial_transpose(op, 2, 2);
    // (ia jb),(ka lb) -> (ia lb),(ka jb)
    CHECK(pt(0, 1) == op(1, 0));
    CHECK(pt(0, 3) == op(1, 2));
    CHECK(pt(2, 1) == op(3, 0));
    CHECK(pt(1, 1) == op(1, 1));
    CHECK((partial_transpose(pt, 2, 2) - op).cwiseAbs().maxCoeff() == 0.0);
    CHECK_THROWS_AS(partial_transpose(op, 3, 2), std::invalid_argument);
}

TEST_CASE("generic negativity: product vs maximally entangled states") {
    Eigen::Vector4cd product = Eigen::Vector4cd::Unit(0);
    Eigen::Vector4cd bell = Eigen::Vector4cd::Zero();
    bell(0) = bell(3) = std::numbers::sqrt2 / 2.0;

    const PtSpectrum sep = negativity_of_density(product * product.adjoint(), 2, 2);
    CHECK(sep.negativity < 1e-14);
    CHECK(sep.negative_count == 0);

    const PtSpectrum ent = negativity_of_density(bell * bell.adjoint(), 2, 2);
    CHECK(ent.negativity == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(ent.negative_count == 1);

    Eigen::MatrixXcd not_hermitian = Eigen::MatrixXcd::Zero(4, 4);
    not_hermitian(0, 1) = 1.0;
    CHECK_THROWS_AS(negativity_of_density(not_hermitian, 2, 2), std::invalid_argument);
}

TEST_CASE("Loewdin square root") {
    const GramSet g = gram_matrices(box_modes(1, 4), PartitionSpec{0.5, 0.5, 0});
    const Eigen::MatrixXd root = lowdin_sqrt(g.gram_a);
    CHECK((root * root - g.gram_a).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((root - root.transpose()).cwiseAbs().maxCoeff() < 1e-13);

    CHECK((lowdin_sqrt(Eigen::MatrixXd::Identity(3, 3)) -
           Eigen::MatrixXd::Identity(3, 3))
              .cwiseAbs()
              .maxCoeff() < 1e-15);

    Eigen::MatrixXd singular = Eigen::MatrixXd::Ones(2, 2);
    CHECK_THROWS_AS(lowdin_sqrt(singular), ConditioningError);
    try {
        lowdin_sqrt(singular);
    } catch (const ConditioningError& err) {
        CHECK(err.min_eigenvalue < 1e-12);
    }
}

TEST_CASE("make_chi normalizes and validates") {
    const GramSet g = gram_matrices(box_modes(1, 2), PartitionSpec{0.25, 0.75, 0});
    const std::vector<double> occ{3.0, 1.0};
    const ChiVector chi = make_chi(occ, g);
    CHECK(chi.c.sum() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(chi.c(0) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(chi.d(0) == doctest::Approx(0.75 * std::sqrt(g.p_a(0) * g.p_b(0))).epsilon(1e-14));
    CHECK(chi.q == doctest::Approx(0.75 * g.p_c(0) + 0.25 * g.p_c(1)).epsilon(1e-14));

    CHECK_THROWS_AS(make_chi(std::vector<double>{1.0}, g), std::invalid_argument);
    CHECK_THROWS_AS(make_chi(std::vector<double>{1.0, -0.5}, g), std::invalid_argument);
}

TEST_CASE("chi norm: fixtures and range guard") {
    const GramSet half = gram_matrices(box_modes(1, 2), PartitionSpec{0.5, 0.5, 0});

    SUBCASE("single mode saturates") {
        const GramSet g = gram_matrices(box_modes(1, 1), PartitionSpec{0.5, 0.5, 0});
        const ChiVector chi = make_chi(std::vector<double>{7.0}, g);
        CHECK(chi_norm_squared(chi, g) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(negativity_adjacent(chi, g).value == doctest::Approx(0.5).epsilon(1e-15));
    }
    SUBCASE("(0.8, 0.2) fixture") {
        const ChiVector chi = make_chi(std::vector<double>{0.8, 0.2}, half);
        const double expected =
            0.8 * 0.8 + 0.2 * 0.2 - 2.0 * 0.8 * 0.2 * kHalfBoxOverlap * kHalfBoxOverlap;
        const double norm_sq = chi_norm_squared(chi, half);
        CHECK(norm_sq == doctest::Approx(expected).epsilon(1e-14));
        CHECK(norm_sq == doctest::Approx(0.44943801766721359).epsilon(1e-13));
        CHECK(negativity_adjacent(chi, half).value ==
              doctest::Approx(0.33520069274511261).epsilon(1e-13));
    }
    SUBCASE("identity Grams give Parseval value") {
        GramSet synthetic;
        const int m = 4;
        synthetic.p_a = Eigen::VectorXd::Constant(m, 0.5);
        synthetic.p_b = Eigen::VectorXd::Constant(m, 0.5);
        synthetic.p_c = Eigen::VectorXd::Zero(m);
        synthetic.gram_a = Eigen::MatrixXd::Identity(m, m);
        synthetic.gram_b = Eigen::MatrixXd::Identity(m, m);
        const ChiVector chi = make_chi(std::vector<double>(m, 1.0), synthetic);
        CHECK(chi_norm_squared(chi, synthetic) == doctest::Approx(0.25).epsilon(1e-14));
        CHECK(negativity_adjacent(chi, synthetic).value ==
              doctest::Approx(0.25).epsilon(1e-14));
    }
    SUBCASE("range guard trips on a corrupted Gram") {
        GramSet bad = half;
        bad.gram_a(0, 1) = bad.gram_a(1, 0) = 1.8;
        bad.gram_b(0, 1) = bad.gram_b(1, 0) = 1.8;
        const ChiVector chi = make_chi(std::vector<double>{0.5, 0.5}, bad);
        CHECK_THROWS_AS(chi_norm_squared(chi, bad), std::logic_error);
    }
    SUBCASE("adjacent form rejects gapped partitions") {
        const GramSet gapped = gram_matrices(box_modes(1, 2), PartitionSpec{0.25, 0.75, 0});
        const ChiVector chi = make_chi(std::vector<double>{1.0, 1.0}, gapped);
        CHECK_THROWS_AS(negativity_adjacent(chi, gapped), std::invalid_argument);
    }
}

TEST_CASE("gapped closed form: fixtures and reductions") {
    SUBCASE("reduces to the adjacent form at the half box") {
        const GramSet half = gram_matrices(box_modes(1, 4), PartitionSpec{0.5, 0.5, 0});
        const std::vector<double> occ{5.0, 2.0, 1.0, 0.5};
        const ChiVector chi = make_chi(occ, half);
        CHECK(negativity_gapped(chi, half).value ==
              doctest::Approx(negativity_adjacent(chi, half).value).epsilon(1e-13));
    }
    SUBCASE("ground mode only, quarter gap") {
        const GramSet g = gram_matrices(box_modes(1, 1), PartitionSpec{0.25, 0.75, 0});
        const ChiVector chi = make_chi(std::vector<double>{1.0}, g);
        CHECK(negativity_gapped(chi, g).value ==
              doctest::Approx(0.009963884713738899).epsilon(1e-10));
    }
    SUBCASE("no coherent amplitude, no negativity") {
        GramSet synthetic;
        synthetic.p_a = Eigen::VectorXd::Constant(1, 0.0);
        synthetic.p_b = Eigen::VectorXd::Constant(1, 0.5);
        synthetic.p_c = Eigen::VectorXd::Constant(1, 0.5);
        synthetic.gram_a = Eigen::MatrixXd::Identity(1, 1);
        synthetic.gram_b = Eigen::MatrixXd::Identity(1, 1);
        const ChiVector chi = make_chi(std::vector<double>{1.0}, synthetic);
        CHECK(negativity_gapped(chi, synthetic).value == 0.0);
    }
}

TEST_CASE("ground-state closed form") {
    const double pa = 0.25 - 1.0 / (2.0 * std::numbers::pi);
    const double pc = 1.0 - 2.0 * pa;
    CHECK(negativity_ground_state_gapped(pa, pa, pc).value ==
          doctest::Approx(0.009963884713738899).epsilon(1e-12));
    CHECK(negativity_ground_state_gapped(0.5, 0.5, 0.0).value ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK(negativity_ground_state_gapped(0.0, 0.6, 0.4).value == 0.0);
    CHECK_THROWS_AS(negativity_ground_state_gapped(0.5, 0.5, 0.5), std::invalid_argument);

    // consistency pair with the gapped formula, several partitions
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 6; ++trial) {
        const PartitionSpec partition = random_partition(rng, 4, true);
        const GramSet g = gram_matrices(box_modes(1, 4), partition);
        std::vector<double> ground{1.0, 0.0, 0.0, 0.0};
        const ChiVector chi = make_chi(ground, g);
        CHECK(std::abs(negativity_gapped(chi, g).value -
                       negativity_ground_state_gapped(g.p_a(0), g.p_b(0), g.p_c(0)).value) <
              1e-12);
    }
}

TEST_CASE("pt_oracle: fixtures") {
    SUBCASE("pure condensate, adjacent half box") {
        const auto modes = box_modes(1, 1);
        const GramSet g = gram_matrices(modes, PartitionSpec{0.5, 0.5, 0});
        const NegativityReport report =
            pt_oracle(std::vector<double>{42.0}, modes, PartitionSpec{0.5, 0.5, 0}, g);
        CHECK(report.value == doctest::Approx(0.5).epsilon(1e-13));
        CHECK(report.negative_count == 1);
    }
    SUBCASE("ground mode, quarter gap") {
        const auto modes = box_modes(1, 1);
        const PartitionSpec partition{0.25, 0.75, 0};
        const GramSet g = gram_matrices(modes, partition);
        const NegativityReport report =
            pt_oracle(std::vector<double>{1.0}, modes, partition, g);
        CHECK(report.value == doctest::Approx(0.009963884713738899).epsilon(1e-10));
        CHECK(report.negative_count == 1);
    }
    SUBCASE("mode-count cap") {
        const auto modes = box_modes(1, 2);
        const GramSet g = gram_matrices(modes, PartitionSpec{0.5, 0.5, 0});
        CHECK_THROWS_AS(pt_oracle(std::vector<double>{1.0}, modes,
                                  PartitionSpec{0.5, 0.5, 0}, g),
                        std::invalid_argument);  // size mismatch
    }
}

TEST_CASE("pt_oracle agrees with the literal full-product-space construction") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int cutoff : {1, 2, 4, 6}) {
        const auto modes = box_modes(1, cutoff);
        for (bool gapped : {false, true}) {
            const PartitionSpec partition = random_partition(rng, cutoff, gapped);
            const GramSet grams = gram_matrices(modes, partition);
            std::vector<double> occ(modes.size());
            for (double& v : occ) v = 0.05 + unit(rng);
            const NegativityReport sector = pt_oracle(occ, modes, partition, grams);
            const PtSpectrum full = full_space_pt(occ, grams);
            CHECK(std::abs(sector.value - full.negativity) < 1e-12);
            CHECK(sector.negative_count == full.negative_count);
        }
    }
}

TEST_CASE("pt_oracle matches the closed forms on thermal profiles") {
    std::mt19937_64 rng(7);
    const auto modes = box_modes(1, 8);
    const auto solver_modes = box_modes(1, 256);
    for (double t : {1.0, 10.0, 60.0}) {
        const double mu = solve_chemical_potential(solver_modes, 50.0, t);
        const std::vector<double> occ = occupations(modes, mu, t);

        const PartitionSpec half{0.5, 0.5, 0};
        const GramSet grams = gram_matrices(modes, half);
        const ChiVector chi = make_chi(occ, grams);
        const NegativityReport oracle = pt_oracle(occ, modes, half, grams);
        CHECK(std::abs(oracle.value - negativity_adjacent(chi, grams).value) < 1e-9);
        CHECK(oracle.negative_count == 1);

        const PartitionSpec gapped_partition = random_partition(rng, 8, true);
        const GramSet gapped_grams = gram_matrices(modes, gapped_partition);
        const ChiVector gapped_chi = make_chi(occ, gapped_grams);
        const NegativityReport gapped_oracle =
            pt_oracle(occ, modes, gapped_partition, gapped_grams);
        CHECK(std::abs(gapped_oracle.value -
                       negativity_gapped(gapped_chi, gapped_grams).value) < 1e-9);
    }
}
