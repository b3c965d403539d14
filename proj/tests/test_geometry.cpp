#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "odlro_lab/geometry.hpp"
#include "odlro_lab/validation.hpp"

using namespace odlro_lab;

namespace {
constexpr double kPi = std::numbers::pi;
const double kHalfBoxOverlap = 8.0 / (3.0 * kPi);  // <A_1|A_2> at a = 1/2
}

TEST_CASE("partition validation") {
    CHECK_NOTHROW((PartitionSpec{0.5, 0.5, 0}).validate());
    CHECK_NOTHROW((PartitionSpec{0.25, 0.75, 0}).validate());
    CHECK_THROWS_AS((PartitionSpec{0.0, 0.5, 0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((PartitionSpec{0.6, 0.4, 0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((PartitionSpec{0.4, 1.0, 0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((PartitionSpec{0.4, 0.6, 3}).validate(), std::invalid_argument);
}

TEST_CASE("wavefunction values at nodes and antinodes") {
    Mode n1({1, 1, 1}, 1);
    Mode n2({2, 1, 1}, 1);
    Mode ground3({1, 1, 1}, 3);
    CHECK(mode_wavefunction_value(n1, {0.5, 0, 0}) ==
          doctest::Approx(std::numbers::sqrt2).epsilon(1e-15));
    CHECK(std::abs(mode_wavefunction_value(n2, {0.5, 0, 0})) < 1e-15);
    CHECK(mode_wavefunction_value(ground3, {0.5, 0.5, 0.5}) ==
          doctest::Approx(2.0 * std::numbers::sqrt2).epsilon(1e-15));
}

TEST_CASE("partition probabilities from the closed-form primitive") {
    const PartitionSpec quarter{0.25, 0.75, 0};
    Mode n1({1, 1, 1}, 1);
    Mode n2({2, 1, 1}, 1);

    const RegionProbabilities p1 = partition_probabilities(n1, quarter);
    CHECK(p1.a == doctest::Approx(0.25 - 1.0 / (2.0 * kPi)).epsilon(1e-14));
    CHECK(p1.a == doctest::Approx(0.090845056908104654).epsilon(1e-13));
    CHECK(p1.b == doctest::Approx(p1.a).epsilon(1e-13));
    CHECK(p1.c == doctest::Approx(0.81830988618379075).epsilon(1e-13));

    const RegionProbabilities p2 = partition_probabilities(n2, quarter);
    CHECK(p2.a == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(p2.b == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(p2.c == doctest::Approx(0.5).epsilon(1e-14));

    // half-box symmetry of sin^2 for any mode
    const PartitionSpec half{0.5, 0.5, 0};
    for (int n = 1; n <= 8; ++n) {
        const RegionProbabilities p = partition_probabilities(Mode({n, 1, 1}, 1), half);
        CHECK(p.a == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(p.b == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(std::abs(p.c) < 1e-15);
    }
}

TEST_CASE("normalized overlaps: fixtures and quadrature agreement") {
    const PartitionSpec half{0.5, 0.5, 0};
    Mode n1({1, 1, 1}, 1);
    Mode n2({2, 1, 1}, 1);
    Mode n3({3, 1, 1}, 1);

    CHECK(overlap(n1, n1, Region::A, half) == 1.0);
    CHECK(overlap(n3, n3, Region::B, half) == 1.0);
    CHECK(overlap(n1, n2, Region::A, half) ==
          doctest::Approx(kHalfBoxOverlap).epsilon(1e-14));
    CHECK(std::abs(overlap(n1, n3, Region::A, half)) < 1e-14);

    // adaptive Simpson oracle on the same integrals
    const auto integrand = [](int n, int m) {
        return [n, m](double x) { return 2.0 * std::sin(n * kPi * x) * std::sin(m * kPi * x); };
    };
    CHECK(adaptive_simpson(integrand(1, 2), 0.0, 0.5, 1e-13) / 0.5 ==
          doctest::Approx(kHalfBoxOverlap).epsilon(1e-11));
    CHECK(std::abs(adaptive_simpson(integrand(1, 3), 0.0, 0.5, 1e-13)) < 1e-12);

    // cross-axis quantum numbers give Kronecker deltas in 3D
    Mode a({1, 1, 1}, 3);
    Mode b({2, 1, 1}, 3);
    Mode c({1, 2, 1}, 3);
    CHECK(overlap(a, b, Region::A, half) ==
          doctest::Approx(kHalfBoxOverlap).epsilon(1e-14));
    CHECK(overlap(a, c, Region::A, half) == 0.0);

    CHECK_THROWS_AS(overlap(a, Mode({1, 1, 1}, 1), Region::A, half), std::invalid_argument);
}

TEST_CASE("gram matrices: fixtures, mirror identity, PSD") {
    SUBCASE("single mode") {
        const GramSet g = gram_matrices(box_modes(1, 1), PartitionSpec{0.5, 0.5, 0});
        CHECK(g.gram_a(0, 0) == 1.0);
        CHECK(g.gram_b(0, 0) == 1.0);
    }
    SUBCASE("two modes, half box") {
        const GramSet g = gram_matrices(box_modes(1, 2), PartitionSpec{0.5, 0.5, 0});
        CHECK(g.gram_a(0, 1) == doctest::Approx(kHalfBoxOverlap).epsilon(1e-14));
        CHECK(g.gram_b(0, 1) == doctest::Approx(-kHalfBoxOverlap).epsilon(1e-14));
    }
    SUBCASE("gapped partition stays PSD with unit diagonal") {
        const GramSet g = gram_matrices(box_modes(1, 4), PartitionSpec{0.25, 0.75, 0});
        const CheckResult psd = check_gram_set(g);
        CHECK_MESSAGE(psd.passed, psd.detail);
    }
    SUBCASE("3D half box") {
        const GramSet g = gram_matrices(box_modes(3, 2), PartitionSpec{0.5, 0.5, 0});
        const CheckResult psd = check_gram_set(g);
        CHECK_MESSAGE(psd.passed, psd.detail);
    }
}

TEST_CASE("random partitions: probability sums and quadrature oracle") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> unit(0.1, 0.9);
    const auto modes = box_modes(1, 6);
    for (int trial = 0; trial < 8; ++trial) {
        double a = unit(rng), b = unit(rng);
        if (a > b) std::swap(a, b);
        const PartitionSpec partition{a, b, 0};
        for (const Mode& mode : modes) {
            const RegionProbabilities p = partition_probabilities(mode, partition);
            CHECK(std::abs(p.a + p.b + p.c - 1.0) < 1e-12);
            CHECK(p.a > 0.0);
            CHECK(p.b > 0.0);
        }
        for (std::size_t k = 0; k < modes.size(); ++k)
            for (std::size_t l = k; l < modes.size(); ++l) {
                const int n = modes[k].n[0];
                const int m = modes[l].n[0];
                const RegionProbabilities pk = partition_probabilities(modes[k], partition);
                const RegionProbabilities pl = partition_probabilities(modes[l], partition);
                const double quad =
                    adaptive_simpson(
                        [n, m](double x) {
                            return 2.0 * std::sin(n * kPi * x) * std::sin(m * kPi * x);
                        },
                        0.0, a, 1e-13) /
                    std::sqrt(pk.a * pl.a);
                CHECK(std::abs(overlap(modes[k], modes[l], Region::A, partition) - quad) <
                      1e-10);
            }
    }
}

TEST_CASE("check_gram_set flags an injected PSD violation") {
    GramSet g = gram_matrices(box_modes(1, 4), PartitionSpec{0.5, 0.5, 0});
    g.gram_a(0, 1) = 1.2;  // breaks both the entry range and positive semidefiniteness
    g.gram_a(1, 0) = 1.2;
    const CheckResult broken = check_gram_set(g);
    CHECK_FALSE(broken.passed);
    CHECK(broken.detail.find("min eigenvalue") != std::string::npos);
}
