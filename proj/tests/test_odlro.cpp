#include <doctest.h>

#include <cmath>
#include <numbers>

#include "odlro_lab/bose_gas.hpp"
#include "odlro_lab/odlro.hpp"

using namespace odlro_lab;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("rho1 in position representation") {
    const auto modes = box_modes(1, 8);
    std::vector<double> ground(modes.size(), 0.0);
    ground[0] = 1.0;

    SUBCASE("T = 0 ground-mode product") {
        CHECK(rho1_position(ground, modes, {0.25, 0, 0}, {0.75, 0, 0}) ==
              doctest::Approx(1.0).epsilon(1e-14));
        CHECK(rho1_position(ground, modes, {0.5, 0, 0}, {0.5, 0, 0}) ==
              doctest::Approx(2.0).epsilon(1e-14));
    }
    SUBCASE("unit trace by quadrature") {
        std::vector<double> occ(modes.size());
        for (std::size_t k = 0; k < occ.size(); ++k) occ[k] = 1.0 / double(k + 2);
        const int n = 4000;
        double trace = 0.0;
        for (int i = 0; i < n; ++i) {
            const double x = (i + 0.5) / n;
            trace += rho1_position(occ, modes, {x, 0, 0}, {x, 0, 0}) / n;
        }
        CHECK(trace == doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("uniform occupations dephase at large separation") {
        const auto many = box_modes(1, 32);
        const std::vector<double> uniform(many.size(), 1.0);
        const double value = rho1_position(uniform, many, {0.25, 0, 0}, {0.75, 0, 0});
        CHECK(std::abs(value) < 1e-12);   // regression fixture
        CHECK(std::abs(value) < 1e-3);    // << T = 0 value of 1.0
    }
    SUBCASE("empty profile rejected") {
        const std::vector<double> zeros(modes.size(), 0.0);
        CHECK_THROWS_AS(rho1_position(zeros, modes, {0.25, 0, 0}, {0.75, 0, 0}),
                        std::invalid_argument);
        CHECK_THROWS_AS(rho1_position(std::vector<double>{1.0}, modes, {0.25, 0, 0},
                                      {0.75, 0, 0}),
                        std::invalid_argument);
    }
}

TEST_CASE("antipodal scan path") {
    const auto path = antipodal_path(1, 0, 5, 0.8);
    REQUIRE(path.size() == 5);
    CHECK(path[0].first[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(path[4].first[0] == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(path[4].second[0] == doctest::Approx(0.9).epsilon(1e-14));

    CHECK_THROWS_AS(antipodal_path(1, 1, 5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(antipodal_path(1, 0, 0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(antipodal_path(1, 0, 5, 1.2), std::invalid_argument);
}

TEST_CASE("offdiagonal scan over the default path") {
    const auto modes = box_modes(1, 4);
    std::vector<double> ground(modes.size(), 0.0);
    ground[0] = 1.0;
    const auto path = antipodal_path(1, 0, 9, 0.9);
    const OffDiagonalScan scan = offdiagonal_scan(ground, modes, path);
    REQUIRE(scan.points.size() == 9);
    for (const ScanPoint& point : scan.points) {
        const double expected = 2.0 * std::sin(kPi * point.x) * std::sin(kPi * point.x_prime);
        CHECK(point.value == doctest::Approx(expected).epsilon(1e-13));
    }
    // nonvanishing at maximal separation for the condensate
    CHECK(scan.points.back().value > 0.09);
    CHECK(scan.points.front().value == doctest::Approx(2.0).epsilon(1e-13));

    CHECK_THROWS_AS(offdiagonal_scan(ground, modes, {}), std::invalid_argument);
}

TEST_CASE("odlro detector") {
    SUBCASE("pure condensate") {
        const std::vector<double> spectrum{5.0, 0.0, 0.0};
        const OdlroReport report = odlro_detect(spectrum, 0.1);
        CHECK(report.alpha == 1.0);
        CHECK(report.flag);
        REQUIRE(report.spectrum_head.size() == 3);
        CHECK(report.spectrum_head[0] == 1.0);
    }
    SUBCASE("uniform 16-mode spectrum") {
        const std::vector<double> spectrum(16, 1.0);
        const OdlroReport report = odlro_detect(spectrum, 0.1);
        CHECK(report.alpha == doctest::Approx(1.0 / 16.0).epsilon(1e-15));
        CHECK_FALSE(report.flag);
    }
    SUBCASE("alpha is bit-identical to the occupation ratio") {
        const auto modes = box_modes(3, 4);
        const auto state = solve_thermal_state(modes, 500.0, 300.0);
        const OdlroReport report = odlro_detect(state.occupations, 0.1);
        double max_occ = 0.0, total = 0.0;
        for (double n : state.occupations) {
            max_occ = std::max(max_occ, n);
            total += n;
        }
        CHECK(report.alpha == max_occ / total);
    }
    SUBCASE("rejects spectra with negative weight") {
        const std::vector<double> bad{1.0, -1e-6};
        CHECK_THROWS_AS(odlro_detect(bad, 0.1), std::invalid_argument);
        CHECK_THROWS_AS(odlro_detect(std::vector<double>{}, 0.1), std::invalid_argument);
        CHECK_THROWS_AS(odlro_detect(std::vector<double>{0.0, 0.0}, 0.1),
                        std::invalid_argument);
    }
    SUBCASE("tolerates eigenvalue noise above -1e-10") {
        const std::vector<double> noisy{1.0, -5e-11};
        CHECK_NOTHROW(odlro_detect(noisy, 0.1));
    }
}

TEST_CASE("kernel positivity on sampled points") {
    const auto modes = box_modes(1, 8);
    const auto state = solve_thermal_state(modes, 20.0, 30.0);
    for (double x = 0.1; x < 1.0; x += 0.17)
        for (double y = 0.05; y < 1.0; y += 0.23) {
            const double off = std::abs(
                rho1_position(state.occupations, modes, {x, 0, 0}, {y, 0, 0}));
            const double diag =
                std::sqrt(rho1_position(state.occupations, modes, {x, 0, 0}, {x, 0, 0}) *
                          rho1_position(state.occupations, modes, {y, 0, 0}, {y, 0, 0}));
            CHECK(off <= diag + 1e-12);
        }
}
