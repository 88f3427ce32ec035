#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "circumnav/analysis.hpp"
#include "circumnav/rotation_schedule.hpp"

using namespace circumnav;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("smooth_step clamps and interpolates")
{
    CHECK(smooth_step(-1.0) == 0.0);
    CHECK(smooth_step(0.0) == 0.0);
    CHECK(smooth_step(0.5) == doctest::Approx(0.5));
    CHECK(smooth_step(1.0) == 1.0);
    CHECK(smooth_step(2.0) == 1.0);
}

TEST_CASE("smooth_step is nondecreasing with flat one-sided slopes")
{
    double prev = smooth_step(-0.5);
    for (int i = -50; i <= 150; ++i) {
        const double g = smooth_step(i / 100.0);
        CHECK(g >= prev);
        prev = g;
    }
    const double h = 1e-6;
    CHECK(std::abs(smooth_step(h) - smooth_step(0.0)) / h < 1e-4);
    CHECK(std::abs(smooth_step(1.0) - smooth_step(1.0 - h)) / h < 1e-4);
}

TEST_CASE("planar schedule is the constant a*E")
{
    const auto s = RotationSchedule::planar(1.0);
    Eigen::Matrix2d expected;
    expected << 0, 1, -1, 0;
    CHECK((s.eval(0.0) - expected).norm() == 0.0);
    CHECK((s.eval(17.3) - expected).norm() == 0.0);

    const auto s2 = RotationSchedule::planar(2.0);
    CHECK((s2.eval(3.0) - 2.0 * expected).norm() == 0.0);
    CHECK(s2.period() == doctest::Approx(kPi));

    CHECK_THROWS_AS(RotationSchedule::planar(0.0), ZeroRateError);
}

TEST_CASE("spatial schedule period and rho bound")
{
    const auto s = RotationSchedule::spatial(1.0, 1.0, 0.1);
    CHECK(s.period() == doctest::Approx(0.4 + 2.0 * kPi));
    CHECK(s.breakpoints()[0] == doctest::Approx(0.1));
    CHECK(s.breakpoints()[1] == doctest::Approx(0.1 + kPi));

    CHECK_THROWS_AS(RotationSchedule::spatial(1.0, 1.0, 0.3), RhoOutOfRangeError);
    CHECK_THROWS_AS(RotationSchedule::spatial(1.0, 1.0, 0.125), RhoOutOfRangeError);
    CHECK_THROWS_AS(RotationSchedule::spatial(1.0, 1.0, 0.0), RhoOutOfRangeError);
    CHECK_THROWS_AS(RotationSchedule::spatial(0.0, 1.0, 0.1), ZeroRateError);
    CHECK_THROWS_AS(RotationSchedule::spatial(1.0, 0.0, 0.1), ZeroRateError);
}

TEST_CASE("spatial schedule hits the pure-B segment exactly")
{
    const auto s = RotationSchedule::spatial(1.0, 1.0, 0.1);
    const double t = s.breakpoints()[0] + 0.5 * kPi;  // interior of segment 2
    Eigen::Matrix3d b;
    b << 0, 0, 0, 0, 0, 1, 0, -1, 0;
    CHECK((s.eval(t) - b).norm() == 0.0);
}

TEST_CASE("spatial schedule vanishes at segment ends and repeats")
{
    const auto s = RotationSchedule::spatial(1.0, 1.0, 0.1);
    CHECK(s.eval(0.0).norm() == 0.0);
    CHECK(s.eval(s.period()).norm() == doctest::Approx(0.0).epsilon(1e-12));

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uni(0.0, s.period());
    for (int i = 0; i < 200; ++i) {
        const double t = uni(rng);
        CHECK((s.eval(t + s.period()) - s.eval(t)).norm() < 1e-12);
        CHECK((s.eval(t + 3.0 * s.period()) - s.eval(t)).norm() < 1e-12);
    }
}

TEST_CASE("every evaluation is exactly skew-symmetric")
{
    std::mt19937_64 rng(11);
    std::normal_distribution<double> gauss;
    const auto check_schedule = [&](const RotationSchedule& s) {
        std::uniform_real_distribution<double> uni(0.0, 3.0 * s.period());
        for (int i = 0; i < 500; ++i) {
            const double t = uni(rng);
            const Eigen::MatrixXd a = s.eval(t);
            CHECK((a + a.transpose()).norm() == 0.0);
            Eigen::VectorXd nu(s.dimension());
            for (int k = 0; k < s.dimension(); ++k) nu[k] = gauss(rng);
            nu.normalize();
            CHECK(std::abs(nu.dot(a * nu)) < 1e-15);
        }
    };
    check_schedule(RotationSchedule::planar(1.5));
    check_schedule(RotationSchedule::spatial(1.0, 2.0, 0.02));
    check_schedule(RotationSchedule::constant_spatial(Eigen::Vector3d(1, -2, 0.5)));
}

TEST_CASE("spatial schedule is continuous across all branch boundaries")
{
    const auto s = RotationSchedule::spatial(1.0, 1.0, 0.0625);
    const double h = 1e-7;
    for (double bp : s.breakpoints()) {
        const double jump = (s.eval(bp + h) - s.eval(bp - h)).norm();
        CHECK(jump < 1e-5);  // ~ |A'| * 2h
    }
    // No jumps anywhere on a dense grid: difference quotient stays bounded.
    double max_rate = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        const double t = s.period() * i / n;
        max_rate = std::max(max_rate, (s.eval(t + h) - s.eval(t)).norm() / h);
    }
    // sup |dA/dt| = |B| * sup |g'| / rho = sqrt(2) * (pi/2) / rho
    CHECK(max_rate < 1.1 * std::sqrt(2.0) * (kPi / 2.0) / 0.0625);
}

TEST_CASE("planar transition matrix matches the rotation flow")
{
    // Ground truth is the ODE Phidot = aE Phi itself: e^{aEt} = cos(at) I + sin(at) E,
    // i.e. [[cos, sin], [-sin, cos]] with E = [[0,1],[-1,0]].
    const double a = 0.7;
    const auto s = RotationSchedule::planar(a);
    for (double tau : {0.3, 1.0, 4.0}) {
        const Eigen::MatrixXd phi = s.transition_matrix(0.0, tau, 1e-4);
        Eigen::Matrix2d expected;
        expected << std::cos(a * tau), std::sin(a * tau),
                    -std::sin(a * tau), std::cos(a * tau);
        CHECK((phi - expected).norm() < 1e-10);
    }
}

TEST_CASE("transition matrix at zero span is the identity")
{
    const auto s = RotationSchedule::spatial(1.0, 1.0, 0.0625);
    CHECK((s.transition_matrix(2.0, 2.0, 1e-3) - Eigen::Matrix3d::Identity()).norm() == 0.0);
}

TEST_CASE("transition matrices are orthogonal")
{
    const auto planar = RotationSchedule::planar(1.0);
    CHECK(orthogonality_defect(planar, 0.0, planar.period(), 1e-4) < 1e-8);

    const auto spatial = RotationSchedule::spatial(1.0, 1.0, 0.1);
    CHECK(orthogonality_defect(spatial, 0.0, spatial.period(), 1e-4) < 1e-8);
    CHECK(orthogonality_defect(spatial, 1.7, 5.2, 1e-4) < 1e-8);
}

TEST_CASE("the schedule flow preserves norms")
{
    const auto s = RotationSchedule::spatial(0.8, 1.3, 0.02);
    std::mt19937_64 rng(3);
    std::normal_distribution<double> gauss;
    for (int i = 0; i < 10; ++i) {
        Eigen::Vector3d y0;
        for (int k = 0; k < 3; ++k) y0[k] = gauss(rng);
        const Eigen::VectorXd y1 = s.transition_matrix(0.0, 2.0 * s.period(), 1e-4) * y0;
        CHECK(y1.norm() == doctest::Approx(y0.norm()).epsilon(1e-10));
    }
}
