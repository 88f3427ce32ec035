#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "circumnav/analysis.hpp"

using namespace circumnav;

namespace {

constexpr double kPi = 3.14159265358979323846;

SystemState on_invariant_set(const ScenarioConfig& cfg, const Eigen::VectorXd& x)
{
    SystemState s;
    s.t = 0.0;
    s.y = x;
    s.y[0] += cfg.d;
    s.x_hat = x;
    s.z2 = 0.0;
    s.z3 = Eigen::VectorXd::Zero(x.size());
    s.z1 = x.squaredNorm() / (2.0 * cfg.alpha);
    return s;
}

}  // namespace

TEST_CASE("Lyapunov function vanishes on the invariant set")
{
    const ScenarioConfig cfg = baseline_config();
    const Eigen::Vector2d x(0.5, 3.0);
    const SystemState s = on_invariant_set(cfg, x);
    const double d_meas = (s.y - x).norm();
    CHECK(std::abs(lyapunov(s, d_meas, x, cfg)) < 1e-12);
}

TEST_CASE("Lyapunov function isolates the estimate-error term")
{
    ScenarioConfig cfg = baseline_config();
    cfg.gamma = 10.0;
    const Eigen::Vector2d x(0.5, 3.0);
    SystemState s;
    s.x_hat = x + Eigen::Vector2d(1.0, 0.0);
    s.y = s.x_hat + Eigen::Vector2d(cfg.d, 0.0);  // Dhat = d exactly
    s.z2 = 0.0;
    s.z3 = Eigen::Vector2d::Zero();
    const double d_meas = (s.y - x).norm();
    // z1 chosen so the consistency residual p vanishes.
    s.z1 = (d_meas * d_meas / 2.0 - s.y.squaredNorm() / 2.0 + s.y.dot(x)) / cfg.alpha;
    // Only |xtilde|^2 / (2 gamma) = 1/20 remains.
    CHECK(lyapunov(s, d_meas, x, cfg) == doctest::Approx(0.05).epsilon(1e-12));
}

TEST_CASE("decay fit recovers an exact exponential")
{
    std::vector<double> t, v;
    for (int i = 0; i <= 1000; ++i) {
        t.push_back(0.01 * i);
        v.push_back(3.0 * std::exp(-2.0 * 0.01 * i));
    }
    const DecayFit fit = fit_decay_rate(t, v);
    CHECK(fit.rate == doctest::Approx(-2.0).epsilon(1e-10));
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("decay fit of a constant has zero rate")
{
    const std::vector<double> t{0.0, 1.0, 2.0, 3.0};
    const std::vector<double> v{5.0, 5.0, 5.0, 5.0};
    CHECK(fit_decay_rate(t, v).rate == doctest::Approx(0.0));
}

TEST_CASE("decay fit needs at least three points")
{
    CHECK_THROWS_AS(fit_decay_rate({0.0, 1.0}, {1.0, 0.5}), InsufficientDataError);
}

TEST_CASE("decay fit window skips the peak and cuts at the floor")
{
    // Rise to a peak at i=100, then decay through the relative floor.
    std::vector<double> v;
    for (int i = 0; i < 100; ++i) v.push_back(static_cast<double>(i));
    for (int i = 0; i <= 3000; ++i) v.push_back(100.0 * std::exp(-0.01 * i));
    const auto [first, last] = decay_fit_range(v, 0.1, 1e-9);
    CHECK(first > 100);                  // past the peak plus the skip fraction
    CHECK(last < v.size());              // floor reached before the end
    CHECK(v[last - 1] >= 1e-9 * 100.0);  // everything kept is above the floor
}

TEST_CASE("Gram integral of a circular velocity is isotropic")
{
    // ydot*(t) = 2[-sin t, cos t]: the integral over one period is 4 pi I.
    const double dt = 1e-3;
    std::vector<Eigen::VectorXd> w;
    for (double t = 0.0; t <= 2.0 * kPi + 10.0 * dt; t += dt)
        w.push_back(Eigen::Vector2d(-2.0 * std::sin(t), 2.0 * std::cos(t)));
    const Eigen::MatrixXd g = pe_gram(w, 0.0, dt, 0.0, 2.0 * kPi);
    // Quadrature plus window-endpoint quantization keeps this near 1e-4.
    CHECK((g - 4.0 * kPi * Eigen::Matrix2d::Identity()).norm() < 2e-3);
}

TEST_CASE("Gram integral of the zero signal is zero")
{
    const std::vector<Eigen::VectorXd> w(100, Eigen::Vector2d::Zero());
    CHECK(pe_gram(w, 0.0, 0.01, 0.0, 0.5).norm() == 0.0);
}

TEST_CASE("out-of-range Gram windows are rejected")
{
    const std::vector<Eigen::VectorXd> w(100, Eigen::Vector2d::Ones());
    CHECK_THROWS_AS(pe_gram(w, 0.0, 0.01, 0.8, 0.5), WindowOutOfRangeError);
    CHECK_THROWS_AS(pe_gram(w, 0.0, 0.01, -0.1, 0.2), WindowOutOfRangeError);
}

TEST_CASE("a fixed-direction signal fails PE certification")
{
    const std::vector<Eigen::VectorXd> w(2000, Eigen::Vector2d(1.0, 0.0));
    const PEReport report = certify_pe(w, 0.0, 1e-3, 0.5, 1e-6, 100);
    CHECK_FALSE(report.pass);
    CHECK(report.alpha_lo < 1e-12);
    CHECK(report.alpha_hi > 0.0);  // excitation exists, but only in one direction
}

TEST_CASE("invariant-set residual is zero on the set")
{
    const ScenarioConfig cfg = baseline_config();
    const Eigen::Vector2d x(0.5, 3.0);
    const SystemState s = on_invariant_set(cfg, x);
    const InvariantSetResidual r = invariant_set_residual(s, x, cfg.alpha, cfg.d);
    CHECK(r.xtilde == 0.0);
    CHECK(std::abs(r.dist) < 1e-12);
    CHECK(std::abs(r.filter) < 1e-12);
}

TEST_CASE("invariant-set residual of the default initial state")
{
    const ScenarioConfig cfg = baseline_config();
    SystemState s;
    s.y = cfg.init_y;
    s.x_hat = cfg.init_x_hat;
    s.z1 = 0.0;
    s.z2 = 0.0;
    s.z3 = Eigen::Vector2d::Zero();
    const InvariantSetResidual r = invariant_set_residual(s, cfg.source_x, cfg.alpha, cfg.d);
    CHECK(r.xtilde == doctest::Approx(std::sqrt(9.25)).epsilon(1e-12));          // |[0.5,3]|
    CHECK(r.dist == doctest::Approx(std::sqrt(60.25) - 2.0).epsilon(1e-12));
    CHECK(r.filter == doctest::Approx(4.625).epsilon(1e-12));                    // x.x / (2 alpha)
}

TEST_CASE("transition matrix over an empty interval is exactly orthogonal")
{
    const RotationSchedule schedule = RotationSchedule::planar(1.0);
    CHECK(orthogonality_defect(schedule, 1.3, 1.3, 1e-3) < 1e-15);
}

TEST_CASE("recorded runs certify cleanly")
{
    ScenarioConfig cfg = baseline_config();
    cfg.duration = 25.0;
    const Trajectory traj = simulate(cfg);
    const AnalysisReport report = analyze(traj);

    // Filter residual p(t) = p(0) e^{-alpha t} exactly; p(0) = x.x / 2 here.
    CHECK(report.residual_decay.rate == doctest::Approx(-cfg.alpha).epsilon(0.01));
    CHECK(report.residual_decay.r_squared > 0.999);
    CHECK(report.lyapunov_max_increase <= 1e-9);
    CHECK(report.dhat_floor_ok);
    CHECK(report.dhat_sq_min >= cfg.d * cfg.d - 1e-9);
    CHECK(report.pe_y.pass);
    CHECK(report.pe_v.pass);

    // Spot-check the residual value itself against the closed form.
    const double p0 = 4.625;
    for (const auto& s : traj.samples) {
        if (std::abs(s.t - 5.0) < 1e-9) {
            CHECK(sample_residual(s, cfg.alpha) ==
                  doctest::Approx(p0 * std::exp(-5.0)).epsilon(1e-6));
        }
    }

    // The transient is declared over only once the orbit radius is within 1%.
    const std::size_t i0 = post_transient_index(traj);
    REQUIRE(i0 < traj.samples.size());
    CHECK(i0 > 0);
    const double dhat_sq = traj.samples[i0].d_hat * traj.samples[i0].d_hat;
    CHECK(std::abs(dhat_sq - cfg.d * cfg.d) < 0.01 * cfg.d * cfg.d);
}

TEST_CASE("report rendering includes the headline figures")
{
    ScenarioConfig cfg = baseline_config();
    cfg.duration = 5.0;
    cfg.sample_every = 10;
    const AnalysisReport report = analyze(simulate(cfg));
    const std::string text = report_to_text(report);
    CHECK(text.find("residual_decay_rate") != std::string::npos);
    CHECK(text.find("pe_y.alpha_lo") != std::string::npos);
}
