#include "circumnav/verification.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "circumnav/analysis.hpp"
#include "circumnav/io.hpp"
#include "circumnav/simulation.hpp"

namespace circumnav::verification {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

Eigen::VectorXd final_state_vector(const Trajectory& traj)
{
    const auto& s = traj.samples.back();
    const auto n = s.y.size();
    Eigen::VectorXd v(2 * n + 2 + n);
    v << s.y, s.x_hat, s.z1, s.z2, s.z3;
    return v;
}

double max_skew_defect(const RotationSchedule& schedule, std::mt19937_64& rng)
{
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int dim = schedule.dimension();
    std::vector<Eigen::VectorXd> dirs;
    for (int k = 0; k < 100; ++k) {
        Eigen::VectorXd nu(dim);
        for (int i = 0; i < dim; ++i) nu[i] = gauss(rng);
        dirs.push_back(nu.normalized());
    }
    double worst = 0.0;
    const double period = schedule.period();
    for (int i = 0; i <= 1000; ++i) {
        const Eigen::MatrixXd a = schedule.eval(period * i / 1000.0);
        for (const auto& nu : dirs) worst = std::max(worst, std::abs(nu.dot(a * nu)));
    }
    return worst;
}

}  // namespace

std::vector<CheckResult> run_all()
{
    std::vector<CheckResult> results;
    const auto add = [&](int id, std::string name, bool pass, std::string detail) {
        results.push_back({id, std::move(name), pass, std::move(detail)});
    };

    // --- Criterion 1: baseline reproduction ---
    const ScenarioConfig baseline = baseline_config();
    const auto t_start = std::chrono::steady_clock::now();
    const Trajectory base_traj = simulate(baseline);
    const double runtime =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    {
        const auto& last = base_traj.samples.back();
        const double dist_err = std::abs(last.d_true - baseline.d);
        const bool pass = dist_err < 1e-3 * baseline.d && last.xtilde_norm < 1e-3 &&
                          runtime < 5.0;
        add(1, "baseline reproduction",
            pass,
            "|D-d|=" + num(dist_err) + " |xtilde|=" + num(last.xtilde_norm) +
                " runtime=" + num(runtime) + "s");
    }

    const AnalysisReport base_report = analyze(base_traj);

    // --- Criterion 2: exponential rates ---
    {
        const double rate_err =
            std::abs(base_report.residual_decay.rate + baseline.alpha) / baseline.alpha;
        const bool pass = rate_err <= 0.01 && base_report.xtilde_decay.rate < 0.0 &&
                          base_report.xtilde_decay.r_squared > 0.99 &&
                          base_report.dist_decay.rate < 0.0 &&
                          base_report.dist_decay.r_squared > 0.99;
        add(2, "exponential decay rates", pass,
            "residual_rate=" + num(base_report.residual_decay.rate) +
                " xtilde_rate=" + num(base_report.xtilde_decay.rate) +
                " (R2=" + num(base_report.xtilde_decay.r_squared) + ")" +
                " dist_rate=" + num(base_report.dist_decay.rate) +
                " (R2=" + num(base_report.dist_decay.r_squared) + ")");
    }

    // --- Criterion 3: Lyapunov monotonicity ---
    add(3, "Lyapunov nonincreasing", base_report.lyapunov_max_increase <= 1e-9,
        "max per-step increase=" + num(base_report.lyapunov_max_increase));

    // --- Criterion 4: Dhat floor ---
    {
        const double floor =
            std::min(std::pow(base_traj.samples.front().d_hat, 2), baseline.d * baseline.d);
        add(4, "Dhat^2 floor", base_report.dhat_sq_min > floor - 1e-9,
            "min Dhat^2=" + num(base_report.dhat_sq_min) + " floor=" + num(floor));
    }

    // --- Criterion 5: skewness and transition-matrix orthogonality ---
    {
        std::mt19937_64 rng(42);
        const RotationSchedule planar = RotationSchedule::planar(1.0);
        const RotationSchedule spatial = RotationSchedule::spatial(1.0, 1.0, 0.0625);
        const double skew = std::max(max_skew_defect(planar, rng), max_skew_defect(spatial, rng));
        const double orth_p = orthogonality_defect(planar, 0.0, planar.period(), 1e-4);
        const double orth_s = orthogonality_defect(spatial, 0.0, spatial.period(), 1e-4);
        add(5, "skewness / orthogonality",
            skew < 1e-12 && orth_p < 1e-8 && orth_s < 1e-8,
            "max|nu.A.nu|=" + num(skew) + " orth_planar=" + num(orth_p) +
                " orth_spatial=" + num(orth_s));
    }

    // --- Criterion 6: PE positive ---
    add(6, "persistent excitation (positive)",
        base_report.pe_y.pass && base_report.pe_v.pass,
        "ydot min eig=" + num(base_report.pe_y.alpha_lo) +
            " (floor " + num(base_report.pe_y.floor) + "), V min eig=" +
            num(base_report.pe_v.alpha_lo) + " (floor " + num(base_report.pe_v.floor) + ")");

    // --- Criterion 7: PE negative for a constant singular 3x3 schedule ---
    {
        const RotationSchedule constant =
            RotationSchedule::constant_spatial(Eigen::Vector3d(0.0, 0.0, 1.0));
        // y*(0) on the rotation axis: ydot* vanishes identically.
        Eigen::VectorXd y_star = Eigen::Vector3d(0.0, 0.0, 1.0);
        const double dt = 1e-3;
        std::vector<Eigen::VectorXd> ydot;
        for (double t = 0.0; t <= 10.0; t += dt) {
            const Eigen::MatrixXd a = constant.eval(t);
            ydot.push_back(a * y_star);
            // RK4 flow step of ydot* = A y* (A constant here).
            const Eigen::VectorXd k1 = a * y_star;
            const Eigen::VectorXd k2 = a * (y_star + 0.5 * dt * k1);
            const Eigen::VectorXd k3 = a * (y_star + 0.5 * dt * k2);
            const Eigen::VectorXd k4 = a * (y_star + dt * k3);
            y_star += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        const PEReport report = certify_pe(ydot, 0.0, dt, 1.0, 1e-10, 100);
        add(7, "persistent excitation (negative)", report.alpha_hi < 1e-10,
            "max window eig=" + num(report.alpha_hi));
    }

    // --- Criterion 8: 3-D spatial schedule run ---
    {
        const ScenarioConfig cfg = spatial3d_config();
        const Trajectory traj = simulate(cfg);
        const AnalysisReport report = analyze(traj);
        const auto& last = traj.samples.back();
        const double dist_err = std::abs(last.d_true - cfg.d);
        add(8, "3-D spatial convergence",
            dist_err < 1e-2 * cfg.d && last.xtilde_norm < 1e-2 && report.pe_y.alpha_lo > 0.0,
            "|D-d|=" + num(dist_err) + " |xtilde|=" + num(last.xtilde_norm) +
                " ydot min eig=" + num(report.pe_y.alpha_lo));
    }

    // --- Criterion 9: circular drift ---
    {
        const ScenarioConfig cfg = drift_config();
        const Trajectory traj = simulate(cfg);
        // Steady-state window: second half of the run, past both the orbit
        // and estimator transients.
        const std::size_t i_conv = traj.samples.size() / 2;
        double worst = 0.0;
        double speed_sum = 0.0;
        for (std::size_t i = i_conv; i < traj.samples.size(); ++i) {
            worst = std::max(worst, std::abs(traj.samples[i].d_true - cfg.d) / cfg.d);
            speed_sum += traj.samples[i].y_dot.norm();
        }
        const double mean_speed =
            speed_sum / static_cast<double>(traj.samples.size() - i_conv);
        const double source_speed = cfg.source_radius * std::abs(cfg.source_omega);
        add(9, "drifting source tracking", worst < 0.1 && mean_speed > 10.0 * source_speed,
            "max |D-d|/d=" + num(worst) + " agent/source speed ratio=" +
                num(mean_speed / source_speed));
    }

    // --- Criterion 10: log-normal measurement noise, 10 seeds ---
    {
        bool pass = true;
        double worst = 0.0;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            ScenarioConfig cfg = noise_config();
            cfg.seed = seed;
            const Trajectory traj = simulate(cfg);
            const std::size_t half = traj.samples.size() / 2;
            double sum = 0.0;
            for (std::size_t i = half; i < traj.samples.size(); ++i)
                sum += traj.samples[i].d_true;
            const double avg = sum / static_cast<double>(traj.samples.size() - half);
            const double rel = std::abs(avg - cfg.d) / cfg.d;
            worst = std::max(worst, rel);
            pass = pass && rel < 0.05;
        }
        add(10, "noisy measurements (10 seeds)", pass,
            "worst |avg(D)-d|/d=" + num(worst));
    }

    // --- Criterion 11: constant-speed variant ---
    {
        const ScenarioConfig cfg = normalized_config();
        const Trajectory traj = simulate(cfg);
        double speed_defect = 0.0;
        for (const auto& s : traj.samples)
            speed_defect = std::max(speed_defect, std::abs(s.y_dot.norm() - 1.0));
        const auto& last = traj.samples.back();
        const double dist_err = std::abs(last.d_true - cfg.d);
        add(11, "constant-speed variant",
            speed_defect < 1e-9 && dist_err < 1e-2 * cfg.d && last.xtilde_norm < 1e-2,
            "max ||ydot|-1|=" + num(speed_defect) + " |D-d|=" + num(dist_err) +
                " |xtilde|=" + num(last.xtilde_norm));
    }

    // --- Criterion 12: integrator order ---
    {
        // Coarser base step keeps the dt^4 differences well above the
        // double-precision floor of the fully converged t=60 state.
        ScenarioConfig cfg = baseline_config();
        cfg.duration = 10.0;
        cfg.sample_every = 1000;
        cfg.dt = 8e-3;
        const Eigen::VectorXd f1 = final_state_vector(simulate(cfg));
        cfg.dt = 4e-3;
        const Eigen::VectorXd f2 = final_state_vector(simulate(cfg));
        cfg.dt = 2e-3;
        const Eigen::VectorXd f4 = final_state_vector(simulate(cfg));
        const double e1 = (f1 - f4).norm();
        const double e2 = (f2 - f4).norm();
        add(12, "integrator order", e2 > 0.0 && e1 / e2 >= 8.0,
            "error ratio=" + num(e2 > 0.0 ? e1 / e2 : 0.0));
    }

    return results;
}

bool all_passed(const std::vector<CheckResult>& results)
{
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace circumnav::verification
