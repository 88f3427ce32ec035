#include "circumnav/simulation.hpp"

#include <cmath>

#include "circumnav/analysis.hpp"
#include "circumnav/guidance.hpp"

namespace circumnav {

namespace {

double noisy_range(double d_true, double mu)
{
    if (d_true == 0.0)
        throw DegenerateMeasurementError("log-normal noise undefined at zero range");
    return std::exp(std::log(d_true) + mu);
}

struct Weighted {
    const SystemState& base;
    SystemState out;

    Weighted(const SystemState& s, const StateDerivative& d, double h) : base(s)
    {
        out.t = s.t + h;
        out.y = s.y + h * d.y_dot;
        out.x_hat = s.x_hat + h * d.x_hat_dot;
        out.z1 = s.z1 + h * d.z1_dot;
        out.z2 = s.z2 + h * d.z2_dot;
        out.z3 = s.z3 + h * d.z3_dot;
    }
};

double state_norm(const SystemState& s)
{
    return s.y.norm() + s.x_hat.norm() + std::abs(s.z1) + std::abs(s.z2) + s.z3.norm();
}

}  // namespace

double measure(const ScenarioConfig& cfg, const Eigen::VectorXd& y, double t,
               std::mt19937_64& rng)
{
    const double d_true = (y - cfg.source_position(t)).norm();
    if (cfg.noise_kind == NoiseKind::None) return d_true;
    std::normal_distribution<double> gauss(0.0, cfg.noise_sigma);
    return noisy_range(d_true, gauss(rng));
}

StateDerivative system_derivative(const SystemState& s, double d_measured,
                                  const RotationSchedule& schedule, const ScenarioConfig& cfg)
{
    const FilterState f{s.z1, s.z2, s.z3};
    const FilterOutputs out = filter_outputs(f, d_measured, s.y, cfg.alpha);

    StateDerivative d;
    d.z1_dot = out.eta;
    d.z2_dot = out.m;
    d.z3_dot = out.v;
    d.x_hat_dot = estimator_derivative(s.x_hat, out, cfg.gamma);
    d.y_dot = control_velocity(s.y, s.x_hat, d.x_hat_dot, schedule.eval(s.t), cfg.d);
    if (cfg.normalize) d.y_dot = normalize(d.y_dot);
    return d;
}

Trajectory simulate(const ScenarioConfig& cfg)
{
    cfg.validate();
    const RotationSchedule schedule = cfg.make_schedule();
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> gauss(0.0, cfg.noise_sigma);
    const bool noisy = cfg.noise_kind == NoiseKind::LogNormal;

    SystemState s;
    s.t = 0.0;
    s.y = cfg.init_y;
    s.x_hat = cfg.init_x_hat;
    s.z1 = cfg.init_z1;
    s.z2 = cfg.init_z2;
    s.z3 = cfg.init_z3;

    const long n_steps = std::lround(cfg.duration / cfg.dt);
    const double h = cfg.dt;

    Trajectory traj;
    traj.config = cfg;
    traj.samples.reserve(static_cast<size_t>(n_steps / cfg.sample_every) + 2);

    // One noise draw per step, held across the four RK4 stages.
    double mu = 0.0;
    auto range_at = [&](const Eigen::VectorXd& y, double t) {
        const double d_true = (y - cfg.source_position(t)).norm();
        return noisy ? noisy_range(d_true, mu) : d_true;
    };

    auto record = [&](const SystemState& st) {
        TrajectorySample smp;
        smp.t = st.t;
        smp.y = st.y;
        smp.x_hat = st.x_hat;
        smp.x_src = cfg.source_position(st.t);
        smp.z1 = st.z1;
        smp.z2 = st.z2;
        smp.z3 = st.z3;
        smp.d_true = (st.y - smp.x_src).norm();
        smp.d_measured = noisy ? noisy_range(smp.d_true, mu) : smp.d_true;
        smp.d_hat = (st.y - st.x_hat).norm();
        smp.xtilde_norm = (st.x_hat - smp.x_src).norm();
        smp.y_dot = system_derivative(st, smp.d_measured, schedule, cfg).y_dot;
        smp.lyapunov = lyapunov(st, smp.d_measured, smp.x_src, cfg);
        traj.samples.push_back(std::move(smp));
    };

    for (long i = 0; i < n_steps; ++i) {
        if (noisy) mu = gauss(rng);
        if (i % cfg.sample_every == 0) record(s);

        const auto rhs = [&](const SystemState& st) {
            return system_derivative(st, range_at(st.y, st.t), schedule, cfg);
        };
        const StateDerivative k1 = rhs(s);
        const StateDerivative k2 = rhs(Weighted(s, k1, 0.5 * h).out);
        const StateDerivative k3 = rhs(Weighted(s, k2, 0.5 * h).out);
        const StateDerivative k4 = rhs(Weighted(s, k3, h).out);

        s.y += (h / 6.0) * (k1.y_dot + 2.0 * k2.y_dot + 2.0 * k3.y_dot + k4.y_dot);
        s.x_hat += (h / 6.0) *
                   (k1.x_hat_dot + 2.0 * k2.x_hat_dot + 2.0 * k3.x_hat_dot + k4.x_hat_dot);
        s.z1 += (h / 6.0) * (k1.z1_dot + 2.0 * k2.z1_dot + 2.0 * k3.z1_dot + k4.z1_dot);
        s.z2 += (h / 6.0) * (k1.z2_dot + 2.0 * k2.z2_dot + 2.0 * k3.z2_dot + k4.z2_dot);
        s.z3 += (h / 6.0) * (k1.z3_dot + 2.0 * k2.z3_dot + 2.0 * k3.z3_dot + k4.z3_dot);
        s.t = h * static_cast<double>(i + 1);

        if (state_norm(s) > 1e12)
            throw NumericalBlowupError("state norm exceeded 1e12 at t = " + std::to_string(s.t));
    }
    record(s);
    return traj;
}

}  // namespace circumnav
