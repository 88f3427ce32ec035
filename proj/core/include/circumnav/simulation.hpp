#pragma once

#include <random>
#include <vector>

#include <Eigen/Dense>

#include "circumnav/config.hpp"
#include "circumnav/estimation.hpp"
#include "circumnav/rotation_schedule.hpp"

namespace circumnav {

/// Underlying ODE state: agent position, source estimate, filter bank.
struct SystemState {
    double t = 0.0;
    Eigen::VectorXd y;
    Eigen::VectorXd x_hat;
    double z1 = 0.0;
    double z2 = 0.0;
    Eigen::VectorXd z3;
};

struct StateDerivative {
    Eigen::VectorXd y_dot;
    Eigen::VectorXd x_hat_dot;
    double z1_dot = 0.0;
    double z2_dot = 0.0;
    Eigen::VectorXd z3_dot;
};

struct TrajectorySample {
    double t = 0.0;
    Eigen::VectorXd y;
    Eigen::VectorXd x_hat;
    Eigen::VectorXd x_src;
    Eigen::VectorXd y_dot;     // control velocity at the sample state
    double z1 = 0.0;
    double z2 = 0.0;
    Eigen::VectorXd z3;
    double d_true = 0.0;       // |y - x|
    double d_measured = 0.0;   // filter input (noisy when configured)
    double d_hat = 0.0;        // |y - xhat|
    double xtilde_norm = 0.0;  // |xhat - x|
    double lyapunov = 0.0;
};

struct Trajectory {
    ScenarioConfig config;
    std::vector<TrajectorySample> samples;
};

/// Range to the source at time t; under LogNormal noise returns
/// exp(ln D + mu) with mu drawn from N(0, sigma^2) on the given engine.
double measure(const ScenarioConfig& cfg, const Eigen::VectorXd& y, double t,
               std::mt19937_64& rng);

/// Assembles the coupled right-hand side: filter derivatives, estimator
/// derivative, and the (optionally normalized) control velocity. The filter
/// outputs are recomputed from (z, D, y) so that every integrator stage sees
/// a consistent xhatdot.
StateDerivative system_derivative(const SystemState& s, double d_measured,
                                  const RotationSchedule& schedule, const ScenarioConfig& cfg);

/// Fixed-step classical RK4 over [0, duration]; the measurement noise draw is
/// held constant across the four stages of each step. Deterministic for a
/// given config and seed.
Trajectory simulate(const ScenarioConfig& cfg);

}  // namespace circumnav
