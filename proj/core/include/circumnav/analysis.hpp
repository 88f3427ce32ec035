#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "circumnav/simulation.hpp"

namespace circumnav {

/// Sliding-window Gram eigenvalue bands for one signal.
struct PEReport {
    double window = 0.0;      // T_w, seconds
    double floor = 0.0;       // required lower bound on every window min-eig
    double alpha_lo = 0.0;    // smallest window min-eigenvalue seen
    double alpha_hi = 0.0;    // largest window max-eigenvalue seen
    std::vector<double> window_min_eig;
    std::vector<double> window_max_eig;
    bool pass = false;
};

struct DecayFit {
    double rate = 0.0;       // slope of ln v vs t, 1/s
    double r_squared = 0.0;
};

struct InvariantSetResidual {
    double xtilde = 0.0;      // |xhat - x|
    double dist = 0.0;        // ||y - x| - d|
    double filter = 0.0;      // |z1 - z2 + z3.x - x.x/(2 alpha)|
};

struct AnalysisReport {
    double lyapunov_max_increase = 0.0;
    DecayFit residual_decay;
    DecayFit xtilde_decay;
    DecayFit dist_decay;
    bool dhat_floor_ok = false;
    double dhat_sq_min = 0.0;
    PEReport pe_y;
    PEReport pe_v;
};

/// L = (1/4a) p^2 + (1/2g) |xtilde|^2 + (1/4)(Dhat^2 - d^2)^2 + sum L_i,
/// with L_1 = (z1(0) e^{-at})^2, L_2 = (z2(0) e^{-at})^2,
/// L_3 = (|z3(0)| e^{-at})^2. Nonincreasing along noiseless stationary runs.
double lyapunov(const SystemState& s, double d_measured, const Eigen::VectorXd& x_true,
                const ScenarioConfig& cfg);

/// Trapezoidal quadrature of the outer-product integral of w over
/// [t0, t0 + T_w], where w is sampled uniformly at spacing dt starting at
/// time t_begin. Throws WindowOutOfRangeError when the window leaves the
/// recorded range.
Eigen::MatrixXd pe_gram(const std::vector<Eigen::VectorXd>& w, double t_begin, double dt,
                        double t0, double window);

/// Slides a window of length `window` over the series (stride in samples) and
/// collects the Gram eigenvalue band of every window. Passes iff every window
/// min-eigenvalue is >= floor.
PEReport certify_pe(const std::vector<Eigen::VectorXd>& w, double t_begin, double dt,
                    double window, double floor, std::size_t stride = 100);

/// Least-squares affine fit of ln v against t. Values are clipped at 1e-300.
DecayFit fit_decay_rate(const std::vector<double>& t, const std::vector<double>& v);

/// Index range [first, last) of a decaying series suitable for a log-linear
/// fit: skips a leading fraction of the span after the peak and cuts off once
/// the series falls below rel_floor * max.
std::pair<std::size_t, std::size_t> decay_fit_range(const std::vector<double>& v,
                                                    double skip_fraction = 0.1,
                                                    double rel_floor = 1e-9);

/// Fit over the automatically selected range of a decaying series.
DecayFit fit_decay_windowed(const std::vector<double>& t, const std::vector<double>& v);

/// Distances of a state from the invariant set: estimate error, orbit-radius
/// error, and the filter consistency defect.
InvariantSetResidual invariant_set_residual(const SystemState& s, const Eigen::VectorXd& x_true,
                                            double alpha, double d);

/// |Phi(t1,t0)^T Phi(t1,t0) - I|_F for the schedule's transition matrix.
double orthogonality_defect(const RotationSchedule& schedule, double t0, double t1, double dt);

/// First sample index with |Dhat^2 - d^2| < 0.01 d^2 (the PE certification
/// is restricted to the trajectory after this point).
std::size_t post_transient_index(const Trajectory& traj);

/// Consistency residual p = eta - m + V.x recomputed from a recorded sample.
double sample_residual(const TrajectorySample& s, double alpha);

/// Full certification of one recorded run.
AnalysisReport analyze(const Trajectory& traj);

std::string report_to_text(const AnalysisReport& report);

}  // namespace circumnav
