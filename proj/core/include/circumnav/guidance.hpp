#pragma once

#include <Eigen/Dense>

namespace circumnav {

/// Guard below which a velocity is treated as zero when normalizing.
inline constexpr double kNormEpsilon = 1e-12;

/// Distance from the agent to the estimated source position.
double d_hat(const Eigen::VectorXd& y, const Eigen::VectorXd& x_hat);

/// Circumnavigation law:
///   ydot = xhatdot - [(Dhat^2 - d^2) I - A(t)] (y - xhat).
/// The radial part drives Dhat^2 to d^2; A(t) rotates around xhat.
Eigen::VectorXd control_velocity(const Eigen::VectorXd& y, const Eigen::VectorXd& x_hat,
                                 const Eigen::VectorXd& x_hat_dot, const Eigen::MatrixXd& a_t,
                                 double d);

/// v/|v|, or zero when |v| <= kNormEpsilon.
Eigen::VectorXd normalize(const Eigen::VectorXd& v);

}  // namespace circumnav
