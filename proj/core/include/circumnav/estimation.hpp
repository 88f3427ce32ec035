#pragma once

#include <Eigen/Dense>

#include "circumnav/errors.hpp"

namespace circumnav {

/// Scalar/vector filter bank state feeding the source estimator.
struct FilterState {
    double z1 = 0.0;
    double z2 = 0.0;
    Eigen::VectorXd z3;
};

/// Outputs of the filter bank. Each equals the corresponding zdot, so the
/// same triple is both the filter derivative and the estimator input.
struct FilterOutputs {
    double eta = 0.0;
    double m = 0.0;
    Eigen::VectorXd v;
};

/// eta = -alpha z1 + D^2/2, m = -alpha z2 + y.y/2, V = -alpha z3 + y.
FilterOutputs filter_outputs(const FilterState& f, double range, const Eigen::VectorXd& y,
                             double alpha);

/// xhatdot = -gamma V (eta - m + V.xhat): gradient flow on the squared
/// consistency residual.
Eigen::VectorXd estimator_derivative(const Eigen::VectorXd& x_hat, const FilterOutputs& out,
                                     double gamma);

/// p = eta - m + V.x with the true source position x. Decays as exp(-alpha t)
/// along any trajectory of the filters; analysis-only accessor.
double residual(const FilterOutputs& out, const Eigen::VectorXd& x_true);

}  // namespace circumnav
