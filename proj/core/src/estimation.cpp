#include "circumnav/estimation.hpp"

namespace circumnav {

FilterOutputs filter_outputs(const FilterState& f, double range, const Eigen::VectorXd& y,
                             double alpha)
{
    if (!(alpha > 0.0)) throw NonPositiveGainError("filter gain alpha must be positive");
    FilterOutputs out;
    out.eta = -alpha * f.z1 + 0.5 * range * range;
    out.m = -alpha * f.z2 + 0.5 * y.squaredNorm();
    out.v = -alpha * f.z3 + y;
    return out;
}

Eigen::VectorXd estimator_derivative(const Eigen::VectorXd& x_hat, const FilterOutputs& out,
                                     double gamma)
{
    if (!(gamma > 0.0)) throw NonPositiveGainError("adaptive gain gamma must be positive");
    return -gamma * out.v * (out.eta - out.m + out.v.dot(x_hat));
}

double residual(const FilterOutputs& out, const Eigen::VectorXd& x_true)
{
    return out.eta - out.m + out.v.dot(x_true);
}

}  // namespace circumnav
