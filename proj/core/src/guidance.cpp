#include "circumnav/guidance.hpp"

#include <stdexcept>

namespace circumnav {

double d_hat(const Eigen::VectorXd& y, const Eigen::VectorXd& x_hat)
{
    return (y - x_hat).norm();
}

Eigen::VectorXd control_velocity(const Eigen::VectorXd& y, const Eigen::VectorXd& x_hat,
                                 const Eigen::VectorXd& x_hat_dot, const Eigen::MatrixXd& a_t,
                                 double d)
{
    if (!(d > 0.0)) throw std::invalid_argument("target distance d must be positive");
    const Eigen::VectorXd rel = y - x_hat;
    const double dhat_sq = rel.squaredNorm();
    return x_hat_dot - (dhat_sq - d * d) * rel + a_t * rel;
}

Eigen::VectorXd normalize(const Eigen::VectorXd& v)
{
    const double n = v.norm();
    if (n <= kNormEpsilon) return Eigen::VectorXd::Zero(v.size());
    return v / n;
}

}  // namespace circumnav
