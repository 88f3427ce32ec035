#include "circumnav/rotation_schedule.hpp"

#include <cmath>

namespace circumnav {

namespace {

constexpr double kPi = 3.14159265358979323846;

// E = [[0, 1], [-1, 0]]
Eigen::Matrix2d planar_generator()
{
    Eigen::Matrix2d e;
    e << 0.0, 1.0, -1.0, 0.0;
    return e;
}

// B = 0 (+) bE
Eigen::Matrix3d lower_block(double b)
{
    Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
    m(1, 2) = b;
    m(2, 1) = -b;
    return m;
}

// C = cE (+) 0
Eigen::Matrix3d upper_block(double c)
{
    Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
    m(0, 1) = c;
    m(1, 0) = -c;
    return m;
}

}  // namespace

double smooth_step(double t)
{
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return 0.5 * (1.0 - std::cos(kPi * t));
}

RotationSchedule RotationSchedule::planar(double a)
{
    if (a == 0.0) throw ZeroRateError("planar schedule requires a != 0");
    RotationSchedule s;
    s.kind_ = Kind::Planar;
    s.dim_ = 2;
    s.a_ = a;
    s.period_ = 2.0 * kPi / std::abs(a);  // orbit period; A itself is constant
    return s;
}

RotationSchedule RotationSchedule::spatial(double b, double c, double rho)
{
    if (b == 0.0 || c == 0.0)
        throw ZeroRateError("spatial schedule requires b != 0 and c != 0");
    const double rho_max = 1.0 / (4.0 * (std::abs(b) + std::abs(c)));
    if (!(rho > 0.0) || !(rho < rho_max))
        throw RhoOutOfRangeError("spatial schedule requires 0 < rho < 1/(4(|b|+|c|))");

    RotationSchedule s;
    s.kind_ = Kind::Spatial;
    s.dim_ = 3;
    s.b_ = b;
    s.c_ = c;
    s.rho_ = rho;
    const double pb = kPi / std::abs(b);
    const double pc = kPi / std::abs(c);
    s.breakpoints_ = {rho, rho + pb, 2.0 * rho + pb,
                      3.0 * rho + pb, 3.0 * rho + pb + pc, 4.0 * rho + pb + pc};
    s.period_ = s.breakpoints_[5];
    return s;
}

RotationSchedule RotationSchedule::constant_spatial(const Eigen::Vector3d& axis)
{
    RotationSchedule s;
    s.kind_ = Kind::ConstantSpatial;
    s.dim_ = 3;
    s.constant_ << 0.0, -axis.z(), axis.y(),
                   axis.z(), 0.0, -axis.x(),
                   -axis.y(), axis.x(), 0.0;
    s.period_ = 1.0;  // nominal; any T works for a constant matrix
    return s;
}

Eigen::MatrixXd RotationSchedule::eval(double t) const
{
    switch (kind_) {
    case Kind::Planar:
        return a_ * planar_generator();
    case Kind::ConstantSpatial:
        return constant_;
    case Kind::Spatial:
        break;
    }

    const double r = t - std::floor(t / period_) * period_;
    const auto& bp = breakpoints_;
    if (r <= bp[0]) return smooth_step(r / rho_) * lower_block(b_);
    if (r <= bp[1]) return lower_block(b_);
    if (r <= bp[2]) return (1.0 - smooth_step((r - bp[1]) / rho_)) * lower_block(b_);
    if (r <= bp[3]) return smooth_step((r - bp[2]) / rho_) * upper_block(c_);
    if (r <= bp[4]) return upper_block(c_);
    return (1.0 - smooth_step((r - bp[4]) / rho_)) * upper_block(c_);
}

Eigen::MatrixXd RotationSchedule::transition_matrix(double t0, double t1, double dt) const
{
    if (t1 < t0) throw std::invalid_argument("transition_matrix: t1 < t0");
    if (!(dt > 0.0)) throw std::invalid_argument("transition_matrix: dt must be positive");

    Eigen::MatrixXd phi = Eigen::MatrixXd::Identity(dim_, dim_);
    const double span = t1 - t0;
    if (span == 0.0) return phi;

    const long n_steps = std::max(1L, std::lround(std::ceil(span / dt)));
    const double h = span / static_cast<double>(n_steps);
    for (long i = 0; i < n_steps; ++i) {
        const double t = t0 + h * static_cast<double>(i);
        const Eigen::MatrixXd k1 = eval(t) * phi;
        const Eigen::MatrixXd k2 = eval(t + 0.5 * h) * (phi + 0.5 * h * k1);
        const Eigen::MatrixXd k3 = eval(t + 0.5 * h) * (phi + 0.5 * h * k2);
        const Eigen::MatrixXd k4 = eval(t + h) * (phi + h * k3);
        phi += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return phi;
}

}  // namespace circumnav
