#pragma once

#include <array>

#include <Eigen/Dense>

#include "circumnav/errors.hpp"

namespace circumnav {

/// Twice-differentiable 0->1 blend: 0 for t<=0, 1 for t>=1,
/// (1 - cos(pi t))/2 in between. Both one-sided slopes vanish at the ends.
double smooth_step(double t);

/// Time-periodic skew-symmetric generator A(t).
///
/// Two controller-facing constructions: a constant planar rotation a*E, and
/// a 3-D schedule that blends between the generators B = 0 (+) bE and
/// C = cE (+) 0 over six segments per period. A third, deliberately
/// degenerate constant 3x3 variant exists only for negative persistence
/// tests and is not accepted by the controller-facing constructors.
class RotationSchedule {
public:
    enum class Kind { Planar, Spatial, ConstantSpatial };

    static RotationSchedule planar(double a);
    static RotationSchedule spatial(double b, double c, double rho);
    /// Analysis-only: constant skew 3x3 generator from an axis vector.
    /// Always singular, so its flow cannot be persistently spanning.
    static RotationSchedule constant_spatial(const Eigen::Vector3d& axis);

    Kind kind() const { return kind_; }
    int dimension() const { return dim_; }
    double period() const { return period_; }

    /// Segment breakpoints of one period (Spatial only), T1..T6 with T6 == T.
    const std::array<double, 6>& breakpoints() const { return breakpoints_; }

    /// A(t); exactly skew-symmetric by construction.
    Eigen::MatrixXd eval(double t) const;

    /// Phi(t1, t0) for Phidot = A(t) Phi, Phi(t0, t0) = I, by fixed-step
    /// RK4 with step <= dt. Orthogonal up to integration error.
    Eigen::MatrixXd transition_matrix(double t0, double t1, double dt) const;

private:
    RotationSchedule() = default;

    Kind kind_ = Kind::Planar;
    int dim_ = 2;
    double period_ = 0.0;
    double a_ = 0.0;
    double b_ = 0.0;
    double c_ = 0.0;
    double rho_ = 0.0;
    std::array<double, 6> breakpoints_{};
    Eigen::Matrix3d constant_{};  // ConstantSpatial only
};

}  // namespace circumnav
