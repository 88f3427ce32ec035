#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <Eigen/Dense>

#include "circumnav/errors.hpp"
#include "circumnav/rotation_schedule.hpp"

namespace circumnav {

enum class SourceKind { Stationary, CircularDrift };
enum class NoiseKind { None, LogNormal };
enum class ScheduleKind { Planar, Spatial };

/// Full description of one closed-loop run. Flat key-value text format with
/// dotted sections, e.g. `schedule.kind = planar`, `source.x = 0.5 3`.
struct ScenarioConfig {
    int dimension = 2;
    double duration = 60.0;
    double dt = 1e-3;
    int sample_every = 1;
    std::uint64_t seed = 1;

    double d = 2.0;        // target orbit distance
    bool normalize = false;

    double alpha = 1.0;
    double gamma = 10.0;

    ScheduleKind schedule_kind = ScheduleKind::Planar;
    double schedule_a = 1.0;
    double schedule_b = 1.0;
    double schedule_c = 1.0;
    double schedule_rho = 0.0625;

    SourceKind source_kind = SourceKind::Stationary;
    Eigen::VectorXd source_x;       // Stationary
    Eigen::VectorXd source_center;  // CircularDrift
    double source_radius = 1.0;
    double source_omega = 0.005;
    double source_phase = 0.0;

    NoiseKind noise_kind = NoiseKind::None;
    double noise_sigma = 0.05;

    Eigen::VectorXd init_y;
    Eigen::VectorXd init_x_hat;
    double init_z1 = 0.0;
    double init_z2 = 0.0;
    Eigen::VectorXd init_z3;

    /// Set a single dotted key; throws ConfigError on unknown key or bad value.
    void set(const std::string& key, const std::string& value);

    /// Throws ConfigError if any field is inconsistent (gain signs, dimension
    /// mismatches, Dhat(0) too small, rho bound, ...).
    void validate() const;

    /// Source position at time t.
    Eigen::VectorXd source_position(double t) const;

    RotationSchedule make_schedule() const;

    std::string to_text() const;

    static ScenarioConfig parse(std::istream& in);
    static ScenarioConfig parse_string(const std::string& text);
    static ScenarioConfig load(const std::string& path);
};

/// Shipped scenario presets.
ScenarioConfig baseline_config();
ScenarioConfig normalized_config();
ScenarioConfig drift_config();
ScenarioConfig noise_config();
ScenarioConfig spatial3d_config();

}  // namespace circumnav
