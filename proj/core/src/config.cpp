#include "circumnav/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace circumnav {

namespace {

std::string trim(const std::string& s)
{
    size_t a = 0;
    size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

double parse_double(const std::string& key, const std::string& value)
{
    try {
        size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid number for key '" + key + "': " + value);
    }
}

long parse_int(const std::string& key, const std::string& value)
{
    try {
        size_t pos = 0;
        const long v = std::stol(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid integer for key '" + key + "': " + value);
    }
}

bool parse_bool(const std::string& key, const std::string& value)
{
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw ConfigError("invalid boolean for key '" + key + "': " + value);
}

Eigen::VectorXd parse_vector(const std::string& key, const std::string& value)
{
    std::istringstream iss(value);
    std::vector<double> vals;
    double v;
    while (iss >> v) vals.push_back(v);
    if (!iss.eof() || vals.empty())
        throw ConfigError("invalid vector for key '" + key + "': " + value);
    Eigen::VectorXd out(static_cast<Eigen::Index>(vals.size()));
    for (size_t i = 0; i < vals.size(); ++i) out[static_cast<Eigen::Index>(i)] = vals[i];
    return out;
}

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt(const Eigen::VectorXd& v)
{
    std::string s;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += fmt(v[i]);
    }
    return s;
}

}  // namespace

void ScenarioConfig::set(const std::string& key, const std::string& value)
{
    if (key == "dimension") dimension = static_cast<int>(parse_int(key, value));
    else if (key == "duration") duration = parse_double(key, value);
    else if (key == "dt") dt = parse_double(key, value);
    else if (key == "sample_every") sample_every = static_cast<int>(parse_int(key, value));
    else if (key == "seed") seed = static_cast<std::uint64_t>(parse_int(key, value));
    else if (key == "control.d") d = parse_double(key, value);
    else if (key == "control.normalize") normalize = parse_bool(key, value);
    else if (key == "gains.alpha") alpha = parse_double(key, value);
    else if (key == "gains.gamma") gamma = parse_double(key, value);
    else if (key == "schedule.kind") {
        if (value == "planar") schedule_kind = ScheduleKind::Planar;
        else if (value == "spatial") schedule_kind = ScheduleKind::Spatial;
        else throw ConfigError("unknown schedule.kind: " + value);
    }
    else if (key == "schedule.a") schedule_a = parse_double(key, value);
    else if (key == "schedule.b") schedule_b = parse_double(key, value);
    else if (key == "schedule.c") schedule_c = parse_double(key, value);
    else if (key == "schedule.rho") schedule_rho = parse_double(key, value);
    else if (key == "source.kind") {
        if (value == "stationary") source_kind = SourceKind::Stationary;
        else if (value == "circular") source_kind = SourceKind::CircularDrift;
        else throw ConfigError("unknown source.kind: " + value);
    }
    else if (key == "source.x") source_x = parse_vector(key, value);
    else if (key == "source.center") source_center = parse_vector(key, value);
    else if (key == "source.radius") source_radius = parse_double(key, value);
    else if (key == "source.omega") source_omega = parse_double(key, value);
    else if (key == "source.phase") source_phase = parse_double(key, value);
    else if (key == "noise.kind") {
        if (value == "none") noise_kind = NoiseKind::None;
        else if (value == "lognormal") noise_kind = NoiseKind::LogNormal;
        else throw ConfigError("unknown noise.kind: " + value);
    }
    else if (key == "noise.sigma") noise_sigma = parse_double(key, value);
    else if (key == "init.y") init_y = parse_vector(key, value);
    else if (key == "init.x_hat") init_x_hat = parse_vector(key, value);
    else if (key == "init.z1") init_z1 = parse_double(key, value);
    else if (key == "init.z2") init_z2 = parse_double(key, value);
    else if (key == "init.z3") init_z3 = parse_vector(key, value);
    else throw ConfigError("unknown config key: " + key);
}

void ScenarioConfig::validate() const
{
    if (dimension != 2 && dimension != 3)
        throw ConfigError("dimension must be 2 or 3");
    if (!(duration >= 0.0)) throw ConfigError("duration must be nonnegative");
    if (!(dt > 0.0)) throw ConfigError("dt must be positive");
    if (sample_every < 1) throw ConfigError("sample_every must be >= 1");
    if (!(d > 0.0)) throw ConfigError("control.d must be positive");
    if (!(alpha > 0.0)) throw ConfigError("gains.alpha must be positive");
    if (!(gamma > 0.0)) throw ConfigError("gains.gamma must be positive");
    if (!(noise_sigma >= 0.0)) throw ConfigError("noise.sigma must be nonnegative");

    const auto need_dim = [&](const Eigen::VectorXd& v, const char* name) {
        if (v.size() != dimension)
            throw ConfigError(std::string(name) + " must have " + std::to_string(dimension) +
                              " components");
    };
    need_dim(init_y, "init.y");
    need_dim(init_x_hat, "init.x_hat");
    need_dim(init_z3, "init.z3");
    if (source_kind == SourceKind::Stationary) {
        need_dim(source_x, "source.x");
    } else {
        need_dim(source_center, "source.center");
        if (!(source_radius > 0.0)) throw ConfigError("source.radius must be positive");
        if (dimension != 2) throw ConfigError("circular drift is only defined for dimension 2");
    }

    if (schedule_kind == ScheduleKind::Planar && dimension != 2)
        throw ConfigError("planar schedule requires dimension 2");
    if (schedule_kind == ScheduleKind::Spatial && dimension != 3)
        throw ConfigError("spatial schedule requires dimension 3");
    try {
        (void)make_schedule();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("invalid schedule: ") + e.what());
    }

    if ((init_y - init_x_hat).norm() <= 1e-9)
        throw ConfigError("Dhat(0) = |init.y - init.x_hat| must exceed 1e-9");
}

Eigen::VectorXd ScenarioConfig::source_position(double t) const
{
    if (source_kind == SourceKind::Stationary) return source_x;
    const double phi = source_phase + source_omega * t;
    Eigen::VectorXd x = source_center;
    x[0] += source_radius * std::cos(phi);
    x[1] += source_radius * std::sin(phi);
    return x;
}

RotationSchedule ScenarioConfig::make_schedule() const
{
    if (schedule_kind == ScheduleKind::Planar) return RotationSchedule::planar(schedule_a);
    return RotationSchedule::spatial(schedule_b, schedule_c, schedule_rho);
}

std::string ScenarioConfig::to_text() const
{
    std::ostringstream out;
    out << "dimension = " << dimension << '\n'
        << "duration = " << fmt(duration) << '\n'
        << "dt = " << fmt(dt) << '\n'
        << "sample_every = " << sample_every << '\n'
        << "seed = " << seed << '\n'
        << "control.d = " << fmt(d) << '\n'
        << "control.normalize = " << (normalize ? "true" : "false") << '\n'
        << "gains.alpha = " << fmt(alpha) << '\n'
        << "gains.gamma = " << fmt(gamma) << '\n';
    if (schedule_kind == ScheduleKind::Planar) {
        out << "schedule.kind = planar\n"
            << "schedule.a = " << fmt(schedule_a) << '\n';
    } else {
        out << "schedule.kind = spatial\n"
            << "schedule.b = " << fmt(schedule_b) << '\n'
            << "schedule.c = " << fmt(schedule_c) << '\n'
            << "schedule.rho = " << fmt(schedule_rho) << '\n';
    }
    if (source_kind == SourceKind::Stationary) {
        out << "source.kind = stationary\n"
            << "source.x = " << fmt(source_x) << '\n';
    } else {
        out << "source.kind = circular\n"
            << "source.center = " << fmt(source_center) << '\n'
            << "source.radius = " << fmt(source_radius) << '\n'
            << "source.omega = " << fmt(source_omega) << '\n'
            << "source.phase = " << fmt(source_phase) << '\n';
    }
    out << "noise.kind = " << (noise_kind == NoiseKind::None ? "none" : "lognormal") << '\n';
    if (noise_kind == NoiseKind::LogNormal)
        out << "noise.sigma = " << fmt(noise_sigma) << '\n';
    out << "init.y = " << fmt(init_y) << '\n'
        << "init.x_hat = " << fmt(init_x_hat) << '\n'
        << "init.z1 = " << fmt(init_z1) << '\n'
        << "init.z2 = " << fmt(init_z2) << '\n'
        << "init.z3 = " << fmt(init_z3) << '\n';
    return out.str();
}

ScenarioConfig ScenarioConfig::parse(std::istream& in)
{
    ScenarioConfig cfg;
    // Vectors default to 2-D zeros so that minimal configs stay loadable;
    // validate() still enforces dimension consistency.
    cfg.init_y = Eigen::VectorXd::Zero(2);
    cfg.init_x_hat = Eigen::VectorXd::Zero(2);
    cfg.init_z3 = Eigen::VectorXd::Zero(2);
    cfg.source_x = Eigen::VectorXd::Zero(2);
    cfg.source_center = Eigen::VectorXd::Zero(2);

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
        cfg.set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return cfg;
}

ScenarioConfig ScenarioConfig::parse_string(const std::string& text)
{
    std::istringstream iss(text);
    return parse(iss);
}

ScenarioConfig ScenarioConfig::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    return parse(in);
}

ScenarioConfig baseline_config()
{
    ScenarioConfig cfg;
    cfg.dimension = 2;
    cfg.duration = 60.0;
    cfg.dt = 1e-3;
    cfg.sample_every = 1;
    cfg.seed = 1;
    cfg.d = 2.0;
    cfg.alpha = 1.0;
    cfg.gamma = 2.0;
    cfg.schedule_kind = ScheduleKind::Planar;
    cfg.schedule_a = 1.0;
    cfg.source_kind = SourceKind::Stationary;
    cfg.source_x = Eigen::Vector2d(0.5, 3.0);
    cfg.init_y = Eigen::Vector2d(8.0, 5.0);
    cfg.init_x_hat = Eigen::Vector2d::Zero();
    cfg.init_z3 = Eigen::Vector2d::Zero();
    cfg.source_center = Eigen::Vector2d::Zero();
    return cfg;
}

ScenarioConfig normalized_config()
{
    ScenarioConfig cfg = baseline_config();
    cfg.normalize = true;
    return cfg;
}

ScenarioConfig drift_config()
{
    ScenarioConfig cfg = baseline_config();
    cfg.source_kind = SourceKind::CircularDrift;
    cfg.source_center = Eigen::Vector2d(0.5, 3.0);
    cfg.source_radius = 1.0;
    cfg.source_omega = 0.005;
    cfg.source_phase = 0.0;
    cfg.duration = 120.0;
    return cfg;
}

ScenarioConfig noise_config()
{
    ScenarioConfig cfg = baseline_config();
    cfg.noise_kind = NoiseKind::LogNormal;
    cfg.noise_sigma = 0.05;
    return cfg;
}

ScenarioConfig spatial3d_config()
{
    ScenarioConfig cfg;
    cfg.dimension = 3;
    cfg.duration = 120.0;
    cfg.dt = 1e-3;
    cfg.sample_every = 1;
    cfg.seed = 1;
    cfg.d = 2.0;
    cfg.alpha = 1.0;
    cfg.gamma = 2.0;
    cfg.schedule_kind = ScheduleKind::Spatial;
    cfg.schedule_b = 1.0;
    cfg.schedule_c = 1.0;
    cfg.schedule_rho = 0.0625;
    cfg.source_kind = SourceKind::Stationary;
    cfg.source_x = Eigen::Vector3d(0.5, 3.0, -1.0);
    cfg.init_y = Eigen::Vector3d(8.0, 5.0, 3.0);
    cfg.init_x_hat = Eigen::Vector3d::Zero();
    cfg.init_z3 = Eigen::Vector3d::Zero();
    cfg.source_center = Eigen::Vector3d::Zero();
    return cfg;
}

}  // namespace circumnav
