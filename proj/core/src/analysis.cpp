#include "circumnav/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "circumnav/estimation.hpp"

namespace circumnav {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLogClip = 1e-300;

std::size_t window_samples(double window, double dt)
{
    return static_cast<std::size_t>(std::lround(window / dt));
}

}  // namespace

double lyapunov(const SystemState& s, double d_measured, const Eigen::VectorXd& x_true,
                const ScenarioConfig& cfg)
{
    const FilterState f{s.z1, s.z2, s.z3};
    const FilterOutputs out = filter_outputs(f, d_measured, s.y, cfg.alpha);
    const double p = residual(out, x_true);
    const double xtilde_sq = (s.x_hat - x_true).squaredNorm();
    const double dhat_sq = (s.y - s.x_hat).squaredNorm();
    const double radial = dhat_sq - cfg.d * cfg.d;
    const double decay = std::exp(-cfg.alpha * s.t);
    const double l1 = cfg.init_z1 * decay;
    const double l2 = cfg.init_z2 * decay;
    const double l3 = cfg.init_z3.norm() * decay;
    return p * p / (4.0 * cfg.alpha) + xtilde_sq / (2.0 * cfg.gamma) + 0.25 * radial * radial +
           l1 * l1 + l2 * l2 + l3 * l3;
}

Eigen::MatrixXd pe_gram(const std::vector<Eigen::VectorXd>& w, double t_begin, double dt,
                        double t0, double window)
{
    if (w.empty()) throw WindowOutOfRangeError("pe_gram: empty series");
    const long i0 = std::lround((t0 - t_begin) / dt);
    const std::size_t n = window_samples(window, dt);
    if (i0 < 0 || static_cast<std::size_t>(i0) + n >= w.size())
        throw WindowOutOfRangeError("pe_gram: window outside recorded range");

    const auto dim = w.front().size();
    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t k = 0; k <= n; ++k) {
        const double weight = (k == 0 || k == n) ? 0.5 : 1.0;
        const auto& wk = w[static_cast<std::size_t>(i0) + k];
        gram += (weight * dt) * (wk * wk.transpose());
    }
    return gram;
}

PEReport certify_pe(const std::vector<Eigen::VectorXd>& w, double t_begin, double dt,
                    double window, double floor, std::size_t stride)
{
    PEReport report;
    report.window = window;
    report.floor = floor;

    const std::size_t n = window_samples(window, dt);
    if (w.size() <= n) throw WindowOutOfRangeError("certify_pe: series shorter than window");
    if (stride == 0) stride = 1;

    for (std::size_t i0 = 0; i0 + n < w.size(); i0 += stride) {
        const Eigen::MatrixXd gram =
            pe_gram(w, t_begin, dt, t_begin + dt * static_cast<double>(i0), window);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
        report.window_min_eig.push_back(eig.eigenvalues().minCoeff());
        report.window_max_eig.push_back(eig.eigenvalues().maxCoeff());
    }
    report.alpha_lo = *std::min_element(report.window_min_eig.begin(), report.window_min_eig.end());
    report.alpha_hi = *std::max_element(report.window_max_eig.begin(), report.window_max_eig.end());
    report.pass = report.alpha_lo >= floor;
    return report;
}

DecayFit fit_decay_rate(const std::vector<double>& t, const std::vector<double>& v)
{
    if (t.size() != v.size()) throw std::invalid_argument("fit_decay_rate: size mismatch");
    if (t.size() < 3) throw InsufficientDataError("fit_decay_rate: need at least 3 points");

    const double n = static_cast<double>(t.size());
    double st = 0.0, sv = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        st += t[i];
        sv += std::log(std::max(v[i], kLogClip));
    }
    const double mt = st / n;
    const double mv = sv / n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double dx = t[i] - mt;
        const double dy = std::log(std::max(v[i], kLogClip)) - mv;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    DecayFit fit;
    fit.rate = sxy / sxx;
    const double ss_res = syy - sxy * sxy / sxx;
    fit.r_squared = syy > 0.0 ? std::max(0.0, 1.0 - ss_res / syy) : 1.0;
    return fit;
}

std::pair<std::size_t, std::size_t> decay_fit_range(const std::vector<double>& v,
                                                    double skip_fraction, double rel_floor)
{
    if (v.empty()) return {0, 0};
    const std::size_t i_max =
        static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
    const double floor = v[i_max] * rel_floor;
    std::size_t i_end = v.size();
    for (std::size_t i = i_max; i < v.size(); ++i) {
        if (v[i] < floor) {
            i_end = i;
            break;
        }
    }
    const double span = static_cast<double>(i_end - i_max);
    std::size_t first = i_max + static_cast<std::size_t>(skip_fraction * span);
    // Only trim the tail when the floor never cut it (the last stretch of a
    // fully recorded decay sits at the floating-point floor).
    std::size_t last = i_end == v.size()
                           ? i_end - static_cast<std::size_t>(0.05 * span)
                           : i_end;
    if (last > v.size()) last = v.size();
    if (first >= last) first = i_max;
    return {first, last};
}

DecayFit fit_decay_windowed(const std::vector<double>& t, const std::vector<double>& v)
{
    const auto [first, last] = decay_fit_range(v);
    if (last - first < 3) throw InsufficientDataError("fit_decay_windowed: window too small");
    const std::vector<double> ts(t.begin() + static_cast<long>(first),
                                 t.begin() + static_cast<long>(last));
    const std::vector<double> vs(v.begin() + static_cast<long>(first),
                                 v.begin() + static_cast<long>(last));
    return fit_decay_rate(ts, vs);
}

InvariantSetResidual invariant_set_residual(const SystemState& s, const Eigen::VectorXd& x_true,
                                            double alpha, double d)
{
    InvariantSetResidual r;
    r.xtilde = (s.x_hat - x_true).norm();
    r.dist = std::abs((s.y - x_true).norm() - d);
    r.filter = std::abs(s.z1 - s.z2 + s.z3.dot(x_true) -
                        x_true.squaredNorm() / (2.0 * alpha));
    return r;
}

double orthogonality_defect(const RotationSchedule& schedule, double t0, double t1, double dt)
{
    const Eigen::MatrixXd phi = schedule.transition_matrix(t0, t1, dt);
    const auto dim = phi.rows();
    return (phi.transpose() * phi - Eigen::MatrixXd::Identity(dim, dim)).norm();
}

std::size_t post_transient_index(const Trajectory& traj)
{
    const double d_sq = traj.config.d * traj.config.d;
    for (std::size_t i = 0; i < traj.samples.size(); ++i) {
        const double dhat_sq = traj.samples[i].d_hat * traj.samples[i].d_hat;
        if (std::abs(dhat_sq - d_sq) < 0.01 * d_sq) return i;
    }
    return traj.samples.size();
}

double sample_residual(const TrajectorySample& s, double alpha)
{
    const FilterState f{s.z1, s.z2, s.z3};
    const FilterOutputs out = filter_outputs(f, s.d_measured, s.y, alpha);
    return residual(out, s.x_src);
}

AnalysisReport analyze(const Trajectory& traj)
{
    const ScenarioConfig& cfg = traj.config;
    const auto& samples = traj.samples;
    AnalysisReport report;
    if (samples.size() < 2) return report;

    std::vector<double> t, abs_p, xtilde, dist_sq_err, dhat_sq;
    t.reserve(samples.size());
    for (const auto& s : samples) {
        t.push_back(s.t);
        abs_p.push_back(std::abs(sample_residual(s, cfg.alpha)));
        xtilde.push_back(s.xtilde_norm);
        dist_sq_err.push_back(std::abs(s.d_hat * s.d_hat - cfg.d * cfg.d));
        dhat_sq.push_back(s.d_hat * s.d_hat);
    }

    double max_increase = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < samples.size(); ++i)
        max_increase = std::max(max_increase, samples[i].lyapunov - samples[i - 1].lyapunov);
    report.lyapunov_max_increase = max_increase;

    report.residual_decay = fit_decay_windowed(t, abs_p);
    report.xtilde_decay = fit_decay_windowed(t, xtilde);
    report.dist_decay = fit_decay_windowed(t, dist_sq_err);

    report.dhat_sq_min = *std::min_element(dhat_sq.begin(), dhat_sq.end());
    report.dhat_floor_ok =
        report.dhat_sq_min > std::min(dhat_sq.front(), cfg.d * cfg.d) - 1e-9;

    // PE certification on the post-transient tail.
    const std::size_t i_conv = post_transient_index(traj);
    const double sample_dt = cfg.dt * cfg.sample_every;
    const RotationSchedule schedule = cfg.make_schedule();
    const double window = cfg.schedule_kind == ScheduleKind::Planar
                              ? 2.0 * kPi / std::abs(cfg.schedule_a)
                              : schedule.period();
    const double floor_y = cfg.schedule_kind == ScheduleKind::Planar
                               ? 0.5 * kPi * std::abs(cfg.schedule_a) * cfg.d * cfg.d
                               : 1e-3;
    const double floor_v = cfg.schedule_kind == ScheduleKind::Planar ? 0.1 : 1e-3;

    const std::size_t need = window_samples(window, sample_dt) + 1;
    if (i_conv < samples.size() && samples.size() - i_conv > need) {
        std::vector<Eigen::VectorXd> ydot, v;
        for (std::size_t i = i_conv; i < samples.size(); ++i) {
            ydot.push_back(samples[i].y_dot);
            v.push_back(-cfg.alpha * samples[i].z3 + samples[i].y);
        }
        const double t_begin = samples[i_conv].t;
        report.pe_y = certify_pe(ydot, t_begin, sample_dt, window, floor_y);
        report.pe_v = certify_pe(v, t_begin, sample_dt, window, floor_v);
    }
    return report;
}

std::string report_to_text(const AnalysisReport& report)
{
    const auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return std::string(buf);
    };
    std::ostringstream out;
    out << "lyapunov_max_increase = " << num(report.lyapunov_max_increase) << '\n'
        << "residual_decay_rate = " << num(report.residual_decay.rate) << '\n'
        << "residual_decay_r2 = " << num(report.residual_decay.r_squared) << '\n'
        << "xtilde_decay_rate = " << num(report.xtilde_decay.rate) << '\n'
        << "xtilde_decay_r2 = " << num(report.xtilde_decay.r_squared) << '\n'
        << "dist_decay_rate = " << num(report.dist_decay.rate) << '\n'
        << "dist_decay_r2 = " << num(report.dist_decay.r_squared) << '\n'
        << "dhat_sq_min = " << num(report.dhat_sq_min) << '\n'
        << "dhat_floor_ok = " << (report.dhat_floor_ok ? "true" : "false") << '\n'
        << "pe_y.window = " << num(report.pe_y.window) << '\n'
        << "pe_y.floor = " << num(report.pe_y.floor) << '\n'
        << "pe_y.alpha_lo = " << num(report.pe_y.alpha_lo) << '\n'
        << "pe_y.alpha_hi = " << num(report.pe_y.alpha_hi) << '\n'
        << "pe_y.pass = " << (report.pe_y.pass ? "true" : "false") << '\n'
        << "pe_v.window = " << num(report.pe_v.window) << '\n'
        << "pe_v.floor = " << num(report.pe_v.floor) << '\n'
        << "pe_v.alpha_lo = " << num(report.pe_v.alpha_lo) << '\n'
        << "pe_v.alpha_hi = " << num(report.pe_v.alpha_hi) << '\n'
        << "pe_v.pass = " << (report.pe_v.pass ? "true" : "false") << '\n';
    return out.str();
}

}  // namespace circumnav
