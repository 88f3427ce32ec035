#include "circumnav/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

namespace circumnav {

namespace {

void put(std::ostream& out, double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out << buf;
}

std::ofstream open_out(const std::string& path)
{
    std::ofstream out(path);
    if (!out) throw IoError("cannot open output file: " + path);
    return out;
}

}  // namespace

void write_trajectory_csv(const Trajectory& traj, std::ostream& out)
{
    const int n = traj.config.dimension;
    out << "t";
    for (int i = 1; i <= n; ++i) out << ",y_" << i;
    for (int i = 1; i <= n; ++i) out << ",xhat_" << i;
    for (int i = 1; i <= n; ++i) out << ",x_" << i;
    out << ",D_true,D_measured,D_hat,xtilde_norm,L\n";

    for (const auto& s : traj.samples) {
        put(out, s.t);
        for (int i = 0; i < n; ++i) { out << ','; put(out, s.y[i]); }
        for (int i = 0; i < n; ++i) { out << ','; put(out, s.x_hat[i]); }
        for (int i = 0; i < n; ++i) { out << ','; put(out, s.x_src[i]); }
        out << ','; put(out, s.d_true);
        out << ','; put(out, s.d_measured);
        out << ','; put(out, s.d_hat);
        out << ','; put(out, s.xtilde_norm);
        out << ','; put(out, s.lyapunov);
        out << '\n';
    }
}

void write_trajectory_csv(const Trajectory& traj, const std::string& path)
{
    auto out = open_out(path);
    write_trajectory_csv(traj, out);
}

void write_report(const AnalysisReport& report, const std::string& path)
{
    auto out = open_out(path);
    out << report_to_text(report);
}

void write_plot_data(const Trajectory& traj, const std::string& dir)
{
    const int n = traj.config.dimension;
    auto dist = open_out(dir + "/dist.dat");
    auto xtilde = open_out(dir + "/xtilde.dat");
    auto path = open_out(dir + "/path.dat");
    for (const auto& s : traj.samples) {
        put(dist, s.t); dist << ' '; put(dist, s.d_true); dist << '\n';
        put(xtilde, s.t); xtilde << ' '; put(xtilde, s.xtilde_norm); xtilde << '\n';
        for (int i = 0; i < n; ++i) { if (i) path << ' '; put(path, s.y[i]); }
        for (int i = 0; i < n; ++i) { path << ' '; put(path, s.x_src[i]); }
        path << '\n';
    }
}

}  // namespace circumnav
