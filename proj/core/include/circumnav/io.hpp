#pragma once

#include <iosfwd>
#include <string>

#include "circumnav/analysis.hpp"
#include "circumnav/simulation.hpp"

namespace circumnav {

/// Columns: t, y_1..y_n, xhat_1..xhat_n, x_1..x_n, D_true, D_measured,
/// D_hat, xtilde_norm, L. Header row, '.' decimal separator, full double
/// precision, so identical runs produce byte-identical files.
void write_trajectory_csv(const Trajectory& traj, std::ostream& out);
void write_trajectory_csv(const Trajectory& traj, const std::string& path);

void write_report(const AnalysisReport& report, const std::string& path);

/// Plot-ready two/three-column files: t vs D, t vs |xtilde|, and the agent
/// path (y components per row) next to the source path.
void write_plot_data(const Trajectory& traj, const std::string& dir);

}  // namespace circumnav
