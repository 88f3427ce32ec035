// Scenario runner for the range-only circumnavigation library.
//
//   circumnav run --config baseline.cfg --out results/
//   circumnav verify
//   circumnav sweep --config baseline.cfg --vary gains.gamma=5,10,20 --out sweep/
//   circumnav schedule-dump --config spatial3d.cfg

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "circumnav/analysis.hpp"
#include "circumnav/io.hpp"
#include "circumnav/simulation.hpp"
#include "circumnav/verification.hpp"

namespace fs = std::filesystem;
using namespace circumnav;

namespace {

struct CommonOpts {
    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
    bool quiet = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool config_required)
{
    auto* c = cmd->add_option("--config", opts.config_path, "scenario config file");
    if (config_required) c->required();
    cmd->add_option("--set", opts.overrides, "override, key=value (repeatable)");
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_option("--seed", opts.seed, "override the RNG seed");
    cmd->add_flag("--quiet", opts.quiet, "suppress progress output");
}

ScenarioConfig load_config(const CommonOpts& opts)
{
    ScenarioConfig cfg = opts.config_path.empty() ? baseline_config()
                                                  : ScenarioConfig::load(opts.config_path);
    for (const auto& kv : opts.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw ConfigError("--set expects key=value, got: " + kv);
        cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (opts.seed) cfg.seed = *opts.seed;
    cfg.validate();
    return cfg;
}

int cmd_run(const CommonOpts& opts)
{
    const ScenarioConfig cfg = load_config(opts);
    fs::create_directories(opts.out_dir);

    const Trajectory traj = simulate(cfg);
    const AnalysisReport report = analyze(traj);

    write_trajectory_csv(traj, opts.out_dir + "/trajectory.csv");
    write_report(report, opts.out_dir + "/report.txt");
    write_plot_data(traj, opts.out_dir);
    {
        std::ofstream snapshot(opts.out_dir + "/config.cfg");
        snapshot << cfg.to_text();
    }

    if (!opts.quiet) {
        const auto& last = traj.samples.back();
        std::cout << "final t = " << last.t << ", |D-d| = "
                  << std::abs(last.d_true - cfg.d) << ", |xtilde| = " << last.xtilde_norm
                  << '\n'
                  << "wrote " << opts.out_dir << "/trajectory.csv, report.txt, plot data\n";
    }
    return 0;
}

int cmd_verify(const CommonOpts& opts)
{
    const auto results = verification::run_all();
    for (const auto& r : results)
        std::printf("%-4s %2d  %-38s %s\n", r.pass ? "ok" : "FAIL", r.id, r.name.c_str(),
                    opts.quiet ? "" : r.detail.c_str());
    return verification::all_passed(results) ? 0 : 1;
}

int cmd_sweep(const CommonOpts& opts, const std::vector<std::string>& vary)
{
    const ScenarioConfig base = load_config(opts);

    // Expand the grid: each --vary key=v1,v2,... multiplies the cell set.
    struct Cell {
        std::vector<std::pair<std::string, std::string>> assignment;
    };
    std::vector<Cell> cells{Cell{}};
    for (const auto& spec : vary) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos)
            throw ConfigError("--vary expects key=v1,v2,..., got: " + spec);
        const std::string key = spec.substr(0, eq);
        std::vector<std::string> values;
        std::string rest = spec.substr(eq + 1);
        size_t pos = 0;
        while (pos != std::string::npos) {
            const size_t comma = rest.find(',', pos);
            values.push_back(rest.substr(pos, comma - pos));
            pos = comma == std::string::npos ? comma : comma + 1;
        }
        std::vector<Cell> expanded;
        for (const auto& cell : cells)
            for (const auto& v : values) {
                Cell next = cell;
                next.assignment.emplace_back(key, v);
                expanded.push_back(std::move(next));
            }
        cells = std::move(expanded);
    }

    fs::create_directories(opts.out_dir);
    std::vector<std::future<void>> jobs;
    for (const auto& cell : cells) {
        jobs.push_back(std::async(std::launch::async, [&, cell] {
            ScenarioConfig cfg = base;
            std::string label;
            for (const auto& [k, v] : cell.assignment) {
                cfg.set(k, v);
                std::string part = k + "_" + v;
                for (char& ch : part)
                    if (ch == '.' || ch == '/' || ch == ' ') ch = '-';
                label += (label.empty() ? "" : "__") + part;
            }
            if (label.empty()) label = "base";
            cfg.validate();
            const AnalysisReport report = analyze(simulate(cfg));
            write_report(report, opts.out_dir + "/report_" + label + ".txt");
        }));
    }
    for (auto& job : jobs) job.get();
    if (!opts.quiet)
        std::cout << "swept " << cells.size() << " cells into " << opts.out_dir << '\n';
    return 0;
}

int cmd_schedule_dump(const CommonOpts& opts, int samples)
{
    const ScenarioConfig cfg = load_config(opts);
    const RotationSchedule schedule = cfg.make_schedule();
    const int dim = schedule.dimension();

    fs::create_directories(opts.out_dir);
    std::ofstream out(opts.out_dir + "/schedule.csv");
    if (!out) throw IoError("cannot open output file in " + opts.out_dir);

    out << "t";
    for (int i = 1; i <= dim; ++i)
        for (int j = 1; j <= dim; ++j) out << ",a_" << i << j;
    out << "\n";
    char buf[32];
    for (int k = 0; k <= samples; ++k) {
        const double t = schedule.period() * k / samples;
        const Eigen::MatrixXd a = schedule.eval(t);
        std::snprintf(buf, sizeof(buf), "%.17g", t);
        out << buf;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                std::snprintf(buf, sizeof(buf), "%.17g", a(i, j));
                out << ',' << buf;
            }
        out << '\n';
    }
    if (!opts.quiet)
        std::cout << "wrote " << opts.out_dir << "/schedule.csv (" << samples + 1
                  << " samples over one period T=" << schedule.period() << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"range-only circumnavigation simulator"};
    app.require_subcommand(1);

    CommonOpts run_opts, verify_opts, sweep_opts, dump_opts;
    std::vector<std::string> vary;
    int dump_samples = 1000;

    auto* run = app.add_subcommand("run", "simulate one scenario and write its artifacts");
    add_common(run, run_opts, true);

    auto* verify = app.add_subcommand("verify", "run the full invariant suite");
    verify->add_flag("--quiet", verify_opts.quiet, "omit per-check detail");

    auto* sweep = app.add_subcommand("sweep", "grid over config overrides, one report per cell");
    add_common(sweep, sweep_opts, true);
    sweep->add_option("--vary", vary, "grid axis, key=v1,v2,... (repeatable)")->required();

    auto* dump = app.add_subcommand("schedule-dump", "sample A(t) over one period");
    add_common(dump, dump_opts, false);
    dump->add_option("--samples", dump_samples, "samples per period");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(run_opts);
        if (verify->parsed()) return cmd_verify(verify_opts);
        if (sweep->parsed()) return cmd_sweep(sweep_opts, vary);
        if (dump->parsed()) return cmd_schedule_dump(dump_opts, dump_samples);
    } catch (const ConfigError& e) {
        std::cerr << "error: config: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: io: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
