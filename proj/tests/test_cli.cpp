#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const std::string kTool = CIRCUMNAV_TOOL_PATH;
const std::string kConfigDir = CIRCUMNAV_CONFIG_DIR;

int run_cli(const std::string& args)
{
    const std::string cmd = "\"" + kTool + "\" " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path fresh_dir(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / ("circumnav_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string first_line(const fs::path& p)
{
    std::ifstream in(p);
    std::string line;
    std::getline(in, line);
    return line;
}

}  // namespace

TEST_CASE("run writes the full artifact set and exits 0")
{
    const fs::path dir = fresh_dir("run");
    const int rc = run_cli("run --config \"" + kConfigDir + "/baseline.cfg\"" +
                           " --set duration=2 --quiet --out \"" + dir.string() + "\"");
    CHECK(rc == 0);
    CHECK(fs::exists(dir / "trajectory.csv"));
    CHECK(fs::exists(dir / "report.txt"));
    CHECK(fs::exists(dir / "config.cfg"));
    CHECK(fs::exists(dir / "dist.dat"));
    CHECK(fs::exists(dir / "xtilde.dat"));
    CHECK(fs::exists(dir / "path.dat"));

    CHECK(first_line(dir / "trajectory.csv") ==
          "t,y_1,y_2,xhat_1,xhat_2,x_1,x_2,D_true,D_measured,D_hat,xtilde_norm,L");
    CHECK(slurp(dir / "report.txt").find("residual_decay_rate") != std::string::npos);
    // The snapshot records the applied override.
    CHECK(slurp(dir / "config.cfg").find("duration = 2") != std::string::npos);
}

TEST_CASE("a malformed config exits 2 without writing artifacts")
{
    const fs::path dir = fresh_dir("badcfg");
    const fs::path bad = dir / "bad.cfg";
    std::ofstream(bad) << "dimension = 5\n";
    const int rc = run_cli("run --config \"" + bad.string() + "\" --out \"" +
                           (dir / "out").string() + "\"");
    CHECK(rc == 2);
    CHECK_FALSE(fs::exists(dir / "out" / "trajectory.csv"));
}

TEST_CASE("a missing config file exits 3")
{
    CHECK(run_cli("run --config /nonexistent/nope.cfg") == 3);
}

TEST_CASE("runs are byte-identical for the same seed")
{
    const fs::path a = fresh_dir("det_a");
    const fs::path b = fresh_dir("det_b");
    const fs::path c = fresh_dir("det_c");
    const std::string base = "run --config \"" + kConfigDir +
                             "/noise.cfg\" --set duration=1 --quiet";
    CHECK(run_cli(base + " --seed 5 --out \"" + a.string() + "\"") == 0);
    CHECK(run_cli(base + " --seed 5 --out \"" + b.string() + "\"") == 0);
    CHECK(run_cli(base + " --seed 6 --out \"" + c.string() + "\"") == 0);
    CHECK(slurp(a / "trajectory.csv") == slurp(b / "trajectory.csv"));
    CHECK(slurp(a / "trajectory.csv") != slurp(c / "trajectory.csv"));
}

TEST_CASE("schedule-dump samples one full period")
{
    const fs::path dir = fresh_dir("dump");
    const int rc = run_cli("schedule-dump --config \"" + kConfigDir +
                           "/spatial3d.cfg\" --samples 100 --quiet --out \"" +
                           dir.string() + "\"");
    CHECK(rc == 0);
    REQUIRE(fs::exists(dir / "schedule.csv"));
    CHECK(first_line(dir / "schedule.csv") ==
          "t,a_11,a_12,a_13,a_21,a_22,a_23,a_31,a_32,a_33");
    std::ifstream in(dir / "schedule.csv");
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 102);  // header + 101 samples
}

TEST_CASE("sweep writes one report per grid cell")
{
    const fs::path dir = fresh_dir("sweep");
    const int rc = run_cli("sweep --config \"" + kConfigDir + "/baseline.cfg\"" +
                           " --set duration=1 --vary gains.gamma=1,2 --quiet --out \"" +
                           dir.string() + "\"");
    CHECK(rc == 0);
    CHECK(fs::exists(dir / "report_gains-gamma_1.txt"));
    CHECK(fs::exists(dir / "report_gains-gamma_2.txt"));
}

TEST_CASE("unknown override keys are rejected")
{
    CHECK(run_cli("run --config \"" + kConfigDir + "/baseline.cfg\" --set no.such.key=1") == 2);
}
