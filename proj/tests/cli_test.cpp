#include <algorithm>
#include <filesystem>
#include <fstream>
#include <string>

#include <doctest.h>

#include "support/cli_runner.hpp"

namespace fs = std::filesystem;
using testsupport::run_cli;
using testsupport::scratch_dir;
using testsupport::slurp;

namespace {
const fs::path kDir = scratch_dir("hbtsim_cli_test");

std::string p(const char* name) { return (kDir / name).string(); }
}  // namespace

TEST_CASE("identical invocations produce byte-identical CSV") {
  REQUIRE(run_cli("sweep-phi --no-oracle --steps 32 --out " + p("a.csv")) ==
          0);
  REQUIRE(run_cli("sweep-phi --no-oracle --steps 32 --out " + p("b.csv")) ==
          0);
  const std::string a = slurp(kDir / "a.csv");
  REQUIRE_FALSE(a.empty());
  CHECK(a == slurp(kDir / "b.csv"));
  // The echoes record their own output paths; everything else must agree.
  const auto without_out_line = [](std::string text) {
    const std::size_t at = text.find("out = ");
    REQUIRE(at != std::string::npos);
    text.erase(at, text.find('\n', at) + 1 - at);
    return text;
  };
  CHECK(without_out_line(slurp(kDir / "a.csv.config")) ==
        without_out_line(slurp(kDir / "b.csv.config")));
}

TEST_CASE("the config echo reproduces the run") {
  REQUIRE(run_cli("entanglement-sweep --steps 12 --out " + p("e1.csv")) == 0);
  REQUIRE(run_cli("entanglement-sweep --config " + p("e1.csv.config") +
                  " --out " + p("e2.csv")) == 0);
  CHECK(slurp(kDir / "e1.csv") == slurp(kDir / "e2.csv"));
}

TEST_CASE("flags override the config file") {
  {
    std::ofstream cfg(kDir / "base.cfg");
    cfg << "steps = 4\nn_B = 0.05\n";
  }
  REQUIRE(run_cli("sweep-phi --no-oracle --config " + p("base.cfg") +
                  " --steps 7 --out " + p("o.csv")) == 0);
  const std::string echo = slurp(kDir / "o.csv.config");
  CHECK(echo.find("steps = 7") != std::string::npos);
  CHECK(echo.find("n_B = 0.05") != std::string::npos);
  const std::string csv = slurp(kDir / "o.csv");
  // Header plus seven rows.
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 8);
}

TEST_CASE("degree mode relabels the sweep") {
  REQUIRE(run_cli("sweep-phi --no-oracle --degrees --steps 4 --out " +
                  p("deg.csv")) == 0);
  const std::string csv = slurp(kDir / "deg.csv");
  CHECK(csv.find("phi34_deg,0,") != std::string::npos);
  CHECK(csv.find("phi34_deg,45,") != std::string::npos);
  CHECK(csv.find("phi34_deg,135,") != std::string::npos);
}

TEST_CASE("CSV goes to stdout when no output path is given") {
  REQUIRE(run_cli("sweep-phi --no-oracle --steps 2 > " + p("stdout.txt") +
                  " 2> " + p("stderr.txt")) == 0);
  const std::string out = slurp(kDir / "stdout.txt");
  CHECK(out.rfind("sweep_var,value,engine,closed_form,oracle,abs_dev\n", 0) ==
        0);
  CHECK(slurp(kDir / "stderr.txt").find("rows=2") != std::string::npos);
}

TEST_CASE("exit code 1 for config problems") {
  CHECK(run_cli("sweep-phi --config " + p("missing.cfg") +
                " 2> /dev/null") == 1);
  {
    std::ofstream cfg(kDir / "broken.cfg");
    cfg << "steps = banana\n";
  }
  CHECK(run_cli("sweep-phi --config " + p("broken.cfg") + " 2> /dev/null") ==
        1);
  {
    std::ofstream cfg(kDir / "empty_range.cfg");
    cfg << "sweep_start = 1.0\nsweep_stop = 1.0\n";
  }
  CHECK(run_cli("sweep-phi --config " + p("empty_range.cfg") +
                " 2> /dev/null") == 1);
  {
    std::ofstream cfg(kDir / "clash.cfg");
    cfg << "experiment = three-slit\n";
  }
  CHECK(run_cli("sweep-phi --config " + p("clash.cfg") + " 2> /dev/null") ==
        1);
  CHECK(run_cli("no-such-subcommand 2> /dev/null") == 1);
}

TEST_CASE("exit code 3 when the oracle exceeds its capacity") {
  CHECK(run_cli("sweep-phi --oracle --nmax 60 --steps 2 2> /dev/null > "
                "/dev/null") == 3);
}

TEST_CASE("selfcheck exit codes") {
  CHECK(run_cli("selfcheck --no-oracle > /dev/null") == 0);
  CHECK(run_cli("selfcheck --no-oracle --inject-fault flipped-handedness > " +
                p("fault.txt")) == 2);
  const std::string report = slurp(kDir / "fault.txt");
  CHECK(report.find("[FAIL] trace-solid-angle identity") !=
        std::string::npos);
  CHECK(report.find("[SKIP] truncated-Fock oracle") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli("--help > /dev/null") == 0);
  CHECK(run_cli("sweep-phi --help > /dev/null") == 0);
}
