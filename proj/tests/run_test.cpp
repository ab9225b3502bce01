#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include <doctest.h>

#include "hbtsim/errors.hpp"
#include "hbtsim/run.hpp"

using namespace hbtsim;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("per-experiment defaults") {
  const RunConfig two = default_config(ExperimentKind::two_detector);
  CHECK(two.d_S == 5e-5);
  CHECK(two.d_D == 0.0);
  CHECK(two.sweep_stop == doctest::Approx(kPi));
  CHECK(two.oracle);
  CHECK(two.nmax == 6);

  const RunConfig ent = default_config(ExperimentKind::entanglement);
  CHECK(ent.overlap == doctest::Approx(1.0 / std::numbers::sqrt2));
  CHECK(ent.sweep_stop == doctest::Approx(4.0 * kPi));

  const RunConfig three = default_config(ExperimentKind::three_slit);
  CHECK(three.chi_C == doctest::Approx(kPi / 4));
  CHECK_FALSE(three.oracle);
  CHECK(three.d_D == 2e-5);
}

TEST_CASE("config parsing") {
  std::istringstream in(
      "# comment line\n"
      "\n"
      "d_S = 3e-5   # trailing comment\n"
      "  steps=10\n"
      "oracle = false\n"
      "experiment = two-detector\n"
      "out = /tmp/some.csv\n");
  const RunConfig c = parse_config(in, ExperimentKind::two_detector);
  CHECK(c.d_S == 3e-5);
  CHECK(c.steps == 10);
  CHECK_FALSE(c.oracle);
  CHECK(c.out == "/tmp/some.csv");
  CHECK(c.d_D == 0.0);  // untouched default
}

TEST_CASE("config parse diagnostics carry line numbers") {
  const auto expect_error = [](const char* text, const char* needle) {
    std::istringstream in(text);
    try {
      parse_config(in, ExperimentKind::two_detector);
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_error("d_S = 3e-5\nbogus_key = 1\n", "line 2");
  expect_error("d_S = 3e-5\nbogus_key = 1\n", "bogus_key");
  expect_error("steps = soon\n", "integer");
  expect_error("oracle = yes\n", "true or false");
  expect_error("d_S\n", "key = value");
  expect_error("experiment = entanglement\n", "does not match");
  expect_error("d_S = 3e-5 trailing\n", "number");
}

TEST_CASE("config round trip is exact") {
  RunConfig c = default_config(ExperimentKind::entanglement);
  c.overlap = 0.123456789012345678;
  c.sweep_start = kPi / 7.0;
  c.steps = 17;
  c.out = "result.csv";
  const std::string echo = serialize_config(c);
  std::istringstream in(echo);
  const RunConfig back = parse_config(in, ExperimentKind::entanglement);
  CHECK(serialize_config(back) == echo);
  CHECK(back.overlap == c.overlap);
  CHECK(back.sweep_start == c.sweep_start);
}

TEST_CASE("config validation") {
  RunConfig c = default_config(ExperimentKind::two_detector);
  CHECK_NOTHROW(validate_config(c));
  c.steps = 0;
  CHECK_THROWS_AS(validate_config(c), ConfigError);
  c = default_config(ExperimentKind::two_detector);
  c.sweep_stop = c.sweep_start;
  CHECK_THROWS_AS(validate_config(c), ConfigError);
  c = default_config(ExperimentKind::entanglement);
  c.overlap = 1.5;
  CHECK_THROWS_AS(validate_config(c), ConfigError);
  c = default_config(ExperimentKind::two_detector);
  c.n_B = -0.1;
  CHECK_THROWS_AS(validate_config(c), ConfigError);
  c = default_config(ExperimentKind::two_detector);
  c.experiment = ExperimentKind::entanglement;
  CHECK_THROWS_AS(run_sweep(c, SweepKind::phi), ConfigError);
}

TEST_CASE("phi sweep grid and fringe range") {
  RunConfig c = default_config(ExperimentKind::two_detector);
  c.oracle = false;
  const SweepResult result = run_sweep(c, SweepKind::phi);
  CHECK(result.sweep_var == "phi34_rad");
  REQUIRE(result.rows.size() == 64);
  CHECK(result.rows[0].value == 0.0);
  CHECK(result.rows[32].value == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(*result.rows[0].engine == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(*result.rows[32].engine == doctest::Approx(1.0).epsilon(1e-9));
  double lo = 3.0, hi = 0.0;
  for (const SweepRow& row : result.rows) {
    REQUIRE(row.engine.has_value());
    REQUIRE(row.closed_form.has_value());
    CHECK_FALSE(row.oracle.has_value());
    lo = std::min(lo, *row.engine);
    hi = std::max(hi, *row.engine);
  }
  CHECK(lo == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(hi == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(result.worst_deviation < 1e-9);
  CHECK_FALSE(result.deviation_gate_failed);
}

TEST_CASE("sweeps are deterministic") {
  RunConfig c = default_config(ExperimentKind::two_detector);
  c.steps = 16;
  const std::string a = render_csv(run_sweep(c, SweepKind::phi));
  const std::string b = render_csv(run_sweep(c, SweepKind::phi));
  CHECK(a == b);
}

TEST_CASE("CSV schema") {
  RunConfig c = default_config(ExperimentKind::two_detector);
  c.steps = 3;
  c.oracle = false;
  const std::string csv = render_csv(run_sweep(c, SweepKind::phi));
  CHECK(csv.rfind("sweep_var,value,engine,closed_form,oracle,abs_dev\n", 0) ==
        0);
  std::istringstream lines(csv);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    CHECK(std::count(line.begin(), line.end(), ',') == 5);
    ++rows;
  }
  CHECK(rows == 4);
  // A disabled oracle leaves its field empty, not omitted.
  CHECK(csv.find(",,") != std::string::npos);
  // 12 significant digits.
  CHECK(csv.find("1.04719755120") == std::string::npos);
  CHECK(csv.find("1.0471975512") != std::string::npos);
}

TEST_CASE("degree mode relabels and rescales angle sweeps") {
  RunConfig c = default_config(ExperimentKind::two_detector);
  c.degrees = true;
  c.sweep_start = 0.0;
  c.sweep_stop = 180.0;
  c.steps = 4;
  c.oracle = false;
  const SweepResult result = run_sweep(c, SweepKind::phi);
  CHECK(result.sweep_var == "phi34_deg");
  CHECK(result.rows[1].value == doctest::Approx(45.0));
  CHECK(*result.rows[1].engine == doctest::Approx(1.5).epsilon(1e-9));
}

TEST_CASE("baseline sweep is labeled in meters and stays on the gate") {
  RunConfig c = default_config(ExperimentKind::two_detector);
  c.sweep_start = 0.0;
  c.sweep_stop = 5e-5;
  c.steps = 10;
  c.oracle = false;
  c.phi3 = 0.4;
  const SweepResult result = run_sweep(c, SweepKind::baseline);
  CHECK(result.sweep_var == "d_D_m");
  for (const SweepRow& row : result.rows) {
    CHECK(*row.abs_dev < 1e-9);
  }
  CHECK_FALSE(result.deviation_gate_failed);
}

TEST_CASE("entanglement sweep carries the Schmidt-route oracle") {
  RunConfig c = default_config(ExperimentKind::entanglement);
  c.steps = 8;
  const SweepResult result = run_sweep(c, SweepKind::entanglement);
  CHECK(result.sweep_var == "omega_rad");
  for (const SweepRow& row : result.rows) {
    REQUIRE(row.oracle.has_value());
    CHECK(std::abs(*row.engine - *row.oracle) < 1e-10);
  }
  // Entropy must actually move with omega at partial overlap.
  double lo = 2.0, hi = 0.0;
  for (const SweepRow& row : result.rows) {
    lo = std::min(lo, *row.engine);
    hi = std::max(hi, *row.engine);
  }
  CHECK(hi - lo > 0.05);
}

TEST_CASE("failures inside a sweep carry row context") {
  RunConfig c = default_config(ExperimentKind::entanglement);
  c.overlap = 1.0;
  c.sweep_start = 2.0 * kPi;
  c.sweep_stop = 2.0 * kPi + 1.0;
  c.steps = 2;
  try {
    run_sweep(c, SweepKind::entanglement);
    FAIL("expected DegenerateError");
  } catch (const DegenerateError& e) {
    CHECK(std::string(e.what()).find("sweep row 0") != std::string::npos);
  }
}

TEST_CASE("three-slit sweep reports the isolation summary") {
  RunConfig c = default_config(ExperimentKind::three_slit);
  c.steps = 5;
  const SweepResult result = run_sweep(c, SweepKind::three_slit);
  CHECK(result.sweep_var == "chi_rad");
  for (const SweepRow& row : result.rows) {
    REQUIRE(row.engine.has_value());
    CHECK_FALSE(row.closed_form.has_value());
    CHECK_FALSE(row.abs_dev.has_value());
  }
  REQUIRE(result.summary.size() == 2);
  CHECK(result.summary[1].find("isolation at chi_C") != std::string::npos);
  CHECK(result.summary[1].find("half-solid-angle=0.785398163397") !=
        std::string::npos);
}

TEST_CASE("three-slit oracle rows converge toward the engine") {
  // A third-order moment weights the photon-number tail by n^3, so low
  // cutoffs sit percent-level off; what matters is steady convergence.
  RunConfig c = default_config(ExperimentKind::three_slit);
  c.steps = 2;
  c.oracle = true;
  c.nmax = 3;
  const SweepResult coarse = run_sweep(c, SweepKind::three_slit);
  c.nmax = 4;
  const SweepResult fine = run_sweep(c, SweepKind::three_slit);
  REQUIRE(coarse.rows.size() == fine.rows.size());
  for (std::size_t i = 0; i < coarse.rows.size(); ++i) {
    REQUIRE(coarse.rows[i].oracle.has_value());
    REQUIRE(fine.rows[i].oracle.has_value());
    const double engine = *coarse.rows[i].engine;
    const double rel3 = std::abs(*coarse.rows[i].oracle - engine) / engine;
    const double rel4 = std::abs(*fine.rows[i].oracle - engine) / engine;
    CHECK(rel3 < 0.1);
    CHECK(rel4 < 0.5 * rel3);
  }
}
