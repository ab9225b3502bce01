#include "hbtsim/run.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <random>
#include <string_view>
#include <utility>

#include "hbtsim/correlator.hpp"
#include "hbtsim/entanglement.hpp"
#include "hbtsim/errors.hpp"
#include "hbtsim/fock_oracle.hpp"
#include "hbtsim/multislit.hpp"

namespace hbtsim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDeviationGate = 1e-9;

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt17(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::string_view kind_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::two_detector: return "two-detector";
    case ExperimentKind::entanglement: return "entanglement";
    case ExperimentKind::three_slit: return "three-slit";
  }
  return "two-detector";
}

[[noreturn]] void bad_line(int line, const std::string& message) {
  throw ConfigError("config line " + std::to_string(line) + ": " + message);
}

double parse_double(std::string_view v, int line) {
  double out = 0.0;
  const auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || end != v.data() + v.size()) {
    bad_line(line, "expected a number, got '" + std::string(v) + "'");
  }
  return out;
}

int parse_int(std::string_view v, int line) {
  int out = 0;
  const auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || end != v.data() + v.size()) {
    bad_line(line, "expected an integer, got '" + std::string(v) + "'");
  }
  return out;
}

bool parse_bool(std::string_view v, int line) {
  if (v == "true") return true;
  if (v == "false") return false;
  bad_line(line, "expected true or false, got '" + std::string(v) + "'");
}

double to_radians(const RunConfig& config, double angle) {
  return config.degrees ? angle * kPi / 180.0 : angle;
}

}  // namespace

RunConfig default_config(ExperimentKind kind) {
  RunConfig c;
  c.experiment = kind;
  switch (kind) {
    case ExperimentKind::two_detector:
      c.sweep_start = 0.0;
      c.sweep_stop = kPi;  // phi34 for sweep-phi; sweep-baseline overrides
      c.oracle = true;
      break;
    case ExperimentKind::entanglement:
      c.overlap = 1.0 / std::sqrt(2.0);
      c.sweep_start = 0.0;
      c.sweep_stop = 4.0 * kPi;
      c.oracle = true;
      break;
    case ExperimentKind::three_slit:
      c.d_D = 2e-5;
      c.chi_C = kPi / 4.0;
      c.sweep_start = 0.0;
      c.sweep_stop = kPi;
      // The truncated-Fock check costs seconds per row on three sources;
      // opt in with --oracle.
      c.oracle = false;
      break;
  }
  return c;
}

RunConfig parse_config(std::istream& in, ExperimentKind kind) {
  return parse_config(in, default_config(kind));
}

RunConfig parse_config(std::istream& in, const RunConfig& base) {
  const ExperimentKind kind = base.experiment;
  RunConfig c = base;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s(raw);
    if (const auto hash = s.find('#'); hash != std::string_view::npos) {
      s = s.substr(0, hash);
    }
    s = trimmed(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) {
      bad_line(line, "expected key = value");
    }
    const std::string_view key = trimmed(s.substr(0, eq));
    const std::string_view value = trimmed(s.substr(eq + 1));
    if (key.empty()) bad_line(line, "missing key");

    if (key == "experiment") {
      if (value != kind_name(kind)) {
        bad_line(line, "experiment '" + std::string(value) +
                           "' does not match this subcommand ('" +
                           std::string(kind_name(kind)) + "')");
      }
    } else if (key == "d_S") {
      c.d_S = parse_double(value, line);
    } else if (key == "d_D") {
      c.d_D = parse_double(value, line);
    } else if (key == "l") {
      c.l = parse_double(value, line);
    } else if (key == "lambda") {
      c.lambda = parse_double(value, line);
    } else if (key == "phi3") {
      c.phi3 = parse_double(value, line);
    } else if (key == "phi4") {
      c.phi4 = parse_double(value, line);
    } else if (key == "chi_C") {
      c.chi_C = parse_double(value, line);
    } else if (key == "n_B") {
      c.n_B = parse_double(value, line);
    } else if (key == "overlap") {
      c.overlap = parse_double(value, line);
    } else if (key == "sweep_start") {
      c.sweep_start = parse_double(value, line);
    } else if (key == "sweep_stop") {
      c.sweep_stop = parse_double(value, line);
    } else if (key == "steps") {
      c.steps = parse_int(value, line);
    } else if (key == "oracle") {
      c.oracle = parse_bool(value, line);
    } else if (key == "nmax") {
      c.nmax = parse_int(value, line);
    } else if (key == "degrees") {
      c.degrees = parse_bool(value, line);
    } else if (key == "out") {
      c.out = std::string(value);
    } else {
      bad_line(line, "unknown key '" + std::string(key) + "'");
    }
  }
  return c;
}

std::string serialize_config(const RunConfig& c) {
  std::string s;
  s += "experiment = " + std::string(kind_name(c.experiment)) + "\n";
  s += "d_S = " + fmt17(c.d_S) + "\n";
  s += "d_D = " + fmt17(c.d_D) + "\n";
  s += "l = " + fmt17(c.l) + "\n";
  s += "lambda = " + fmt17(c.lambda) + "\n";
  s += "phi3 = " + fmt17(c.phi3) + "\n";
  s += "phi4 = " + fmt17(c.phi4) + "\n";
  s += "chi_C = " + fmt17(c.chi_C) + "\n";
  s += "n_B = " + fmt17(c.n_B) + "\n";
  s += "overlap = " + fmt17(c.overlap) + "\n";
  s += "sweep_start = " + fmt17(c.sweep_start) + "\n";
  s += "sweep_stop = " + fmt17(c.sweep_stop) + "\n";
  s += "steps = " + std::to_string(c.steps) + "\n";
  s += "oracle = " + std::string(c.oracle ? "true" : "false") + "\n";
  s += "nmax = " + std::to_string(c.nmax) + "\n";
  s += "degrees = " + std::string(c.degrees ? "true" : "false") + "\n";
  s += "out = " + c.out + "\n";
  return s;
}

void validate_config(const RunConfig& c) {
  if (c.steps < 1) throw ConfigError("steps must be at least 1");
  if (!(c.sweep_stop > c.sweep_start)) {
    throw ConfigError("empty sweep range: sweep_stop must exceed sweep_start");
  }
  if (!(c.l > 0.0)) throw ConfigError("l must be positive");
  if (!(c.lambda > 0.0)) throw ConfigError("lambda must be positive");
  if (c.d_S < 0.0 || c.d_D < 0.0) {
    throw ConfigError("separations must be nonnegative");
  }
  if (!(c.n_B >= 0.0)) throw ConfigError("n_B must be nonnegative");
  if (c.overlap < 0.0 || c.overlap > 1.0) {
    throw ConfigError("overlap must lie in [0, 1]");
  }
  if (c.nmax < 1) throw ConfigError("nmax must be at least 1");
}

Geometry two_detector_geometry(double d_S, double d_D, double l,
                               double lambda) {
  Geometry g;
  g.wavelength = lambda;
  g.nominal_distance = l;
  g.sources = {Eigen::Vector3d(-0.5 * d_S, 0.0, 0.0),
               Eigen::Vector3d(0.5 * d_S, 0.0, 0.0)};
  g.detectors = {Eigen::Vector3d(-0.5 * d_D, 0.0, l),
                 Eigen::Vector3d(0.5 * d_D, 0.0, l)};
  return g;
}

Geometry three_slit_geometry(double d_S, double d_D, double l, double lambda) {
  Geometry g;
  g.wavelength = lambda;
  g.nominal_distance = l;
  g.sources = {Eigen::Vector3d(-d_S, 0.0, 0.0), Eigen::Vector3d(0.0, 0.0, 0.0),
               Eigen::Vector3d(d_S, 0.0, 0.0)};
  g.detectors = {Eigen::Vector3d(-d_D, 0.0, l), Eigen::Vector3d(0.0, 0.0, l),
                 Eigen::Vector3d(d_D, 0.0, l)};
  return g;
}

namespace {

std::vector<double> sweep_grid(const RunConfig& c) {
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(c.steps));
  const double step = (c.sweep_stop - c.sweep_start) / c.steps;
  for (int i = 0; i < c.steps; ++i) {
    values.push_back(c.sweep_start + i * step);
  }
  return values;
}

[[noreturn]] void rethrow_with_row(const std::exception& e, SweepKind kind,
                                   std::size_t row, double value) {
  const std::string context = "sweep row " + std::to_string(row) +
                              " (value " + fmt12(value) + "): " + e.what();
  (void)kind;
  if (dynamic_cast<const CapacityError*>(&e)) throw CapacityError(context);
  if (dynamic_cast<const DegenerateError*>(&e)) throw DegenerateError(context);
  if (dynamic_cast<const ConfigError*>(&e)) throw ConfigError(context);
  throw std::invalid_argument(context);
}

void finish_row(SweepResult* result, SweepRow row) {
  if (row.engine && row.closed_form) {
    row.abs_dev = std::abs(*row.engine - *row.closed_form);
    result->worst_deviation = std::max(result->worst_deviation, *row.abs_dev);
    if (*row.abs_dev > kDeviationGate) result->deviation_gate_failed = true;
  } else if (row.engine && row.oracle) {
    row.abs_dev = std::abs(*row.engine - *row.oracle);
  }
  result->rows.push_back(std::move(row));
}

SweepResult sweep_two_detector(const RunConfig& c, SweepKind kind) {
  SweepResult result;
  result.sweep_var = (kind == SweepKind::phi)
                         ? (c.degrees ? "phi34_deg" : "phi34_rad")
                         : "d_D_m";
  const double phi4 = to_radians(c, c.phi4);
  const double fixed_phi34 = to_radians(c, c.phi3) - phi4;
  const std::vector<double> grid = sweep_grid(c);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    SweepRow row;
    row.value = grid[i];
    try {
      const double phi34 =
          (kind == SweepKind::phi) ? to_radians(c, grid[i]) : fixed_phi34;
      const double d_D = (kind == SweepKind::phi) ? c.d_D : grid[i];
      const Geometry g = two_detector_geometry(c.d_S, d_D, c.l, c.lambda);
      const ExperimentSetup setup =
          canonical_setup(g, phi4 + phi34, phi4, c.n_B);
      row.engine = coincidence(setup);
      row.closed_form = closed_form_coincidence(g, phi34);
      if (c.oracle) row.oracle = fock_coincidence(setup, c.nmax).value;
    } catch (const std::exception& e) {
      rethrow_with_row(e, kind, i, grid[i]);
    }
    finish_row(&result, std::move(row));
  }
  result.summary.push_back(
      "rows=" + std::to_string(result.rows.size()) +
      " worst |engine-closed_form|=" + fmt12(result.worst_deviation));
  return result;
}

SweepResult sweep_entanglement(const RunConfig& c) {
  SweepResult result;
  result.sweep_var = c.degrees ? "omega_deg" : "omega_rad";
  const double x = c.overlap;
  const OrbitalState phi = OrbitalState::path_short();
  const OrbitalState psi(x, std::sqrt(std::max(0.0, 1.0 - x * x)));
  for (std::size_t i = 0; const double v : sweep_grid(c)) {
    SweepRow row;
    row.value = v;
    try {
      const double omega = to_radians(c, v);
      const TwoPhotonOrbitalState state = output_state(phi, psi, omega);
      row.engine = von_neumann_entropy(reduced_density(state, Subsystem::three));
      row.closed_form = output_entropy_closed_form(x, omega);
      if (c.oracle) row.oracle = schmidt_entropy(state);
    } catch (const std::exception& e) {
      rethrow_with_row(e, SweepKind::entanglement, i, v);
    }
    finish_row(&result, std::move(row));
    ++i;
  }
  result.summary.push_back(
      "rows=" + std::to_string(result.rows.size()) +
      " worst |engine-closed_form|=" + fmt12(result.worst_deviation));
  return result;
}

SweepResult sweep_three_slit(const RunConfig& c) {
  SweepResult result;
  result.sweep_var = c.degrees ? "chi_deg" : "chi_rad";
  const Geometry g = three_slit_geometry(c.d_S, c.d_D, c.l, c.lambda);
  const PolarizationState state_a = PolarizationState::linear(0.0);
  const PolarizationState state_b =
      PolarizationState::circular(Handedness::right);
  for (std::size_t i = 0; const double v : sweep_grid(c)) {
    SweepRow row;
    row.value = v;
    try {
      const ExperimentSetup setup = triple_setup(
          g, state_a, state_b, PolarizationState::linear(to_radians(c, v)),
          c.n_B);
      row.engine = triple_coincidence(setup);
      if (c.oracle) {
        const int triple[] = {0, 1, 2};
        row.oracle =
            fock_normally_ordered_moment(setup, triple, c.nmax).value;
      }
    } catch (const std::exception& e) {
      rethrow_with_row(e, SweepKind::three_slit, i, v);
    }
    finish_row(&result, std::move(row));
    ++i;
  }
  result.summary.push_back("rows=" + std::to_string(result.rows.size()));

  // The headline quantity of this arrangement is the recovered triangle
  // phase; report it against the polarization module's half solid angle.
  const PolarizationState state_c =
      PolarizationState::linear(to_radians(c, c.chi_C));
  const GeometricIsolation iso =
      geometric_isolation(triple_setup(g, state_a, state_b, state_c, c.n_B));
  if (iso.degenerate) {
    result.summary.push_back("isolation at chi_C=" + fmt12(c.chi_C) +
                             ": degenerate (no enclosed solid angle), |tau|=" +
                             fmt12(iso.magnitude));
  } else {
    const std::array<PolarizationState, 3> triangle{state_a, state_b, state_c};
    const double half_area = 0.5 * circuit_solid_angle(
        std::span<const PolarizationState>(triangle));
    const double dev =
        std::abs(std::remainder(iso.phase - half_area, 2.0 * kPi));
    result.summary.push_back("isolation at chi_C=" + fmt12(c.chi_C) +
                             ": phase=" + fmt12(iso.phase) +
                             " rad, |tau|=" + fmt12(iso.magnitude) +
                             ", half-solid-angle=" + fmt12(half_area) +
                             " rad, dev=" + fmt12(dev));
  }
  return result;
}

}  // namespace

SweepResult run_sweep(const RunConfig& c, SweepKind kind) {
  validate_config(c);
  const ExperimentKind wanted =
      (kind == SweepKind::entanglement) ? ExperimentKind::entanglement
      : (kind == SweepKind::three_slit) ? ExperimentKind::three_slit
                                        : ExperimentKind::two_detector;
  if (c.experiment != wanted) {
    throw ConfigError("config experiment kind does not match the sweep");
  }
  switch (kind) {
    case SweepKind::phi:
    case SweepKind::baseline:
      return sweep_two_detector(c, kind);
    case SweepKind::entanglement:
      return sweep_entanglement(c);
    case SweepKind::three_slit:
      return sweep_three_slit(c);
  }
  throw ConfigError("unreachable sweep kind");
}

std::string render_csv(const SweepResult& result) {
  std::string csv = "sweep_var,value,engine,closed_form,oracle,abs_dev\n";
  const auto cell = [](const std::optional<double>& v) {
    return v ? fmt12(*v) : std::string();
  };
  for (const SweepRow& row : result.rows) {
    csv += result.sweep_var;
    csv += ',';
    csv += fmt12(row.value);
    csv += ',';
    csv += cell(row.engine);
    csv += ',';
    csv += cell(row.closed_form);
    csv += ',';
    csv += cell(row.oracle);
    csv += ',';
    csv += cell(row.abs_dev);
    csv += '\n';
  }
  return csv;
}

bool CheckReport::all_passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) {
    return e.status != CheckStatus::fail;
  });
}

namespace {

CheckEntry check_trace_identity(ConventionFault fault) {
  CheckEntry entry{"trace-solid-angle identity", CheckStatus::pass, ""};
  double worst = 0.0;

  const bool flipped = fault == ConventionFault::flipped_handedness;
  const PolarizationState trace_north =
      PolarizationState::circular(flipped ? Handedness::left
                                          : Handedness::right);
  const PolarizationState trace_south =
      PolarizationState::circular(flipped ? Handedness::right
                                          : Handedness::left);
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 10; ++j) {
      const double phi3 = i * kPi / 20.0;
      const double phi4 = j * kPi / 10.0;
      const std::array<PolarizationState, 4> trace_side{
          trace_north, PolarizationState::linear(phi3), trace_south,
          PolarizationState::linear(phi4)};
      const std::array<PolarizationState, 4> area_side{
          PolarizationState::circular(Handedness::right),
          PolarizationState::linear(phi3),
          PolarizationState::circular(Handedness::left),
          PolarizationState::linear(phi4)};
      const auto trace = pancharatnam_trace(
          std::span<const PolarizationState>(trace_side));
      const double area =
          circuit_solid_angle(std::span<const PolarizationState>(area_side));
      worst = std::max(
          worst, mod_4pi_deviation(2.0 * std::arg(trace.value), area));
    }
  }

  std::mt19937 rng(482791u);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_int_distribution<int> length(3, 6);
  int done = 0;
  while (done < 200) {
    const int n = length(rng);
    std::vector<PolarizationState> circuit;
    while (static_cast<int>(circuit.size()) < n) {
      Eigen::Vector3d v(unit(rng), unit(rng), unit(rng));
      if (v.norm() < 0.1) continue;
      v.normalize();
      const PolarizationState s = state_at(PoincarePoint{v.x(), v.y(), v.z()});
      circuit.push_back(s);
    }
    // Respect the geodesic precondition: skip circuits with a near-antipodal
    // consecutive pair, where neither side is well defined.
    bool ok = true;
    for (std::size_t i = 0; i < circuit.size(); ++i) {
      const Complex ov =
          circuit[i].overlap(circuit[(i + 1) % circuit.size()]);
      if (std::abs(ov) < 1e-3) ok = false;
    }
    if (!ok) continue;
    ++done;
    const auto trace =
        pancharatnam_trace(std::span<const PolarizationState>(circuit));
    const double area =
        circuit_solid_angle(std::span<const PolarizationState>(circuit));
    worst =
        std::max(worst, mod_4pi_deviation(2.0 * std::arg(trace.value), area));
  }

  entry.detail = "max mod-4pi deviation " + fmt12(worst) +
                 " over 200 lune + 200 random circuits";
  if (worst > kDeviationGate) entry.status = CheckStatus::fail;
  return entry;
}

CheckEntry check_closed_form_grid() {
  CheckEntry entry{"engine matches closed-form fringe", CheckStatus::pass, ""};
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      const double phi34 = i * kPi / 10.0;
      const double d_D = j * 5e-6;
      const Geometry g = two_detector_geometry(5e-5, d_D, 0.2, 1e-6);
      const ExperimentSetup setup = canonical_setup(g, phi34, 0.0, 0.1);
      worst = std::max(worst, std::abs(coincidence(setup) -
                                       closed_form_coincidence(g, phi34)));
    }
  }
  entry.detail = "max |engine - closed form| " + fmt12(worst) +
                 " over 100 configurations";
  if (worst > kDeviationGate) entry.status = CheckStatus::fail;
  return entry;
}

CheckEntry check_oracle(bool oracle_enabled) {
  CheckEntry entry{"truncated-Fock oracle agreement", CheckStatus::pass, ""};
  if (!oracle_enabled) {
    entry.status = CheckStatus::skip;
    entry.detail = "oracle disabled";
    return entry;
  }
  std::mt19937 rng(77152u);
  std::uniform_real_distribution<double> sep(1e-5, 5e-5);
  std::uniform_real_distribution<double> angle(0.0, kPi);
  std::uniform_real_distribution<double> occupation(0.05, 0.2);
  double worst_mean_excess = 0.0;   // beyond the reported truncation error
  double worst_coincidence = 0.0;  // relative
  for (int trial = 0; trial < 10; ++trial) {
    const Geometry g =
        two_detector_geometry(sep(rng), sep(rng), 0.2, 1e-6);
    const ExperimentSetup setup =
        canonical_setup(g, angle(rng), angle(rng), occupation(rng));
    for (int d = 0; d < 2; ++d) {
      const FockOracleResult mean = fock_mean_count(setup, d);
      const double excess =
          std::abs(mean.value - mean_count(setup, d)) - mean.truncation_error;
      worst_mean_excess = std::max(worst_mean_excess, excess);
    }
    const FockOracleResult c = fock_coincidence(setup);
    worst_coincidence =
        std::max(worst_coincidence,
                 std::abs(c.value - coincidence(setup)) /
                     std::abs(coincidence(setup)));
  }
  entry.detail = "worst mean deviation beyond reported truncation error " +
                 fmt12(worst_mean_excess) + "; worst relative coincidence " +
                 fmt12(worst_coincidence) + " over 10 random setups";
  if (worst_mean_excess > 0.0 || worst_coincidence > 1e-3) {
    entry.status = CheckStatus::fail;
  }
  return entry;
}

CheckEntry check_sorkin() {
  CheckEntry entry{"three-slit inclusion-exclusion residual", CheckStatus::pass,
                   ""};
  std::mt19937 rng(905311u);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const SlitAmplitudes amps{Complex(unit(rng), unit(rng)),
                              Complex(unit(rng), unit(rng)),
                              Complex(unit(rng), unit(rng))};
    worst = std::max(worst, std::abs(sorkin_parameter(amps)));
  }
  entry.detail = "max |epsilon| " + fmt12(worst) + " over 1000 random triples";
  if (worst > 1e-12) entry.status = CheckStatus::fail;
  return entry;
}

CheckEntry check_local_flatness() {
  CheckEntry entry{"counts and self-correlations blind to the far analyser",
                   CheckStatus::pass, ""};
  const Geometry g = two_detector_geometry(5e-5, 0.0, 0.2, 1e-6);
  double mean_lo = 1e300, mean_hi = -1e300;
  double self_lo = 1e300, self_hi = -1e300;
  double c_lo = 1e300, c_hi = -1e300;
  for (int i = 0; i < 64; ++i) {
    const double phi34 = i * kPi / 64.0;
    const ExperimentSetup setup = canonical_setup(g, phi34, 0.0, 0.1);
    const double mean = mean_count(setup, 1);
    const double self = self_correlation(setup, 1);
    const double cross = coincidence(setup);
    mean_lo = std::min(mean_lo, mean);
    mean_hi = std::max(mean_hi, mean);
    self_lo = std::min(self_lo, self);
    self_hi = std::max(self_hi, self);
    c_lo = std::min(c_lo, cross);
    c_hi = std::max(c_hi, cross);
  }
  const double flat = std::max(mean_hi - mean_lo, self_hi - self_lo);
  const double swing = c_hi - c_lo;
  entry.detail = "local spread " + fmt12(flat) +
                 "; cross-correlation swing " + fmt12(swing);
  if (flat > 1e-12 || std::abs(swing - 1.0) > kDeviationGate) {
    entry.status = CheckStatus::fail;
  }
  return entry;
}

}  // namespace

CheckReport run_selfcheck(bool oracle_enabled, ConventionFault fault) {
  CheckReport report;
  report.entries.push_back(check_trace_identity(fault));
  report.entries.push_back(check_closed_form_grid());
  report.entries.push_back(check_oracle(oracle_enabled));
  report.entries.push_back(check_sorkin());
  report.entries.push_back(check_local_flatness());
  return report;
}

}  // namespace hbtsim
