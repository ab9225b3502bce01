#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hbtsim/optics.hpp"

namespace hbtsim {

enum class ExperimentKind { two_detector, entanglement, three_slit };

// Flat run description. Angle-valued fields (phi3, phi4, chi_C, and the
// sweep bounds of angle sweeps) are stored in the unit selected by
// `degrees` and converted to radians only when the experiment is built;
// lengths are always meters. Sweep grids are start + i * (stop - start) /
// steps for i in [0, steps), stop excluded, so that periodic sweeps do not
// repeat their first point.
struct RunConfig {
  ExperimentKind experiment = ExperimentKind::two_detector;

  double d_S = 5e-5;      // source separation, meters
  double d_D = 0.0;       // detector separation (baseline), meters
  double l = 0.2;         // source-to-detector distance, meters
  double lambda = 1e-6;   // wavelength, meters

  double phi3 = 0.0;      // detector-3 analyser angle
  double phi4 = 0.0;      // detector-4 analyser angle
  double chi_C = 0.0;     // three-slit: analyser-C angle for the summary
  double n_B = 0.1;       // mean occupation per source mode
  double overlap = 0.0;   // entanglement: |<phi|psi>|

  double sweep_start = 0.0;
  double sweep_stop = 0.0;
  int steps = 64;

  bool oracle = true;
  int nmax = 6;
  bool degrees = false;
  std::string out;
};

// Per-experiment defaults; the sweep bounds come out nonempty.
RunConfig default_config(ExperimentKind kind);

// key = value lines over the defaults for `kind`; '#' starts a comment.
// Unknown keys, malformed values, and re-declared experiments that clash
// with `kind` raise ConfigError with the offending line number. The second
// form layers the file over an explicit base config instead of the stock
// defaults (the CLI uses it to reseed sweep bounds per subcommand).
RunConfig parse_config(std::istream& in, ExperimentKind kind);
RunConfig parse_config(std::istream& in, const RunConfig& base);

// Echo that parse_config maps back to the same config (doubles are printed
// round-trippably).
std::string serialize_config(const RunConfig& config);

// Raises ConfigError on an empty sweep range, nonpositive step count, or
// out-of-range scalars. Called by run_sweep; exposed for early validation.
void validate_config(const RunConfig& config);

struct SweepRow {
  double value = 0.0;
  std::optional<double> engine;
  std::optional<double> closed_form;
  std::optional<double> oracle;
  std::optional<double> abs_dev;
};

struct SweepResult {
  std::string sweep_var;
  std::vector<SweepRow> rows;
  // Largest |engine - closed_form| over rows carrying both, and whether it
  // broke the 1e-9 agreement gate.
  double worst_deviation = 0.0;
  bool deviation_gate_failed = false;
  std::vector<std::string> summary;
};

enum class SweepKind { phi, baseline, entanglement, three_slit };

SweepResult run_sweep(const RunConfig& config, SweepKind kind);

// The CSV contract: fixed header, 12 significant digits, absent values as
// empty fields, one row per grid point in grid order.
std::string render_csv(const SweepResult& result);

// Canonical layouts behind the CLI. Two-detector: sources on the x axis a
// distance d_S apart, detectors d_D apart on a parallel line at z = l,
// both pairs centred on the axis. Three-slit: the same with three evenly
// spaced sources and detectors.
Geometry two_detector_geometry(double d_S, double d_D, double l,
                               double lambda);
Geometry three_slit_geometry(double d_S, double d_D, double l, double lambda);

// Fault injection for the selfcheck: flipped_handedness swaps right and
// left circular on the trace side of the identity check only, a stand-in
// for the classic convention slip the check exists to catch.
enum class ConventionFault { none, flipped_handedness };

enum class CheckStatus { pass, fail, skip };

struct CheckEntry {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckEntry> entries;
  bool all_passed() const;
};

CheckReport run_selfcheck(bool oracle_enabled,
                          ConventionFault fault = ConventionFault::none);

}  // namespace hbtsim
