#include "hbtsim/optics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "hbtsim/errors.hpp"

namespace hbtsim {

namespace {

double max_pairwise(const std::vector<Eigen::Vector3d>& pts) {
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      best = std::max(best, (pts[i] - pts[j]).norm());
    }
  }
  return best;
}

}  // namespace

double Geometry::wavenumber() const { return 2.0 * std::numbers::pi / wavelength; }

double Geometry::source_separation() const { return max_pairwise(sources); }

double Geometry::detector_separation() const { return max_pairwise(detectors); }

double Geometry::min_source_detector_distance() const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : sources) {
    for (const auto& d : detectors) {
      best = std::min(best, (d - s).norm());
    }
  }
  return best;
}

bool Geometry::far_field_ok(double factor) const {
  const double span = std::max(source_separation(), detector_separation());
  return nominal_distance >= factor * span;
}

void Geometry::validate() const {
  if (sources.empty() || detectors.empty()) {
    throw std::invalid_argument("geometry needs at least one source and one detector");
  }
  if (!(wavelength > 0.0) || !std::isfinite(wavelength)) {
    throw std::invalid_argument("wavelength must be positive and finite");
  }
  if (!(nominal_distance > 0.0) || !std::isfinite(nominal_distance)) {
    throw std::invalid_argument("nominal distance must be positive and finite");
  }
  if (!(min_source_detector_distance() > 0.0)) {
    throw std::invalid_argument("source and detector positions must not coincide");
  }
}

Complex propagation_amplitude(const Geometry& g, int detector, int source,
                              PropagationMode mode, double time_phase) {
  if (detector < 0 || source < 0 ||
      static_cast<std::size_t>(detector) >= g.detectors.size() ||
      static_cast<std::size_t>(source) >= g.sources.size()) {
    throw std::invalid_argument("propagation_amplitude: index out of range");
  }
  const double r = (g.detectors[detector] - g.sources[source]).norm();
  if (!(r > 0.0)) {
    throw std::invalid_argument("propagation requires a positive path length");
  }
  const double amp =
      (mode == PropagationMode::far_field) ? 1.0 / g.nominal_distance : 1.0 / r;
  return std::polar(amp, g.wavenumber() * r - time_phase);
}

double closed_form_propagation_phase(const Geometry& g) {
  if (g.sources.size() != 2 || g.detectors.size() != 2) {
    throw std::invalid_argument("the closed form covers two sources and two detectors");
  }
  g.validate();
  if (!g.far_field_ok()) {
    throw ConfigError("closed-form fringe requested outside the far-field regime");
  }
  const Eigen::Vector3d centroid = 0.5 * (g.detectors[0] + g.detectors[1]);
  const double k = g.wavenumber();
  const Eigen::Vector3d k1 = k * (centroid - g.sources[0]).normalized();
  const Eigen::Vector3d k2 = k * (centroid - g.sources[1]).normalized();
  return (g.detectors[0] - g.detectors[1]).dot(k2 - k1);
}

double closed_form_coincidence(const Geometry& g, double phi34) {
  // Half the lune solid angle, taken from the projector algebra so that a
  // single convention source feeds both the engine and this formula.
  const std::array<Projector, 4> lune{
      Projector::onto(PolarizationState::circular(Handedness::right)),
      Projector::onto(PolarizationState::linear(phi34)),
      Projector::onto(PolarizationState::circular(Handedness::left)),
      Projector::onto(PolarizationState::linear(0.0)),
  };
  const double half_omega = std::arg(pancharatnam_trace(lune).value);
  return 1.5 + 0.5 * std::cos(closed_form_propagation_phase(g) + half_omega);
}

}  // namespace hbtsim
