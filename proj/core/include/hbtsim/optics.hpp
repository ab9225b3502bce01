#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "hbtsim/polarization.hpp"

namespace hbtsim {

enum class PropagationMode {
  // Amplitude pinned to 1/nominal_distance, phase from the exact path length.
  far_field,
  // Amplitude 1/distance, same phase; for checking far-field validity.
  exact,
};

// Positions in meters. Source-detector distances must be positive; two
// detectors may coincide (a zero-baseline pair is a legitimate arrangement
// in which only the analyser geometry produces fringes).
struct Geometry {
  std::vector<Eigen::Vector3d> sources;
  std::vector<Eigen::Vector3d> detectors;
  double wavelength = 1e-6;        // meters
  double nominal_distance = 0.2;   // l, meters

  double wavenumber() const;             // 2*pi / wavelength
  double source_separation() const;      // max pairwise
  double detector_separation() const;    // max pairwise
  double min_source_detector_distance() const;
  // l >= factor * max(source span, detector span); the regime in which the
  // fixed-amplitude mode and the closed-form fringe formula are trusted.
  bool far_field_ok(double factor = 100.0) const;
  void validate() const;
};

// Scalar amplitude for source -> detector propagation. time_phase is the
// accumulated omega*t of the monochromatic time factor exp(-i omega t); it
// cancels identically in every equal-time correlator and exists so that the
// cancellation can be demonstrated rather than assumed.
Complex propagation_amplitude(const Geometry& g, int detector, int source,
                              PropagationMode mode = PropagationMode::far_field,
                              double time_phase = 0.0);

// Two-detector coincidence fringe for the canonical arrangement, one source
// analysed right circular and the other left circular, detectors analysed
// linear with relative angle phi34:
//
//     C = 3/2 + (1/2) cos[(r3 - r4) . (k2 - k1) + Omega/2]
//
// with k_i pointing from source i toward the detector centroid and Omega/2
// the lune phase delivered by the polarization module. Requires two sources,
// two detectors, and far-field geometry. The value lies in [1, 2].
double closed_form_coincidence(const Geometry& g, double phi34);

// The propagation part of the fringe phase, (r3 - r4) . (k2 - k1).
double closed_form_propagation_phase(const Geometry& g);

}  // namespace hbtsim
