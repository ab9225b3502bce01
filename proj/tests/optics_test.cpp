#include <cmath>
#include <numbers>

#include <doctest.h>

#include "hbtsim/errors.hpp"
#include "hbtsim/optics.hpp"
#include "hbtsim/run.hpp"

using namespace hbtsim;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("geometry validation") {
  Geometry g = two_detector_geometry(5e-5, 0.0, 0.2, 1e-6);
  CHECK_NOTHROW(g.validate());

  Geometry empty = g;
  empty.sources.clear();
  CHECK_THROWS_AS(empty.validate(), std::invalid_argument);

  Geometry bad_lambda = g;
  bad_lambda.wavelength = 0.0;
  CHECK_THROWS_AS(bad_lambda.validate(), std::invalid_argument);

  Geometry coincident = g;
  coincident.detectors[0] = coincident.sources[0];
  CHECK_THROWS_AS(coincident.validate(), std::invalid_argument);
}

TEST_CASE("far-field test sits exactly at the 100x threshold") {
  Geometry g = two_detector_geometry(1e-3, 0.0, 0.1, 1e-6);
  CHECK(g.far_field_ok());             // l = 100 * d_S exactly
  g.nominal_distance = 0.1 - 1e-6;
  CHECK_FALSE(g.far_field_ok());
  CHECK(g.far_field_ok(50.0));
}

TEST_CASE("separation helpers report the max pairwise span") {
  const Geometry g = three_slit_geometry(3e-5, 1e-5, 0.2, 1e-6);
  CHECK(g.source_separation() == doctest::Approx(6e-5).epsilon(1e-12));
  CHECK(g.detector_separation() == doctest::Approx(2e-5).epsilon(1e-12));
  // The on-axis source faces the on-axis detector dead ahead.
  CHECK(g.min_source_detector_distance() == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("propagation amplitude magnitude and phase") {
  const Geometry g = two_detector_geometry(4e-5, 2e-5, 0.2, 1e-6);
  const double r = (g.detectors[1] - g.sources[0]).norm();
  const Complex far = propagation_amplitude(g, 1, 0);
  CHECK(std::abs(far) == doctest::Approx(1.0 / 0.2).epsilon(1e-12));
  CHECK(std::arg(far) ==
        doctest::Approx(std::remainder(g.wavenumber() * r, 2.0 * kPi))
            .epsilon(1e-9));

  const Complex exact =
      propagation_amplitude(g, 1, 0, PropagationMode::exact);
  CHECK(std::abs(exact) == doctest::Approx(1.0 / r).epsilon(1e-12));
  CHECK(std::arg(exact) == doctest::Approx(std::arg(far)).epsilon(1e-12));

  // The path phase is ~1.2e6 rad, so trig argument reduction only leaves
  // about nine digits in this comparison.
  const Complex late = propagation_amplitude(g, 1, 0,
                                             PropagationMode::far_field, 0.7);
  CHECK(std::abs(late * std::polar(1.0, 0.7) - far) < 1e-8);

  CHECK_THROWS_AS(propagation_amplitude(g, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(propagation_amplitude(g, 0, -1), std::invalid_argument);
}

TEST_CASE("closed-form fringe values") {
  const Geometry g = two_detector_geometry(5e-5, 0.0, 0.2, 1e-6);
  // Zero baseline kills the propagation phase; the fringe is purely
  // geometric.
  CHECK(closed_form_propagation_phase(g) == doctest::Approx(0.0));
  CHECK(closed_form_coincidence(g, 0.0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(closed_form_coincidence(g, kPi / 2) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(closed_form_coincidence(g, kPi / 4) ==
        doctest::Approx(1.5).epsilon(1e-12));
  for (int i = 0; i < 40; ++i) {
    const double c = closed_form_coincidence(g, i * kPi / 40.0);
    CHECK(c >= 1.0 - 1e-12);
    CHECK(c <= 2.0 + 1e-12);
  }
}

TEST_CASE("propagation phase scales as 2 pi d_D d_S / (lambda l)") {
  const double d_S = 5e-5, l = 0.2, lambda = 1e-6;
  for (double d_D : {5e-6, 1e-5, 3e-5}) {
    const Geometry g = two_detector_geometry(d_S, d_D, l, lambda);
    const double phase = closed_form_propagation_phase(g);
    const double small_angle = 2.0 * kPi * d_D * d_S / (lambda * l);
    CHECK(phase == doctest::Approx(small_angle).epsilon(1e-6));
  }
  // Hence the fringe period in d_D is lambda l / d_S. A full period at
  // desk scale needs millimetre baselines, so scale the bench up to stay
  // inside the far-field envelope.
  const double big_d_s = 1e-3, big_l = 2.0;
  const double period = lambda * big_l / big_d_s;
  const Geometry a = two_detector_geometry(big_d_s, 1e-5, big_l, lambda);
  const Geometry b =
      two_detector_geometry(big_d_s, 1e-5 + period, big_l, lambda);
  CHECK(closed_form_propagation_phase(b) - closed_form_propagation_phase(a) ==
        doctest::Approx(2.0 * kPi).epsilon(1e-5));
}

TEST_CASE("propagation phase is antisymmetric in the detector pair") {
  Geometry g = two_detector_geometry(5e-5, 2e-5, 0.2, 1e-6);
  const double forward = closed_form_propagation_phase(g);
  std::swap(g.detectors[0], g.detectors[1]);
  CHECK(closed_form_propagation_phase(g) ==
        doctest::Approx(-forward).epsilon(1e-12));
}

TEST_CASE("closed form refuses the near field") {
  const Geometry g = two_detector_geometry(5e-5, 0.0, 4e-3, 1e-6);
  CHECK_FALSE(g.far_field_ok());
  CHECK_THROWS_AS(closed_form_coincidence(g, 0.0), ConfigError);
}
