#include "hbtsim/multislit.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "hbtsim/errors.hpp"

namespace hbtsim {

double sorkin_parameter(const SlitAmplitudes& amps) {
  const auto prob = [&](bool a, bool b, bool c) {
    Complex sum(0.0, 0.0);
    if (a) sum += amps.psi_a;
    if (b) sum += amps.psi_b;
    if (c) sum += amps.psi_c;
    return std::norm(sum);
  };
  return prob(true, true, true) - prob(true, true, false) -
         prob(false, true, true) - prob(true, false, true) +
         prob(true, false, false) + prob(false, true, false) +
         prob(false, false, true);
}

ExperimentSetup triple_setup(const Geometry& g, const PolarizationState& a,
                             const PolarizationState& b,
                             const PolarizationState& c, double n_b) {
  if (g.sources.size() != 3 || g.detectors.size() != 3)
    throw std::invalid_argument(
        "triple setup needs three sources and three detectors");
  ExperimentSetup setup;
  setup.geometry = g;
  setup.source_analysers = {Analyser::polarizer(a), Analyser::polarizer(b),
                            Analyser::polarizer(c)};
  setup.detector_analysers = {Analyser::unpolarized(), Analyser::unpolarized(),
                              Analyser::unpolarized()};
  setup.occupations = {n_b, n_b, n_b};
  return setup;
}

namespace {

void require_triple(const ExperimentSetup& setup) {
  setup.validate();
  if (setup.geometry.sources.size() != 3 ||
      setup.geometry.detectors.size() != 3)
    throw std::invalid_argument("expected three sources and three detectors");
  for (const Analyser& a : setup.detector_analysers)
    if (!a.is_unpolarized())
      throw std::invalid_argument("triple-setup detectors must be unpolarised");
}

double cyclic_cumulant_impl(const ExperimentSetup& setup) {
  const int triple[] = {0, 1, 2};
  double kappa = normally_ordered_moment(setup, triple);
  std::array<double, 3> m{};
  for (int d = 0; d < 3; ++d) {
    const int one[] = {d};
    m[static_cast<std::size_t>(d)] = normally_ordered_moment(setup, one);
  }
  kappa -= m[0] * m[1] * m[2];
  for (int d = 0; d < 3; ++d) {
    const int a = (d + 1) % 3;
    const int b = (d + 2) % 3;
    const int pair[] = {a, b};
    const double x = normally_ordered_moment(setup, pair) -
                     m[static_cast<std::size_t>(a)] *
                         m[static_cast<std::size_t>(b)];
    kappa -= x * m[static_cast<std::size_t>(d)];
  }
  return kappa;
}

}  // namespace

double triple_coincidence(const ExperimentSetup& setup) {
  require_triple(setup);
  const int triple[] = {0, 1, 2};
  return normally_ordered_moment(setup, triple);
}

double cyclic_cumulant(const ExperimentSetup& setup) {
  require_triple(setup);
  return cyclic_cumulant_impl(setup);
}

double multilinear_cyclic_term(const ExperimentSetup& setup) {
  require_triple(setup);
  double total = 0.0;
  for (int mask = 1; mask < 8; ++mask) {
    ExperimentSetup subset = setup;
    for (int s = 0; s < 3; ++s)
      if (!(mask & (1 << s))) subset.occupations[s] = 0.0;
    const int sign = (std::popcount(static_cast<unsigned>(mask)) % 2 == 1)
                         ? 1
                         : -1;
    total += sign * cyclic_cumulant_impl(subset);
  }
  return total;
}

namespace {

// Z for one geometry: the multilinear cyclic term equals 2 Re{Z tau}. Even
// permutations of the sources travel the 4 -> 5 -> 6 cycle against the
// projector order and pick up conj(tau), odd ones tau, whence
// Z = conj(V_even) + V_odd.
Complex cyclic_weight(const ExperimentSetup& setup) {
  Eigen::Matrix3cd u;
  for (int d = 0; d < 3; ++d)
    for (int s = 0; s < 3; ++s)
      u(d, s) = propagation_amplitude(setup.geometry, d, s, setup.mode);
  const auto chain = [&](int s, int t, int w) {
    const double occ = setup.occupations[0] * setup.occupations[1] *
                       setup.occupations[2];
    return occ * std::conj(u(0, s)) * u(1, s) * std::conj(u(1, t)) * u(2, t) *
           std::conj(u(2, w)) * u(0, w);
  };
  const Complex v_even = chain(0, 1, 2) + chain(1, 2, 0) + chain(2, 0, 1);
  const Complex v_odd = chain(0, 2, 1) + chain(2, 1, 0) + chain(1, 0, 2);
  return std::conj(v_even) + v_odd;
}

}  // namespace

GeometricIsolation geometric_isolation(const ExperimentSetup& setup) {
  require_triple(setup);
  if (!(setup.geometry.source_separation() > 0.0))
    throw std::invalid_argument(
        "cyclic-term isolation needs spatially separated sources");

  // Transverse offsets of detector 6 stepping the relative source phases by
  // about a quarter turn each; five offsets overdetermine the fit.
  const double step = setup.geometry.wavelength *
                      setup.geometry.nominal_distance /
                      (4.0 * setup.geometry.source_separation());
  const Eigen::Vector3d axis =
      (setup.geometry.sources[2] - setup.geometry.sources[0]).normalized();
  constexpr int kOffsets = 5;
  Eigen::MatrixXd design(kOffsets, 2);
  Eigen::VectorXd rhs(kOffsets);
  for (int g = 0; g < kOffsets; ++g) {
    ExperimentSetup shifted = setup;
    shifted.geometry.detectors[2] += g * step * axis;
    const Complex z = cyclic_weight(shifted);
    design(g, 0) = 2.0 * z.real();
    design(g, 1) = -2.0 * z.imag();
    rhs(g) = multilinear_cyclic_term(shifted);
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.singularValues()(1) < 1e-10 * svd.singularValues()(0))
    throw std::invalid_argument(
        "detector offsets failed to separate the cyclic term; "
        "geometry leaves the fit rank deficient");
  const Eigen::Vector2d tau_parts = svd.solve(rhs);
  const Complex tau(tau_parts(0), tau_parts(1));

  GeometricIsolation result;
  result.magnitude = std::abs(tau);

  // Source analysers in a triple setup are rank-1, so the sphere image is
  // well defined.
  std::array<PoincarePoint, 3> pts;
  for (int s = 0; s < 3; ++s)
    pts[static_cast<std::size_t>(s)] =
        poincare_of(Projector::from_matrix(setup.source_analysers[s].matrix()));
  int distinct = 1;
  for (int s = 1; s < 3; ++s) {
    bool fresh = true;
    for (int r = 0; r < s; ++r) {
      const double dx = pts[s].s1 - pts[r].s1;
      const double dy = pts[s].s2 - pts[r].s2;
      const double dz = pts[s].s3 - pts[r].s3;
      if (std::sqrt(dx * dx + dy * dy + dz * dz) < 1e-9) fresh = false;
    }
    if (fresh) ++distinct;
  }
  if (distinct < 3 || result.magnitude < 1e-6) {
    result.degenerate = true;
    result.phase = 0.0;
    return result;
  }
  result.phase = std::arg(tau);
  return result;
}

}  // namespace hbtsim
